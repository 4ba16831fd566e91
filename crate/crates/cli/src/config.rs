use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Analyze,
    Fig1,
    WCampaign,
    KwCampaign,
    LuoCampaign,
    GhzFraction,
    MixedIneq,
}

impl Command {
    pub fn is_campaign(self) -> bool {
        !matches!(self, Command::Analyze | Command::Fig1)
    }

    pub fn default_samples(self) -> usize {
        match self {
            Command::WCampaign => 500,
            Command::KwCampaign => 100,
            Command::LuoCampaign => 200,
            Command::GhzFraction => 1000,
            Command::MixedIneq => 200,
            Command::Analyze | Command::Fig1 => 1,
        }
    }

    /// Per-sample acceptance tolerance.
    pub fn default_tolerance(self) -> f64 {
        match self {
            Command::WCampaign => 1e-8,
            Command::KwCampaign => 1e-5,
            Command::LuoCampaign | Command::MixedIneq => qmono_core::tol::OPTIMIZER,
            Command::GhzFraction | Command::Analyze | Command::Fig1 => qmono_core::tol::IDENTITY,
        }
    }

    pub fn default_format(self) -> Format {
        match self {
            Command::Fig1 => Format::Csv,
            _ => Format::Json,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Command::Analyze => "analyze",
            Command::Fig1 => "fig1",
            Command::WCampaign => "w-campaign",
            Command::KwCampaign => "kw-campaign",
            Command::LuoCampaign => "luo-campaign",
            Command::GhzFraction => "ghz-fraction",
            Command::MixedIneq => "mixed-ineq",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::Usage(format!("unknown format {other:?}"))),
        }
    }
}

pub const DEFAULT_EPSILONS: [f64; 4] = [1.0, 0.75, 0.5, 0.01];
pub const DEFAULT_GRID_POINTS: usize = 101;

/// Fully resolved run configuration. Campaign summaries embed it verbatim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub command: Command,
    pub samples: usize,
    pub seed: u64,
    pub grid_points: usize,
    pub epsilons: Vec<f64>,
    pub tolerance: f64,
    /// `None` writes to stdout.
    pub output_path: Option<String>,
    pub format: Format,
}

impl CampaignConfig {
    /// Defaults for `command`.
    pub fn new(command: Command) -> Self {
        Self {
            command,
            samples: command.default_samples(),
            seed: 0,
            grid_points: DEFAULT_GRID_POINTS,
            epsilons: DEFAULT_EPSILONS.to_vec(),
            tolerance: command.default_tolerance(),
            output_path: None,
            format: command.default_format(),
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.samples < 1 {
            return Err(CliError::Usage("samples must be at least 1".into()));
        }
        if self.grid_points < 2 {
            return Err(CliError::Usage("grid must have at least 2 points".into()));
        }
        if self.epsilons.is_empty() {
            return Err(CliError::Usage("epsilons must not be empty".into()));
        }
        if let Some(e) = self.epsilons.iter().find(|e| !(0.0..=1.0).contains(*e)) {
            return Err(CliError::Usage(format!("epsilon {e} outside [0, 1]")));
        }
        if !(self.tolerance >= 0.0) {
            return Err(CliError::Usage("tolerance must be non-negative".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        for cmd in [
            Command::Fig1,
            Command::WCampaign,
            Command::KwCampaign,
            Command::LuoCampaign,
            Command::GhzFraction,
            Command::MixedIneq,
        ] {
            CampaignConfig::new(cmd).validate().unwrap();
        }
    }

    #[test]
    fn rejects_bad_config() {
        let mut c = CampaignConfig::new(Command::Fig1);
        c.grid_points = 1;
        assert!(c.validate().is_err());
        let mut c = CampaignConfig::new(Command::Fig1);
        c.epsilons = vec![1.5];
        assert!(c.validate().is_err());
        let mut c = CampaignConfig::new(Command::KwCampaign);
        c.samples = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn command_names_match_cli() {
        assert_eq!(Command::WCampaign.to_string(), "w-campaign");
        assert_eq!(
            serde_json::to_string(&Command::GhzFraction).unwrap(),
            "\"ghz-fraction\""
        );
    }
}
