//! Command-line front end for `qmono-core`: single-state analysis, sweeps
//! of the `ψ̃(p, ε)` family, and seeded verification campaigns.

pub mod analyze;
pub mod campaign;
pub mod config;
pub mod error;
pub mod fig1;
pub mod output;

use std::fs;

pub use config::{CampaignConfig, Command, Format};
pub use error::CliError;

/// What a successful run produced.
#[derive(Debug)]
pub struct RunOutput {
    pub text: String,
    /// Non-fatal notes for stderr.
    pub warnings: Vec<String>,
}

/// Executes `config` and renders its output without writing it anywhere.
/// Campaigns whose acceptance check fails return [`CliError::CheckFailed`]
/// after the rendered summary has been written by [`run`].
pub fn render(
    config: &CampaignConfig,
    state_path: Option<&str>,
) -> Result<(RunOutput, Option<CliError>), CliError> {
    config.validate()?;
    match config.command {
        Command::Analyze => {
            let path = state_path
                .ok_or_else(|| CliError::Usage("analyze requires --state PATH".into()))?;
            let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.to_string(),
                source,
            })?;
            let analysis = analyze::analyze_text(path, &text)?;
            let text = match config.format {
                Format::Json => output::json_text(&analysis),
                Format::Csv => analyze::analysis_csv(&analysis),
            };
            Ok((
                RunOutput {
                    text,
                    warnings: vec![],
                },
                None,
            ))
        }
        Command::Fig1 => {
            let rows = fig1::fig1_rows(config)?;
            let text = match config.format {
                Format::Csv => fig1::fig1_csv(&rows),
                Format::Json => output::json_text(&rows),
            };
            Ok((
                RunOutput {
                    text,
                    warnings: vec![],
                },
                None,
            ))
        }
        command => {
            let run = campaign::run_campaign(config)?;
            let text = match config.format {
                Format::Json => output::json_text(&run.summary),
                Format::Csv => run.csv(),
            };
            let mut warnings = vec![];
            let mut failure = None;
            if !run.summary.passed {
                let detail = format!(
                    "{} of {} samples passed",
                    run.summary.pass_count, run.summary.samples
                );
                if command == Command::GhzFraction {
                    let (lo, hi) = campaign::GHZ_FRACTION_BAND;
                    warnings.push(format!(
                        "non-monogamous fraction {:.4} outside the expected band [{lo}, {hi}]",
                        run.summary.violation_fraction.unwrap_or(f64::NAN)
                    ));
                } else {
                    failure = Some(CliError::CheckFailed {
                        command: command.to_string(),
                        detail,
                    });
                }
            }
            Ok((RunOutput { text, warnings }, failure))
        }
    }
}

/// Executes `config`, writes the result, and reports warnings on stderr.
pub fn run(config: &CampaignConfig, state_path: Option<&str>) -> Result<(), CliError> {
    let (out, failure) = render(config, state_path)?;
    output::emit(&out.text, config.output_path.as_deref())?;
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    match failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}
