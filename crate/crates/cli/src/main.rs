use std::process::ExitCode;

use clap::Parser;

use qmono_cli::{run, CampaignConfig, Command, Format};

/// Discord and entanglement monogamy for few-qubit states.
#[derive(Debug, Parser)]
#[command(name = "qmono", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,

    /// Master seed for campaigns.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Number of random samples (campaigns only).
    #[arg(long)]
    samples: Option<usize>,

    /// Points on the p axis, endpoints included (fig1 only).
    #[arg(long)]
    grid: Option<usize>,

    /// Comma-separated epsilon curves (fig1 only).
    #[arg(long, value_delimiter = ',')]
    epsilons: Option<Vec<f64>>,

    /// Per-sample acceptance tolerance.
    #[arg(long = "tol")]
    tolerance: Option<f64>,

    /// Output file; stdout when omitted.
    #[arg(long = "out")]
    out: Option<String>,

    #[arg(long, value_enum)]
    format: Option<Format>,

    /// State file (analyze only).
    #[arg(long)]
    state: Option<String>,
}

impl Args {
    fn config(&self) -> CampaignConfig {
        let base = CampaignConfig::new(self.command);
        CampaignConfig {
            seed: self.seed,
            samples: self.samples.unwrap_or(base.samples),
            grid_points: self.grid.unwrap_or(base.grid_points),
            epsilons: self.epsilons.clone().unwrap_or(base.epsilons.clone()),
            tolerance: self.tolerance.unwrap_or(base.tolerance),
            output_path: self.out.clone(),
            format: self.format.unwrap_or(base.format),
            ..base
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&args.config(), args.state.as_deref()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qmono: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
