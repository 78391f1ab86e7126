use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zeno_lab::report::{self, OutputFormat, TABLE1_DECIMALS, TABLE1_N_VALUES};
use zeno_lab::ZenoError;

/// Occupation vs survival probabilities of a two-level atom under repeated measurement.
#[derive(Parser)]
#[command(name = "zeno-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Occupation and survival-complement probabilities at T for a list of N.
    Table1 {
        #[arg(long, value_delimiter = ',', default_values_t = TABLE1_N_VALUES)]
        n: Vec<u32>,
        #[arg(long, default_value_t = TABLE1_DECIMALS)]
        decimals: u32,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Closed forms, rate model and optional Monte Carlo estimates for N in a range.
    Compare {
        #[arg(long, default_value_t = 1)]
        n_min: u32,
        #[arg(long, default_value_t = 64)]
        n_max: u32,
        #[arg(long)]
        mc_trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Every measurement history for N measurements with its probability.
    Histories {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: OutputFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e: ZenoError| e.to_string())
}

fn run(cli: Cli) -> Result<(), ZenoError> {
    let (document, output) = match cli.command {
        Command::Table1 { n, decimals, format, output } => {
            (report::cmd_table1(&n, decimals, format)?, output)
        }
        Command::Compare { n_min, n_max, mc_trials, seed, format, output } => {
            (report::cmd_compare(n_min, n_max, mc_trials, seed, format)?, output)
        }
        Command::Histories { n, format, output } => (report::cmd_histories(n, format)?, output),
    };
    let written = match output {
        Some(path) => fs::write(&path, document),
        None => io::stdout().lock().write_all(document.as_bytes()),
    };
    written.map_err(|e| ZenoError::Output(e.to_string()))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("zeno-lab: {err}");
            ExitCode::FAILURE
        }
    }
}
