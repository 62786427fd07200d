//! `wsapprox`: run weighted-sum approximation algorithms, verify their
//! guarantees by brute force, generate instances and export plot data.

mod approximate;
mod error;
mod generate;
mod io;
mod oracle;
mod plot;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use error::{CliError, CliResult, USAGE};

#[derive(Debug, Parser)]
#[command(name = "wsapprox", version, about = "Multi-factor approximation via weighted sums")]
struct Cli {
    /// Worker threads for the parallel parts (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run grid, bisect or ptas and write a JSON report
    Approximate(approximate::ApproximateArgs),
    /// Check a solution set against a guarantee family
    Verify(verify::VerifyArgs),
    /// Brute-force Pareto front, supported set or the max construction check
    Oracle(oracle::OracleArgs),
    /// Write CSV plot data for a biobjective report
    ExportPlot(plot::ExportPlotArgs),
    /// Write a generated instance as JSON
    Generate(generate::GenerateArgs),
}

fn run(cli: Cli) -> CliResult<u8> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::usage("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::usage(format!("cannot start thread pool: {e}")))?;
    }
    match cli.command {
        Command::Approximate(a) => approximate::run(a),
        Command::Verify(a) => verify::run(a),
        Command::Oracle(a) => oracle::run(a),
        Command::ExportPlot(a) => plot::run(a),
        Command::Generate(a) => generate::run(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
