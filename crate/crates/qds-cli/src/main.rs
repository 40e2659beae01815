mod config;
mod rows;
mod runner;

use std::process::ExitCode;

use clap::Parser;

use crate::config::Command;

/// Quantum-density soliton laboratory.
#[derive(Debug, Parser)]
#[command(name = "qds", version, about)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Debug, clap::Subcommand)]
enum CliCommand {
    /// Verify the compact soliton against the hydrodynamic balances.
    SolitonVerify(RunArgs),
    /// Wall matching of the three-region densities at one setup.
    Scatter(RunArgs),
    /// Traversal and tunneling times at one setup.
    TunnelTime(RunArgs),
    /// Sweep the full comparison record along a parameter axis.
    Sweep(RunArgs),
    /// Loop phase winding and flux quantization at one setup.
    Flux(RunArgs),
    /// Side-by-side soliton-model vs linear-reference record.
    Compare(RunArgs),
}

#[derive(Debug, clap::Args)]
struct RunArgs {
    /// Run configuration (JSON).
    #[arg(long)]
    config: String,
    /// Override the configured output path.
    #[arg(long)]
    output: Option<String>,
    /// Override the configured output format.
    #[arg(long, value_parser = ["csv", "json"])]
    format: Option<String>,
    /// Worker threads for sweep rows (1 = serial).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Accepted and ignored: all computations are deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

impl CliCommand {
    fn split(self) -> (Command, RunArgs) {
        match self {
            CliCommand::SolitonVerify(a) => (Command::SolitonVerify, a),
            CliCommand::Scatter(a) => (Command::Scatter, a),
            CliCommand::TunnelTime(a) => (Command::TunnelTime, a),
            CliCommand::Sweep(a) => (Command::Sweep, a),
            CliCommand::Flux(a) => (Command::Flux, a),
            CliCommand::Compare(a) => (Command::Compare, a),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help/version requests are not validation failures.
            if err.use_stderr() {
                eprintln!("{err}");
                return ExitCode::from(runner::EXIT_VALIDATION);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    let (command, args) = cli.command.split();
    match runner::run(command, &args.config, args.output, args.format, args.jobs) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
