//! `resonant`: command-line front end for resonance sets, triangular resonant
//! maps and their conjugates.
//!
//! Every subcommand prints one JSON document to standard output. Exit status
//! is 0 on success, 1 for a domain error (payload `{"error": NAME, ...}`) and
//! 2 for malformed flags or input files.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "resonant",
    version,
    about = "Resonance combinatorics and triangular resonant maps over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct WeightsArg {
    /// Comma-separated weights, e.g. `1,2,3`
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    weights: IntList,
}

#[derive(Debug, Clone)]
struct IntList(Vec<i64>);

fn parse_int_list(s: &str) -> Result<IntList, String> {
    if s.trim().is_empty() {
        return Ok(IntList(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer")))
        .collect::<Result<Vec<_>, _>>()
        .map(IntList)
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Resonance sets E_i, orders mu_i and the resonance order mu
    Resonance {
        #[command(flatten)]
        weights: WeightsArg,
        /// Report only E_i for this 1-based index
        #[arg(long)]
        index: Option<usize>,
    },
    /// Boundaries of the equal-weight blocks
    Partition {
        #[command(flatten)]
        weights: WeightsArg,
    },
    /// Random generation and inversion of triangular resonant maps
    Sigma {
        #[command(subcommand)]
        action: SigmaCommand,
    },
    /// Conjugate a linear map by sigma and report degree and resonance
    Conjugate {
        #[command(flatten)]
        weights: WeightsArg,
        /// sigma as JSON (`-` for stdin)
        #[arg(long)]
        sigma: PathBuf,
        /// Linear map as a row-major JSON array (`-` for stdin)
        #[arg(long)]
        linear: PathBuf,
    },
    /// Search for a sigma whose conjugate of a linear map exceeds the resonance order
    Violate {
        #[command(flatten)]
        weights: WeightsArg,
        #[arg(long)]
        linear: PathBuf,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Largest conjugate degree observed over random trials, with the mu^2 cap
    QuasiOrder {
        #[command(flatten)]
        weights: WeightsArg,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Recover (sigma, J) with sigma ∘ f = J ∘ sigma from a polynomial map f
    Solve {
        #[command(flatten)]
        weights: WeightsArg,
        /// Polynomial map, one component per line (`-` for stdin)
        #[arg(long)]
        map: PathBuf,
    },
    /// Admissible tensor exponents and the block pattern
    Bergman {
        #[command(flatten)]
        weights: WeightsArg,
    },
}

#[derive(Debug, Subcommand)]
enum SigmaCommand {
    /// Draw a random sigma
    Random {
        #[command(flatten)]
        weights: WeightsArg,
        #[arg(long)]
        seed: u64,
        /// Comma-separated rational coefficient pool
        #[arg(long, allow_hyphen_values = true)]
        pool: Option<String>,
    },
    /// Invert a sigma read from JSON
    Invert {
        /// sigma as JSON (`-` for stdin)
        #[arg(long)]
        map: PathBuf,
    },
}

fn run(cli: Cli) -> Result<serde_json::Value, CliError> {
    match cli.command {
        Command::Resonance { weights, index } => commands::resonance(&weights.weights.0, index),
        Command::Partition { weights } => commands::partition(&weights.weights.0),
        Command::Sigma {
            action: SigmaCommand::Random { weights, seed, pool },
        } => commands::sigma_random(&weights.weights.0, seed, pool.as_deref()),
        Command::Sigma {
            action: SigmaCommand::Invert { map },
        } => commands::sigma_invert(&map),
        Command::Conjugate { weights, sigma, linear } => commands::conjugate(&weights.weights.0, &sigma, &linear),
        Command::Violate {
            weights,
            linear,
            trials,
            seed,
        } => commands::violate(&weights.weights.0, &linear, trials, seed),
        Command::QuasiOrder { weights, trials, seed } => commands::quasi_order(&weights.weights.0, trials, seed),
        Command::Solve { weights, map } => commands::solve(&weights.weights.0, &map),
        Command::Bergman { weights } => commands::bergman(&weights.weights.0),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(value) => {
            println!("{}", serde_json::to_string(&value).expect("serializable"));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            if let Some(payload) = err.payload() {
                println!("{}", serde_json::to_string(&payload).expect("serializable"));
            }
            ExitCode::from(err.exit_code())
        }
    }
}
