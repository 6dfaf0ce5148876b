mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Exact computations with graded matrix factorizations of x^h.
#[derive(Parser, Debug)]
#[command(name = "mfcat", version)]
pub struct Cli {
    /// Emit compact single-line JSON.
    #[arg(long, global = true)]
    pub compact: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check Maurer-Cartan and homogeneity of an object file.
    Verify { file: PathBuf },
    /// Hom cohomology between two objects.
    Hom {
        source: PathBuf,
        target: PathBuf,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true, conflicts_with = "table")]
        degree: i64,
        /// Dimensions for every degree in [-window, window].
        #[arg(long, requires = "window")]
        table: bool,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Split an object into indecomposables and trivial pairs.
    Decompose {
        file: PathBuf,
        /// Include the base-change certificate.
        #[arg(long)]
        certificate: bool,
    },
    /// The Auslander-Reiten quiver on a window of gradings.
    Ar {
        #[arg(long)]
        h: u32,
        #[arg(long, default_value_t = 1)]
        window: i64,
    },
    /// Euler matrix, intersection form and Cartan comparison.
    Euler {
        #[arg(long)]
        h: u32,
        #[arg(long, value_enum, default_value_t = Source::Both)]
        source: Source,
    },
    /// Serre duality dimensions and trace pairings.
    Serre {
        #[arg(long)]
        h: u32,
        #[arg(long, default_value_t = 1)]
        range: i64,
    },
    #[command(subcommand)]
    Stability(StabilityCommand),
    #[command(subcommand)]
    Quiver(QuiverCommand),
    #[command(subcommand)]
    Weights(WeightsCommand),
    /// Run every check for one h and write the combined JSON.
    Report {
        #[arg(long)]
        h: u32,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded property checks for h up to --max-h.
    Selftest {
        #[arg(long, default_value_t = 8)]
        max_h: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum StabilityCommand {
    /// Harder-Narasimhan filtration of an object.
    Hn { file: PathBuf },
    /// Check the stability axioms on a window of labels and a random corpus.
    Check {
        #[arg(long)]
        h: u32,
        #[arg(long, default_value_t = 2)]
        window: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        corpus: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum QuiverCommand {
    /// Compare the factorization side with representations of A_{h-1}.
    Compare {
        #[arg(long)]
        h: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum WeightsCommand {
    /// Regularity and Milnor number of (a, b, c; h).
    Check {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        h: u32,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Mf,
    Quiver,
    Both,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli.command) {
        Ok((value, ok)) => {
            let text = if cli.compact {
                serde_json::to_string(&value)
            } else {
                serde_json::to_string_pretty(&value)
            }
            .expect("serializable");
            let mut out = std::io::stdout().lock();
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(out, "{text}");
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
