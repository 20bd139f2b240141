//! `schatten`: weak Schatten quasi-norms, Hölder inequality verification
//! and constant-saturation experiments with reproducible seeds.
//!
//! Exit codes: 0 success, 1 internal numeric failure, 2 usage or input
//! validation, 3 a proved inequality was breached (detecting a numerical
//! bug, distinct from user error so CI can gate on mathematical
//! correctness).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod meta;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or malformed input files (exit 2).
    Usage(String),
    /// A proved inequality failed beyond tolerance (exit 3).
    Violations(String),
    /// Numeric failure inside an otherwise valid run (exit 1).
    Internal(String),
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "schatten",
    version,
    about = "Weak Schatten quasi-norm toolkit",
    long_about = "Computes weak Schatten quasi-norms of finite-rank operators, verifies the \
two-factor Hölder inequalities (classical constant and renormalized constant 1), checks the \
singular-value product inequality, and measures how extremizer families saturate the optimal \
constant."
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Evaluate a weak quasi-norm of a matrix or spectrum file.
    Norms {
        /// Input path: matrix object or spectrum array (JSON).
        input: PathBuf,
        /// Quasi-norm exponent p.
        #[arg(long)]
        p: f64,
        /// Evaluate the renormalized norm sup (p t)^{1/p} mu(t) instead of
        /// the classical sup t^{1/p} mu(t).
        #[arg(long)]
        renormalized: bool,
    },
    /// Verify both Hölder forms on seeded Ginibre pairs; write a JSON report.
    Holder {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        /// Matrix dimension (dense path, at most 512).
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        trials: usize,
        /// Master seed; per-trial seeds derive from it deterministically.
        #[arg(long)]
        seed: u64,
        /// Relative verification tolerance.
        #[arg(long, default_value_t = schatten::tol::HOLDER_REL_TOL)]
        tol: f64,
        /// Report file path (JSON).
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the singular-value product inequality on seeded Ginibre pairs.
    Horn {
        /// Matrix dimension (checker cap 4096).
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Relative violation tolerance.
        #[arg(long, default_value_t = schatten::tol::HORN_REL_TOL)]
        tol: f64,
    },
    /// Sweep extremizer families over operator ranks; write CSV.
    Saturate {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        /// Either "lo..hi" (doubling steps) or a comma list, e.g. "64..1024"
        /// or "100,200,400".
        #[arg(long, default_value = "64..1048576")]
        sizes: String,
        /// Comma list from: commuting, pairing, pairing-best.
        #[arg(long, default_value = "commuting,pairing,pairing-best")]
        families: String,
        /// Fixed target rank for the pairing family (default round(sqrt(n))).
        #[arg(long)]
        k0: Option<usize>,
        /// Output CSV path.
        #[arg(long)]
        csv: PathBuf,
    },
    /// Monte-Carlo search for large Hölder ratios (lower bound on the constant).
    Search {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        q: f64,
        /// Matrix dimension (dense path, at most 512).
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Commands::Norms {
            input,
            p,
            renormalized,
        } => commands::cmd_norms(&input, p, renormalized),
        Commands::Holder {
            p,
            q,
            dim,
            trials,
            seed,
            tol,
            out,
        } => commands::cmd_holder(p, q, dim, trials, seed, tol, &out),
        Commands::Horn {
            dim,
            trials,
            seed,
            tol,
        } => commands::cmd_horn(dim, trials, seed, tol),
        Commands::Saturate {
            p,
            q,
            sizes,
            families,
            k0,
            csv,
        } => commands::cmd_saturate(p, q, &sizes, &families, k0, &csv),
        Commands::Search {
            p,
            q,
            dim,
            trials,
            seed,
        } => commands::cmd_search(p, q, dim, trials, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Violations(msg)) => {
            eprintln!("VIOLATION: {msg}");
            ExitCode::from(3)
        }
    }
}
