//! `fquad` — optimal quadrature for Fourier integrals from the command line.
//!
//! Four commands: `coeffs` emits a weight set, `integrate` applies the rule
//! to a built-in integrand or a sample file, `tables` reproduces the
//! published error grid with pass/fail per cell, and `verify` cross-checks
//! the closed forms against the dense solve plus the kernel identities.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 when a numeric tolerance
//! is breached.

mod commands;
mod config;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

use config::{CliError, OutputFormat};

#[derive(Parser, Debug)]
#[command(
    name = "fquad",
    version,
    about = "Optimal quadrature rules for Fourier integrals on [a, b]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute an optimal weight set and emit it as JSON or CSV
    Coeffs(CoeffsArgs),
    /// Apply the rule to an integrand and report approx, exact and R
    Integrate(IntegrateArgs),
    /// Reproduce the published error grid on [-1, 1] with pass/fail cells
    Tables(TablesArgs),
    /// Cross-check closed forms against the dense solve and the kernel identities
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Left endpoint (default -1)
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Right endpoint (default 1)
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    /// Node count N; comma-separated list where a grid is accepted
    #[arg(long = "N", value_delimiter = ',')]
    n: Option<Vec<u32>>,
    /// Frequency omega; comma-separated list where a grid is accepted
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    omega: Option<Vec<f64>>,
    /// Resonance-band width relative to max(1, |omega h|), in (0, 1e-6]
    #[arg(long = "eps-res")]
    eps_res: Option<f64>,
    /// Output format where both are supported
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Write output to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key = value configuration file; flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct IntegrateArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Built-in integrand: one, x, exp_x or x_exp_x
    #[arg(long)]
    integrand: Option<String>,
    /// CSV sample file (x,re,im) on the exact lattice; replaces --integrand
    #[arg(long)]
    samples: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Render the grid in mantissa(exponent) style instead of CSV/JSON
    #[arg(long = "paper-style")]
    paper_style: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Test hook: perturb one closed-form weight to prove breaches are caught
    #[arg(long = "inject-perturbation", hide = true)]
    inject_perturbation: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{err}");
                    ExitCode::from(1)
                }
            };
        }
    };
    let result = match cli.command {
        Command::Coeffs(args) => commands::coeffs::run(args),
        Command::Integrate(args) => commands::integrate::run(args),
        Command::Tables(args) => commands::tables::run(args),
        Command::Verify(args) => commands::verify::run(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Numeric(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
