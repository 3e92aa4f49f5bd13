//! `fmcheck`: checks F-manifold structures, spectral covers and point
//! algebras described in JSON spec files.

mod commands;
mod report;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fmcheck_core::fstructure::Route;

use commands::Options;
use spec::ManifoldSpec;

/// Hard errors; everything else is a check result inside a report.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable file, invalid JSON or expression, bad arguments.
    Spec(String),
    /// Gröbner pair budget exhausted.
    Budget(usize),
    /// A condition that indicates a bug rather than bad input.
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Spec(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Spec(m) => write!(f, "{m}"),
            CliError::Budget(p) => write!(f, "Groebner budget exceeded after {p} pairs (raise --budget)"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RouteArg {
    Identity,
    Spectral,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "fmcheck", version, about = "Exact checks for F-manifold structures and their spectral covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// How to decide the F-manifold identity.
    #[arg(long, global = true, value_enum, default_value = "both")]
    route: RouteArg,
    /// Number of seeded sample points when the spec lists none.
    #[arg(long, global = true, default_value_t = 5)]
    samples: usize,
    /// Overrides the spec's seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Maximum number of S-pairs per Gröbner basis.
    #[arg(long, global = true, default_value_t = 50_000)]
    budget: usize,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Adds per-check wall-clock times (reports are then not reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Runs every check the spec supports.
    Check { spec: PathBuf },
    /// Prints the spec of an example family.
    Example {
        #[arg(long)]
        family: u8,
        #[arg(long)]
        n: usize,
        /// rho2..rhon for family 1, in order; all zero when omitted.
        #[arg(long = "rho", allow_hyphen_values = true)]
        rho: Vec<String>,
    },
    /// Builds the two Euler fields of a grading.
    Euler { spec: PathBuf },
    /// Analyses the algebra at each sample point, or the spec's algebra block.
    Fiber { spec: PathBuf },
    /// Poisson stability of the radical of the spectral cover ideal.
    RadicalStable { spec: PathBuf },
    /// Poisson stability of the ideal itself.
    PoissonStable { spec: PathBuf },
}

fn read_spec(path: &PathBuf) -> Result<ManifoldSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Spec(format!("cannot read {}: {e}", path.display())))?;
    ManifoldSpec::from_json(&text)
}

fn run(cli: &Cli) -> Result<Option<report::Report>, CliError> {
    let opts = Options {
        route: match cli.route {
            RouteArg::Identity => Route::Identity,
            RouteArg::Spectral => Route::Spectral,
            RouteArg::Both => Route::Both,
        },
        samples: cli.samples,
        seed: cli.seed,
        budget: cli.budget,
        timings: cli.timings,
    };
    let report = match &cli.command {
        Command::Check { spec } => commands::check(&read_spec(spec)?, &opts)?,
        Command::Euler { spec } => commands::euler(&read_spec(spec)?, &opts)?,
        Command::Fiber { spec } => commands::fiber(&read_spec(spec)?, &opts)?,
        Command::RadicalStable { spec } => commands::radical_stable(&read_spec(spec)?, &opts)?,
        Command::PoissonStable { spec } => commands::poisson_stable(&read_spec(spec)?, &opts)?,
        Command::Example { family, n, rho } => {
            print!("{}", commands::example(*family, *n, rho, cli.seed.unwrap_or(0))?.to_json());
            return Ok(None);
        }
    };
    Ok(Some(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(report)) => {
            match cli.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => print!("{}", report.render_json()),
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
