//! `ellone`: batch front end for exact chain-level computations.
//!
//! Every command prints a JSON run report. Exit codes: 0 success, 2 parse
//! error, 3 precondition violation, 4 resource cap.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use ellone::groupcoh::bar::DEFAULT_DEGREE_CAP;
use ellone::groupcoh::group::DEFAULT_ORDER_CAP;
use ellone::groupcoh::Caps;
use ellone::seminorm::PivotRule;
use ellone::simplicial::subdivision::DEFAULT_ROUND_CAP;
use ellone::Error;

use commands::{Bruhat, Mode};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Core(Error::Parse(_)) => 2,
            CliError::Core(Error::CapExceeded(_) | Error::XiCapExceeded { .. }) => 4,
            CliError::Core(_) => 3,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ellone", version, about = "Exact chain-level homological computations")]
struct Cli {
    /// Also write the report to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,

    /// Add a display-only decimal rendering of every exact value.
    #[arg(long, global = true)]
    decimal: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology and cohomology ranks of a complex.
    Homology {
        complex: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// l1 seminorm of a cycle, linf seminorm of a cocycle, or both with the duality check.
    Seminorm {
        complex: PathBuf,
        input: PathBuf,
        #[arg(long, value_enum, default_value = "l1")]
        mode: Mode,
        /// Write the LP certificates here instead of into the report.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Same as `seminorm --mode duality`.
    Duality {
        complex: PathBuf,
        cycle: PathBuf,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Iterated barycentric subdivision with exact count checks and timings.
    BenchSubdivide {
        complex: PathBuf,
        #[arg(long, default_value_t = 1)]
        rounds: usize,
        #[arg(long, default_value_t = DEFAULT_ROUND_CAP)]
        cap: usize,
        /// Include the vertex provenance of every round.
        #[arg(long)]
        provenance: bool,
    },
    /// Subdivision depth `xi` of every simplex for a cover.
    Cover { complex: PathBuf, cover: PathBuf },
    /// Cohomology of a finite group with real coefficients via the bar complex.
    Groupcoh {
        group: PathBuf,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Largest accepted group order.
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        cap: usize,
    },
    /// Transfer of a subgroup-invariant cochain.
    Transfer { datum: PathBuf, cochain: PathBuf },
    /// theta on the circle covered by the integer line, or on a cone.
    Theta {
        cochain: PathBuf,
        /// Number of edges of the base circle.
        #[arg(long)]
        edges: Option<usize>,
        /// A complex that is a cone, with `--apex`.
        #[arg(long, requires = "apex")]
        cone: Option<PathBuf>,
        #[arg(long)]
        apex: Option<usize>,
        #[arg(long, value_enum, default_value = "hat")]
        bruhat: Bruhat,
    },
    /// Primitive of a 1-cochain that vanishes on cycles.
    Integrate1 {
        cochain: PathBuf,
        #[arg(long, conflicts_with = "covering")]
        complex: Option<PathBuf>,
        /// A covering; the primitive is also split into averaged and invariant parts.
        #[arg(long)]
        covering: Option<PathBuf>,
    },
}

fn run(cli: &Cli) -> Result<report::RunReport, CliError> {
    let rule = PivotRule::from_env()?;
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Homology { complex, degree } => commands::homology(complex, *degree)?,
        Command::Seminorm { complex, input, mode, certificate } => {
            commands::seminorm(complex, input, *mode, certificate.as_deref(), rule)?
        }
        Command::Duality { complex, cycle, certificate } => {
            commands::seminorm(complex, cycle, Mode::Duality, certificate.as_deref(), rule)?
        }
        Command::BenchSubdivide { complex, rounds, cap, provenance } => {
            commands::bench_subdivide(complex, *rounds, *cap, *provenance)?
        }
        Command::Cover { complex, cover } => commands::cover(complex, cover)?,
        Command::Groupcoh { group, degree, cap } => {
            commands::groupcoh(group, *degree, Caps { order: *cap, degree: DEFAULT_DEGREE_CAP })?
        }
        Command::Transfer { datum, cochain } => commands::transfer(datum, cochain)?,
        Command::Theta { cochain, edges, cone, apex, bruhat } => {
            let cone = cone.as_deref().zip(*apex);
            commands::theta(cochain, *edges, cone, *bruhat)?
        }
        Command::Integrate1 { cochain, complex, covering } => {
            commands::integrate1(complex.as_deref(), covering.as_deref(), cochain)?
        }
    };
    report.time("wall_seconds", start.elapsed().as_secs_f64());
    Ok(if cli.decimal { report.with_decimal() } else { report })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = report.to_pretty();
            println!("{text}");
            if let Some(path) = cli.report.as_deref() {
                if let Err(source) = std::fs::write(path, format!("{text}\n")) {
                    let e = CliError::Io { path: path.to_path_buf(), source };
                    eprintln!("error: {e}");
                    return ExitCode::from(e.exit_code());
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
