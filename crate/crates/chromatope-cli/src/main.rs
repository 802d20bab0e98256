//! Command-line front end: builds polytopes, unfolds nets, synthesizes
//! stars, iterates fractals, renders color representations, and
//! regenerates the figure gallery, each with a deterministic report.
//!
//! Exit status: 0 when every embedded verification passes, 1 when one
//! fails, 2 for usage or domain errors. Flagged discrepancies in the
//! source text's arithmetic are reported without failing the run.

use std::fmt;
use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod build;
mod config;
mod figures;
mod fractal;
mod net;
mod render;
mod report;
mod star;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cube,
    Simplex,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Cube => "cube",
            Family::Simplex => "simplex",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Shape {
    Cube,
    Simplex,
    Corner,
    TruncatedCube,
    TruncatedSimplex,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Cube => "cube",
            Shape::Simplex => "simplex",
            Shape::Corner => "corner",
            Shape::TruncatedCube => "truncated-cube",
            Shape::TruncatedSimplex => "truncated-simplex",
        })
    }
}

#[derive(Parser)]
#[command(
    name = "chromatope",
    about = "Color representations of polytopes, nets, stars, and triadic fractals",
    version
)]
struct Cli {
    /// Raster resolution (star frames) and grid density (field renders).
    #[arg(long, global = true)]
    res: Option<usize>,
    /// Output directory; defaults to $CHROMATOPE_OUT, then ./out.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Flat key=value config file (keys: res, out); flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polytope and verify its element counts and Euler check.
    Build { family: Family, n: usize },
    /// Unfold a polytope and recount its elements through the net.
    Net { family: Family, n: usize },
    /// Synthesize a {p/q} star from layers and compare to the reference.
    Star { p: u32, q: u32 },
    /// Iterate a triadic keep rule and verify counts and measures.
    Fractal {
        d: usize,
        m: usize,
        /// Subdivision depth; defaults to the per-dimension ceiling.
        #[arg(long)]
        level: Option<u32>,
    },
    /// Render a solid's color representation with its legend.
    Render { shape: Shape, n: usize },
    /// Regenerate the figure gallery with a sha256 manifest.
    Figures,
}

fn run(cli: Cli) -> Result<report::Outcome, CliError> {
    let cfg = config::resolve(cli.res, cli.out, cli.config)?;
    match cli.command {
        Command::Build { family, n } => build::run(family, n, &cfg),
        Command::Net { family, n } => net::run(family, n, &cfg),
        Command::Star { p, q } => star::run(p, q, &cfg),
        Command::Fractal { d, m, level } => fractal::run(d, m, level, &cfg),
        Command::Render { shape, n } => render::run(shape, n, &cfg),
        Command::Figures => figures::run(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            outcome.report.print();
            if outcome.report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Io(error)) => {
            eprintln!("error: {error}");
            ExitCode::from(1)
        }
    }
}
