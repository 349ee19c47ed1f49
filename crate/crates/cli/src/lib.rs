//! JSON documents, certificate files and the `pachner` command line.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod certificate;
mod commands;
pub mod document;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pachner_core::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Schema(_) | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Core(_) | CliError::Failed(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "pachner", version, about = "Bistellar moves on simplicial complexes, filtered manifolds and stratified spaces")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Document to read; standard input when absent or `-`.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Budget {
    /// Longest certificate considered.
    #[arg(long)]
    pub depth: Option<usize>,
    /// Largest number of states held by the search.
    #[arg(long)]
    pub nodes: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Checks a complex, filtration or stratified space.
    Validate(Input),
    /// Prints the f-vector, Euler characteristic and integral homology.
    Invariants(Input),
    #[command(subcommand)]
    Moves(MovesCommand),
    /// Flip-graph search between two complexes; prints a certificate.
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: PathBuf,
        /// Subcomplex the moves must leave unchanged.
        #[arg(long)]
        avoid: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Stratum-by-stratum alignment of two filtrations; prints a certificate.
    Align {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: PathBuf,
        #[command(flatten)]
        budget: Budget,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Heuristic reduction toward the boundary of a simplex.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_moves: Option<usize>,
        /// Where to write the reduced document.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Where to write the move certificate.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Prints a built-in example document.
    Demo {
        name: String,
        /// Dimension for sphere-boundary, rim size for wheel, point count for join-fan.
        size: Option<u32>,
    },
    /// Triangulates B x I around the suspension of a ball B.
    Extend {
        #[command(flatten)]
        input: Input,
        /// Vertex order used for the prism staircase, comma separated.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<u32>>,
        /// Labels of the two suspension apexes, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        apexes: Option<Vec<u32>>,
    },
    /// Counts move schemas for a filtration pattern or a stratified space.
    Census {
        /// Ambient dimension of a full flag.
        dimension: Option<usize>,
        /// Dimensions of the nonempty strata, comma separated.
        #[arg(long, value_delimiter = ',')]
        strata: Option<Vec<usize>>,
        /// A document to take the pattern from; standard input when no
        /// dimension is given.
        #[arg(long, short)]
        input: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum MovesCommand {
    /// Lists applicable moves.
    List {
        #[command(flatten)]
        input: Input,
        /// Extended moves of a filtration, or stark moves of a stratified space.
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        avoid: Option<PathBuf>,
    },
    /// Replays a certificate and prints the resulting document.
    Apply {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        sequence: PathBuf,
    },
    /// Seeded random walk; prints its certificate.
    Walk {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 5)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        avoid: Option<PathBuf>,
    },
}

pub(crate) fn read_text(path: Option<&Path>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        None => read_stdin(&mut text)?,
        Some(p) if p == Path::new("-") => read_stdin(&mut text)?,
        Some(p) => {
            text = std::fs::read_to_string(p)
                .map_err(|source| CliError::Io { path: p.display().to_string(), source })?;
        }
    }
    Ok(text)
}

fn read_stdin(buf: &mut String) -> Result<(), CliError> {
    std::io::stdin()
        .read_to_string(buf)
        .map(drop)
        .map_err(|source| CliError::Io { path: "standard input".into(), source })
}

pub(crate) fn write_to(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |source, path: &str| CliError::Io { path: path.to_string(), source };
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| io(e, &p.display().to_string())),
        None => out.write_all(text.as_bytes()).map_err(|e| io(e, "standard output")),
    }
}

/// Runs one command, writing its report to `out`. Returns the exit code of a
/// command that completed; errors carry their own.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    commands::dispatch(cli, out)
}
