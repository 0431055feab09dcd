use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symtc::Generator;

use crate::commands::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "symtc",
    version,
    about = "Symmetric squares and TC^Σ bounds of simplicial complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Mod-2 Betti numbers of X, X×X, SP²(X) and dX.
    Homology(Options),
    /// Cohomology rings, multiplication tables and the maps between them.
    Ring(Options),
    /// Lower and upper bounds for symmetrized topological complexity.
    Bounds(Options),
    /// Print the input complex in the text or JSON format.
    Generate(Options),
}

#[derive(Args, Debug)]
pub struct Options {
    /// Complex file (text or JSON).
    #[arg(long = "in", value_name = "FILE", conflicts_with = "generate")]
    pub input: Option<PathBuf>,
    /// Built-in complex: sphere:N, torus, rp2, point, interval.
    #[arg(long, value_name = "NAME[:PARAM]")]
    pub generate: Option<String>,
    /// Declared connectivity s of X (default 0).
    #[arg(long, short = 's', value_name = "S")]
    pub connectivity: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for cached symmetric-square constructions.
    #[arg(long, value_name = "DIR", env = "SYMTC_CACHE_DIR")]
    pub cache: Option<PathBuf>,
    /// Write orbit tables and coboundary matrices to stderr.
    #[arg(long)]
    pub dump_debug: bool,
    /// Report stage timings on stderr.
    #[arg(long, short)]
    pub verbose: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Homology,
    Ring,
    Bounds,
    Generate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Generator(Generator),
    File(PathBuf),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub source: Source,
    pub connectivity: usize,
    pub connectivity_declared: bool,
    pub format: Format,
    pub cache: Option<PathBuf>,
    pub dump_debug: bool,
    pub verbose: bool,
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let (command, opts) = match cli.command {
            Command::Homology(o) => (CommandKind::Homology, o),
            Command::Ring(o) => (CommandKind::Ring, o),
            Command::Bounds(o) => (CommandKind::Bounds, o),
            Command::Generate(o) => (CommandKind::Generate, o),
        };
        let source = match (opts.input, opts.generate) {
            (Some(path), None) => Source::File(path),
            (None, Some(name)) => Source::Generator(name.parse()?),
            _ => {
                return Err(CliError::Input(
                    "exactly one of --in FILE or --generate NAME is required".into(),
                ))
            }
        };
        Ok(RunConfig {
            command,
            source,
            connectivity: opts.connectivity.unwrap_or(0),
            connectivity_declared: opts.connectivity.is_some(),
            format: opts.format,
            cache: opts.cache.filter(|p| !p.as_os_str().is_empty()),
            dump_debug: opts.dump_debug,
            verbose: opts.verbose,
        })
    }
}
