mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

/// Finite semigroup structure: Green's relations, kernels, Rees
/// decompositions and exhaustive verification over generated corpora.
#[derive(Debug, Parser)]
#[command(name = "semikit", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a table file is an associative Cayley table.
    Validate { file: PathBuf },
    /// Idempotents, center and structural predicates.
    Report { file: PathBuf },
    /// Green's classes and egg-box diagrams.
    Greens {
        file: PathBuf,
        /// Also write the egg-box diagram as a DOT graph.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Kernel, its idempotents, minimal one-sided ideals.
    Kernel { file: PathBuf },
    /// Rees matrix decomposition of a completely simple semigroup.
    Decompose {
        file: PathBuf,
        #[arg(long, value_name = "K")]
        base_idempotent: Option<usize>,
        /// Write the Rees matrix presentation as a `.rms` file.
        #[arg(long, value_name = "PATH")]
        emit_rms: Option<PathBuf>,
    },
    /// Rees quotient by a two-sided ideal.
    Quotient {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        ideal: Vec<usize>,
    },
    /// Every subsemigroup.
    Subsemigroups {
        file: PathBuf,
        /// Largest order to enumerate.
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
    },
    /// Generate from a descriptor such as `cyclic:3`, `rect_band:2x2`,
    /// `rees:2x2:z2:1`, `transform:5:3:7` or `census:3`.
    Gen {
        descriptor: String,
        #[arg(short, long, value_name = "PATH")]
        output: PathBuf,
    },
    /// Every semigroup up to isomorphism, written as a corpus directory.
    Census {
        #[arg(long, value_name = "N")]
        max_order: usize,
        #[arg(short, long, value_name = "DIR")]
        output: PathBuf,
        /// Identify each semigroup with its opposite.
        #[arg(long)]
        fold_opposites: bool,
    },
    /// Run the verification suite over a corpus directory or one file.
    #[command(group(ArgGroup::new("input").required(true).args(["corpus", "file"])))]
    Verify {
        #[arg(long, value_name = "DIR")]
        corpus: Option<PathBuf>,
        file: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
