//! Command-line front end for the Hopf Galois classifier: tables of
//! verdicts, intermediate-field scans and verification suites, rendered as
//! text or JSON.

pub mod commands;
pub mod error;
pub mod report;
pub mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{cmd_classify_all, cmd_intermediate, load_catalog, Context, CATALOG_ENV};
pub use error::{CliError, Result};
pub use report::{ReportDocument, ReportRow, SCHEMA_VERSION};
pub use verify::{cmd_verify, Suite};

/// Exit code when every row is decided and every check passes.
pub const EXIT_OK: i32 = 0;
/// Exit code for a failed check or an internal error.
pub const EXIT_ERROR: i32 = 1;
/// Exit code when some row is undecided.
pub const EXIT_UNDECIDED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hopf-galois", version, about = "Decide which separable extensions, given by Galois group data, are Hopf Galois")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Search nodes allowed per holomorph search.
    #[arg(long, global = true, default_value_t = hopf_galois_core::permcore::DEFAULT_BUDGET)]
    pub budget: u64,

    /// Catalog file to use instead of the built-in one. Also read from HG_CATALOG.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,

    /// Worker threads for rows; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Add per-row times in milliseconds. Output then differs between runs.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the natural extension of every transitive group of a degree.
    ClassifyAll {
        #[arg(long)]
        degree: usize,
        /// Only groups of this order.
        #[arg(long)]
        order: Option<u64>,
    },
    /// Classify every intermediate field of one transitive group.
    Intermediate {
        #[arg(long)]
        degree: usize,
        /// Transitive group label such as 6T13.
        #[arg(long)]
        group: String,
        /// Only intermediate fields of this degree over the base.
        #[arg(long)]
        order: Option<u64>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Catalog,
    Oracle,
    Holomorph,
    Transitivity,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Catalog => Suite::Catalog,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::Holomorph => Suite::Holomorph,
            SuiteArg::Transitivity => Suite::Transitivity,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Runs a parsed command line. Returns the rendered report and the exit code.
pub fn run(cli: &Cli) -> Result<(String, i32)> {
    let ctx = Context {
        catalog: load_catalog(cli.catalog.as_deref())?,
        budget: cli.budget,
        jobs: cli.jobs,
        timing: cli.timing,
    };
    let doc = match &cli.command {
        Command::ClassifyAll { degree, order } => cmd_classify_all(*degree, *order, &ctx)?,
        Command::Intermediate { degree, group, order } => cmd_intermediate(*degree, group, *order, &ctx)?,
        Command::Verify { suite } => cmd_verify((*suite).into(), &ctx),
    };
    let code = if doc.has_failures() {
        EXIT_ERROR
    } else if doc.has_undecided() {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    };
    let text = match cli.format {
        Format::Text => doc.to_text(),
        Format::Json => doc.to_json() + "\n",
    };
    Ok((text, code))
}
