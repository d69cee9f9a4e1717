//! `lierig`: exact verification of rigid solvable real Lie algebras.
//!
//! Exit codes: 0 verified / success, 1 verification failure, 2 input error.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lierig_core::dsl::{self, AlgebraDocument};

#[derive(Parser)]
#[command(name = "lierig", version, about = "Exact-arithmetic verifier for rigid solvable real Lie algebras")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Suppress report output; the exit code carries the outcome
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the Jacobi identity and report diagnostics
    Check { file: PathBuf },
    /// Compute dim H^2(g, g)
    H2 {
        file: PathBuf,
        /// Fail (exit 1) unless dim H^2 = 0
        #[arg(long)]
        expect_rigid: bool,
    },
    /// Full cohomology report and fingerprint
    Report { file: PathBuf },
    /// Compute the nilradical of a solvable algebra
    Nilradical { file: PathBuf },
    /// Torus operations
    Torus {
        #[command(subcommand)]
        command: TorusCommand,
    },
    /// Compare two algebras by their invariant fingerprints
    Compare { file_a: PathBuf, file_b: PathBuf },
    /// Built-in catalog operations
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum TorusCommand {
    /// Validate a named torus block from the file
    Verify { file: PathBuf, torus: String },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List every catalog entry
    List,
    /// Verify all catalog claims: Jacobi, rigidity, nilradical pairing,
    /// pairwise non-isomorphism, diagonal-derivation audit
    Verify,
    /// Export every non-stub entry as a `.lie` file
    Export {
        /// Target directory (falls back to `LIERIG_CATALOG_DIR`)
        dir: Option<PathBuf>,
    },
}

/// Input-side failure: bad file, bad syntax, unknown name. Exit code 2.
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub fn load_document(path: &Path) -> Result<AlgebraDocument, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    dsl::parse(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if !cli.quiet {
        match cli.format {
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&outcome.report).expect("report serializes")
            ),
            Format::Text => {
                for line in &outcome.lines {
                    println!("{line}");
                }
            }
        }
    }
    ExitCode::from(if outcome.verified { 0 } else { 1 })
}

/// A command's result: machine report, text rendering, and verdict.
pub struct Outcome {
    pub verified: bool,
    pub report: serde_json::Value,
    pub lines: Vec<String>,
}

fn run(cli: &Cli) -> Result<Outcome, InputError> {
    match &cli.command {
        Command::Check { file } => report::check(file),
        Command::H2 { file, expect_rigid } => report::h2(file, *expect_rigid),
        Command::Report { file } => report::full(file),
        Command::Nilradical { file } => report::nilradical_of_file(file),
        Command::Torus {
            command: TorusCommand::Verify { file, torus },
        } => report::torus_verify(file, torus),
        Command::Compare { file_a, file_b } => report::compare(file_a, file_b),
        Command::Catalog { command } => match command {
            CatalogCommand::List => report::catalog_list(),
            CatalogCommand::Verify => report::catalog_verify(),
            CatalogCommand::Export { dir } => {
                let dir = dir
                    .clone()
                    .or_else(|| std::env::var_os("LIERIG_CATALOG_DIR").map(PathBuf::from))
                    .ok_or_else(|| {
                        InputError(
                            "no export directory given and LIERIG_CATALOG_DIR unset".into(),
                        )
                    })?;
                report::catalog_export(&dir)
            }
        },
    }
}
