//! `ringlab`: analyze finite rings, run the verification suites and manage
//! the ring catalog from the command line.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ringlab_core::constructors::CATALOG_ORDER_CAP;
use ringlab_core::source::DEFAULT_ORDER_CAP;

#[derive(Parser, Debug)]
#[command(
    name = "ringlab",
    version,
    about = "Finite ring analysis and theorem verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build one ring and report its element classes, radicals, spectrum and predicates.
    Analyze(AnalyzeArgs),
    /// Run verification suites over the catalog; exits 4 on any disagreement.
    Verify(VerifyArgs),
    /// List or dump the default catalog.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// List the available suite ids.
    Suites,
    /// Which powers of 2 are uniquely clean in Z/(p+1) for small primes p.
    Truncations(TruncationArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Caps {
    /// Largest ring order to build (overridable through RINGLAB_CAP).
    #[arg(long, env = "RINGLAB_CAP")]
    pub order_cap: Option<usize>,
    /// Largest ring order for ideal-lattice enumeration.
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(usize))]
    pub lattice_cap: usize,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// Ring source, e.g. `zmod:3`, `matrix:zmod:2:2` or `file:ring.json`.
    #[arg(long)]
    pub ring: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated suite ids; all suites when omitted.
    #[arg(long, value_delimiter = ',')]
    pub theorems: Option<Vec<String>>,
    /// Worker threads (defaults to every core).
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// One line per entry with order and a predicate summary.
    List(CatalogListArgs),
    /// Write one ring file per entry plus a manifest.
    Dump(CatalogDumpArgs),
}

#[derive(Args, Debug)]
pub struct CatalogListArgs {
    /// Keep entries where this predicate holds; prefix with `!` to negate.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also write the listed entries as ring files into this directory.
    #[arg(long)]
    pub dump_catalog: Option<PathBuf>,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Args, Debug)]
pub struct CatalogDumpArgs {
    #[arg(long)]
    pub dir: PathBuf,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Args, Debug)]
pub struct TruncationArgs {
    #[arg(long, default_value_t = 61)]
    pub max_p: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl Caps {
    fn order(&self, default: usize) -> usize {
        self.order_cap.unwrap_or(default)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => {
            let cap = a.caps.order(DEFAULT_ORDER_CAP);
            commands::analyze(&a, cap)
        }
        Command::Verify(v) => {
            let cap = v.caps.order(CATALOG_ORDER_CAP);
            commands::verify(&v, cap)
        }
        Command::Catalog(CatalogCommand::List(l)) => {
            let cap = l.caps.order(CATALOG_ORDER_CAP);
            commands::catalog_list(&l, cap)
        }
        Command::Catalog(CatalogCommand::Dump(d)) => {
            let cap = d.caps.order(CATALOG_ORDER_CAP);
            commands::catalog_dump(&d.dir, cap).map(|n| {
                println!("wrote {n} ring files to {}", d.dir.display());
            })
        }
        Command::Suites => {
            for s in ringlab_core::verify::all_suites() {
                println!("{s}");
            }
            Ok(())
        }
        Command::Truncations(t) => commands::truncations(&t),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ringlab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
