//! `census`: lens-space counts, one-vertex triangulation enumeration, the non-orientable
//! census at complexity 6 and 7, and counting checks on minimal-candidate spines.

mod lens;
mod nonorientable;
mod output;
mod spines;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Emit;

/// Exit status for a run whose output disagrees with the embedded expectations.
const MISMATCH: u8 = 2;
/// Exit status for bad arguments or input.
const USAGE: u8 = 1;

#[derive(Parser, Debug)]
#[command(name = "census", version, about = "Complexity censuses of closed 3-manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lens spaces by complexity, with canonical representatives.
    LensCensus {
        /// Largest complexity, at most 12.
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=12))]
        cmax: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Closed one-vertex triangulations with up to `n` tetrahedra, up to isomorphism.
    EnumerateSpines {
        /// Largest number of tetrahedra, at most 6; 6 takes hours.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=6))]
        n: u64,
        /// Skip tables whose spines are certainly not minimal while enumerating.
        #[arg(long)]
        prune: bool,
        /// Write canonical signatures to `DIR/n{K}/sig.txt`.
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// The closed non-orientable manifolds of complexity 6, and the complexity 7 examples.
    NonorientableCensus {
        #[command(flatten)]
        common: Common,
    },
    /// Counting checks on Stiefel-Whitney surfaces of non-orientable minimal candidates.
    VerifyLemmas {
        /// Largest number of tetrahedra, at most 5.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=5))]
        n: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Compare against the embedded expected values and exit with status 2 on a mismatch.
    #[arg(long)]
    check: bool,
    /// Write the table here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    Json,
}

/// What a subcommand produced: the rendered table and any disagreements with expectations.
pub struct Outcome {
    pub table: String,
    pub mismatches: Vec<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let common = match &cli.command {
        Command::LensCensus { common, .. }
        | Command::EnumerateSpines { common, .. }
        | Command::NonorientableCensus { common }
        | Command::VerifyLemmas { common, .. } => common.clone(),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(common.workers as usize).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(USAGE);
        }
    };
    let emit = Emit { format: common.format };
    let result = pool.install(|| match &cli.command {
        Command::LensCensus { cmax, .. } => lens::run(*cmax as usize, &emit),
        Command::EnumerateSpines { n, prune, fixtures, .. } => {
            spines::enumerate(*n as usize, *prune, fixtures.as_deref(), common.workers as usize, &emit)
        }
        Command::NonorientableCensus { .. } => nonorientable::run(&emit),
        Command::VerifyLemmas { n, .. } => spines::verify_lemmas(*n as usize, common.workers as usize, &emit),
    });
    let outcome = match result {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    };
    let written = match &common.out {
        Some(path) => std::fs::write(path, &outcome.table).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{}", outcome.table);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(USAGE);
    }
    if common.check {
        if !outcome.mismatches.is_empty() {
            for m in &outcome.mismatches {
                eprintln!("mismatch: {m}");
            }
            return ExitCode::from(MISMATCH);
        }
        eprintln!("check passed");
    }
    ExitCode::SUCCESS
}
