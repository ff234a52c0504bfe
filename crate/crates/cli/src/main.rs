//! `dlab`: verification campaigns over disjointness graphs.
//!
//! Exit status is 0 when every check is consistent, 1 when a mathematical
//! contradiction was found, and 2 on input or ingestion errors.

mod census;
mod database;
mod plotnikov;
mod points;
mod report;
mod theorem;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Reporter;

#[derive(Parser, Debug)]
#[command(name = "dlab", version, about = "Hamiltonicity of disjointness graphs of planar point sets")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Directory holding order-type databases and fixtures.
    #[arg(long, global = true, env = "DLAB_DB_DIR", default_value = "data")]
    db_dir: PathBuf,
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, env = "DLAB_JOBS", default_value_t = 0)]
    jobs: usize,
    /// Append JSON-lines records to this file.
    #[arg(long, global = true, env = "DLAB_REPORT")]
    report: Option<PathBuf>,
    /// Include wall-clock durations in records, which makes reports differ
    /// between runs.
    #[arg(long, global = true, env = "DLAB_TIMINGS")]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the hamiltonicity characterization on every database order type.
    VerifyTheorem {
        /// Point counts to check, comma separated.
        #[arg(long, env = "DLAB_N", value_delimiter = ',', default_value = "3,4,5,6,7,8")]
        n: Vec<usize>,
    },
    /// Report hamiltonicity, independence number and connectivity of one D(P).
    HamCheck {
        /// Point-set text file.
        points: PathBuf,
    },
    /// Count order types among random point sets.
    Census {
        #[arg(long, env = "DLAB_N")]
        n: usize,
        #[arg(long, env = "DLAB_TRIALS", default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, env = "DLAB_SEED", default_value_t = 1)]
        seed: u64,
        /// Identify mirror images.
        #[arg(long, env = "DLAB_REFLECTION", value_enum, default_value_t = Toggle::On)]
        reflection: Toggle,
        /// Coordinates are drawn from [0, range).
        #[arg(long, env = "DLAB_RANGE", default_value_t = 1 << 16)]
        range: i64,
        /// Print every signature with its representative.
        #[arg(long)]
        list: bool,
    },
    /// The separator criterion and its counterexample.
    Plotnikov {
        #[command(subcommand)]
        mode: plotnikov::Mode,
    },
    /// Print D(P) as an edge list of segment pairs.
    ExportGraph {
        points: PathBuf,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate the order-type database files by point extension.
    BuildDb {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Side of the coordinate grid.
        #[arg(long, default_value_t = 256)]
        grid: i64,
        #[arg(long, env = "DLAB_SEED", default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Consistent,
    Contradiction,
}

fn run(cli: Cli, reporter: &mut Reporter) -> anyhow::Result<Status> {
    rayon::ThreadPoolBuilder::new().num_threads(cli.common.jobs).build_global()?;
    let common = &cli.common;
    match cli.command {
        Command::VerifyTheorem { n } => theorem::verify(common, &n, reporter),
        Command::HamCheck { points } => points::ham_check(&points, reporter),
        Command::Census { n, trials, seed, reflection, range, list } => {
            let params = census::Params { n, trials, seed, reflection: reflection == Toggle::On, range, list };
            census::run(common, &params, reporter)
        }
        Command::Plotnikov { mode } => plotnikov::run(common, mode, reporter),
        Command::ExportGraph { points, out } => points::export(&points, out.as_deref()),
        Command::BuildDb { max_n, grid, seed } => database::build(common, max_n, grid, seed, reporter),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut reporter = match Reporter::open(cli.common.report.as_deref(), cli.common.timings) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let outcome = run(cli, &mut reporter);
    let code = match outcome {
        Ok(Status::Consistent) => 0,
        Ok(Status::Contradiction) => 1,
        Err(e) => {
            eprintln!("error: {e:#}");
            reporter.failure("input", &format!("{e:#}"));
            2
        }
    };
    if let Err(e) = reporter.finish() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
