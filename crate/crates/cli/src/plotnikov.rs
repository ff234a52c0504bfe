use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::Subcommand;
use dlab::graph::SimpleGraph;
use dlab::hamilton::find_hamiltonian_cycle;
use dlab::plotnikov::{
    hexagon_dgraph, mine_counterexample, plotnikov_holds, verify_counterexample, CounterexampleReport,
    MiningOutcome, MiningParams, MinorWitness, HEXAGON_SOURCE_ID,
};
use serde_json::json;

use crate::report::{fixture_record, read_fixture, Reporter};
use crate::{Common, Status};

/// Location of the mined witness inside the data directory.
pub const FIXTURE: &str = "plotnikov/counterexample.minor";

#[derive(Subcommand, Debug)]
pub enum Mode {
    /// Replay the stored minor witness and check all four properties.
    VerifyFixture {
        /// Defaults to the witness under --db-dir.
        #[arg(long, env = "DLAB_FIXTURE")]
        fixture: Option<PathBuf>,
    },
    /// Search minors of D(C6) for a counterexample.
    Mine {
        #[arg(long, env = "DLAB_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long, env = "DLAB_TRIALS", default_value_t = 2_000_000)]
        trials: u64,
        /// First trial index, to resume an interrupted search.
        #[arg(long, default_value_t = 0)]
        first_trial: u64,
        /// Write the witness here when one is found.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the criterion and hamiltonicity on a graph file.
    Check { graph: PathBuf },
}

pub fn run(common: &Common, mode: Mode, reporter: &mut Reporter) -> anyhow::Result<Status> {
    match mode {
        Mode::VerifyFixture { fixture } => {
            let path = fixture.unwrap_or_else(|| common.db_dir.join(FIXTURE));
            verify_fixture(&path, reporter)
        }
        Mode::Mine { seed, trials, first_trial, out } => {
            let params = MiningParams { seed, trials, first_trial, ..MiningParams::default() };
            mine(&params, out.as_deref(), reporter)
        }
        Mode::Check { graph } => check(&graph, reporter),
    }
}

fn print_properties(report: &CounterexampleReport) {
    let line = |ok: bool, what: String| println!("{} {what}", if ok { "PASS" } else { "FAIL" });
    line(report.two_connected(), format!("2-connected (kappa = {})", report.kappa));
    let stats = report.hamilton.stats();
    line(report.non_hamiltonian(), format!("non-hamiltonian (search nodes = {})", stats.nodes));
    line(report.small_independence(), format!("independence number <= 3 (alpha = {})", report.alpha));
    line(
        report.criterion_holds(),
        format!("separator criterion holds ({} independent sets checked)", report.criterion.sets_checked),
    );
}

fn report_record(report: &CounterexampleReport) -> serde_json::Value {
    json!({
        "record": "counterexample",
        "vertices": report.vertices,
        "edges": report.edges,
        "kappa": report.kappa,
        "hamiltonian": report.hamilton.is_hamiltonian(),
        "search_nodes": report.hamilton.stats().nodes,
        "alpha": report.alpha,
        "criterion_holds": report.criterion.holds,
        "criterion_holds_with_singletons": report.criterion.holds_with_singletons,
        "independent_sets_checked": report.criterion.sets_checked,
        "failures": report.failures(),
    })
}

fn verify_fixture(path: &Path, reporter: &mut Reporter) -> anyhow::Result<Status> {
    let fixture = read_fixture(path)?;
    reporter.emit(&fixture_record(path, &fixture));
    let text = std::str::from_utf8(&fixture.bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let witness = MinorWitness::parse(text).with_context(|| format!("parsing {}", path.display()))?;
    if witness.source_id != HEXAGON_SOURCE_ID {
        bail!("{}: unknown source graph `{}`", path.display(), witness.source_id);
    }
    if !witness.verify(&hexagon_dgraph()).with_context(|| format!("replaying {}", path.display()))? {
        bail!("{}: replay does not reproduce the recorded result graph", path.display());
    }
    println!("replayed {} operations on {HEXAGON_SOURCE_ID}", witness.operations.len());
    let report = verify_counterexample(&witness.result);
    print_properties(&report);
    reporter.emit(&report_record(&report));
    let failures = report.failures();
    for f in &failures {
        reporter.failure("contradiction", &format!("fixture property fails: {f}"));
    }
    Ok(if failures.is_empty() { Status::Consistent } else { Status::Contradiction })
}

fn mine(params: &MiningParams, out: Option<&Path>, reporter: &mut Reporter) -> anyhow::Result<Status> {
    match mine_counterexample(&hexagon_dgraph(), params) {
        MiningOutcome::Found { trial, witness, report } => {
            println!("found at trial {trial}");
            print!("{}", witness.to_text());
            print_properties(&report);
            if let Some(out) = out {
                if let Some(dir) = out.parent() {
                    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
                }
                std::fs::write(out, witness.to_text()).with_context(|| format!("cannot write {}", out.display()))?;
            }
            reporter.emit(&json!({ "record": "mine", "seed": params.seed, "found": true, "trial": trial }));
            reporter.emit(&report_record(&report));
        }
        MiningOutcome::NotFound { trials } => {
            println!("NOT FOUND after {trials} trials");
            reporter.emit(&json!({ "record": "mine", "seed": params.seed, "found": false, "trials": trials }));
        }
    }
    Ok(Status::Consistent)
}

fn check(path: &Path, reporter: &mut Reporter) -> anyhow::Result<Status> {
    let fixture = read_fixture(path)?;
    reporter.emit(&fixture_record(path, &fixture));
    let text = std::str::from_utf8(&fixture.bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let g = SimpleGraph::parse(text).with_context(|| format!("parsing {}", path.display()))?;
    let criterion = plotnikov_holds(&g);
    let hamilton = find_hamiltonian_cycle(&g);
    println!("criterion {}", if criterion.holds { "HOLDS" } else { "FAILS" });
    if let Some(v) = &criterion.violation {
        println!("  X = {:?} is separated by U = {:?}", v.x, v.separator);
    }
    println!("{}", if hamilton.is_hamiltonian() == Some(true) { "HAMILTONIAN" } else { "NOT HAMILTONIAN" });
    reporter.emit(&json!({
        "record": "check",
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "criterion_holds": criterion.holds,
        "violation": criterion.violation.as_ref().map(|v| json!({ "x": v.x, "separator": v.separator })),
        "hamiltonian": hamilton.is_hamiltonian(),
        "witness": hamilton.witness().map(|w| w.to_string()),
    }));
    Ok(Status::Consistent)
}
