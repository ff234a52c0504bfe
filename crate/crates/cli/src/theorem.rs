use std::io::Cursor;
use std::time::Instant;

use anyhow::Context;
use dlab::disjointness::build_dgraph;
use dlab::geometry::PointSet;
use dlab::hamilton::{find_hamiltonian_cycle, HamiltonResult};
use dlab::metrics::{connectivity_lower_bound, independence_number, vertex_connectivity};
use dlab::ordertype::{canonical_signature, database_file_name, expected_record_count, DatabaseReader};
use rayon::prelude::*;
use serde::Serialize;

use crate::report::{fixture_record, read_fixture, Reporter};
use crate::{Common, Status};

/// Everything computed about one `D(P)`.
pub struct Analysis {
    pub n: usize,
    pub convex: bool,
    pub connected: bool,
    pub hamilton: HamiltonResult,
    pub alpha: usize,
    pub kappa: usize,
    pub bound: usize,
}

impl Analysis {
    /// D(P) is hamiltonian iff n >= 6 and P is not six points in convex
    /// position.
    pub fn expected_hamiltonian(&self) -> bool {
        self.n >= 6 && !(self.n == 6 && self.convex)
    }

    pub fn witness_or_reason(&self) -> String {
        match &self.hamilton {
            HamiltonResult::Cycle(w, _) => w.to_string(),
            _ if !self.connected => "disconnected".into(),
            HamiltonResult::Exhausted(s) => format!("exhausted nodes={} pruned={}", s.nodes, s.pruned),
            HamiltonResult::Unknown(s) => format!("unknown nodes={}", s.nodes),
        }
    }

    /// Reasons this record contradicts the characterization or the
    /// connectivity and independence bounds.
    pub fn contradictions(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self.hamilton.is_hamiltonian() {
            Some(h) if h != self.expected_hamiltonian() => {
                out.push(format!("hamiltonian = {h}, expected {}", self.expected_hamiltonian()))
            }
            None => out.push("hamiltonicity undecided".into()),
            _ => {}
        }
        if self.connected != (self.n >= 5) {
            out.push(format!("connected = {} for n = {}", self.connected, self.n));
        }
        if self.kappa < self.bound {
            out.push(format!("kappa {} below bound {}", self.kappa, self.bound));
        }
        if self.n >= 3 && (self.alpha + 1 < self.n || self.alpha > self.n) {
            out.push(format!("alpha {} outside {{n-1, n}}", self.alpha));
        }
        out
    }
}

pub fn analyse(points: &PointSet) -> anyhow::Result<Analysis> {
    let d = build_dgraph(points)?;
    let g = d.graph();
    let n = points.len();
    Ok(Analysis {
        n,
        convex: points.is_convex_position(),
        // A lone segment does not count as a connected disjointness graph.
        connected: g.vertex_count() >= 2 && g.is_connected(),
        hamilton: find_hamiltonian_cycle(g),
        alpha: independence_number(g),
        kappa: vertex_connectivity(g),
        bound: if n >= 3 { connectivity_lower_bound(n)? } else { 0 },
    })
}

#[derive(Serialize)]
struct VerdictRecord {
    record: &'static str,
    order_type_id: usize,
    n: usize,
    signature: String,
    convex: bool,
    connected: bool,
    hamiltonian: bool,
    witness_or_reason: String,
    alpha: usize,
    kappa: usize,
    bound: usize,
    consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

#[derive(Serialize)]
struct SummaryRecord {
    record: &'static str,
    n: usize,
    order_types: usize,
    hamiltonian: usize,
    non_hamiltonian: usize,
    contradictions: usize,
}

pub fn verify(common: &Common, ns: &[usize], reporter: &mut Reporter) -> anyhow::Result<Status> {
    let mut status = Status::Consistent;
    // Ingest everything first so a bad file fails before any work.
    let mut databases = Vec::new();
    for &n in ns {
        let path = common.db_dir.join(database_file_name(n));
        let fixture = read_fixture(&path)?;
        let reader = DatabaseReader::new(Cursor::new(&fixture.bytes), fixture.bytes.len(), n, expected_record_count(n))
            .with_context(|| format!("ingesting {}", path.display()))?;
        let sets = reader.collect::<dlab::Result<Vec<_>>>().with_context(|| format!("ingesting {}", path.display()))?;
        reporter.emit(&fixture_record(&path, &fixture));
        databases.push((n, sets));
    }

    for (n, sets) in databases {
        let results: Vec<(anyhow::Result<Analysis>, std::time::Duration)> = sets
            .par_iter()
            .map(|p| {
                let start = Instant::now();
                (analyse(p), start.elapsed())
            })
            .collect();
        let mut summary =
            SummaryRecord { record: "summary", n, order_types: sets.len(), hamiltonian: 0, non_hamiltonian: 0, contradictions: 0 };
        for (id, (p, (analysis, elapsed))) in sets.iter().zip(results).enumerate() {
            let a = analysis?;
            let hamiltonian = a.hamilton.is_hamiltonian() == Some(true);
            if hamiltonian {
                summary.hamiltonian += 1;
            } else {
                summary.non_hamiltonian += 1;
            }
            let problems = a.contradictions();
            reporter.emit(&VerdictRecord {
                record: "verdict",
                order_type_id: id,
                n,
                signature: canonical_signature(p, true).to_hex(),
                convex: a.convex,
                connected: a.connected,
                hamiltonian,
                witness_or_reason: a.witness_or_reason(),
                alpha: a.alpha,
                kappa: a.kappa,
                bound: a.bound,
                consistent: problems.is_empty(),
                elapsed_ms: reporter.elapsed(elapsed),
            });
            for problem in problems {
                summary.contradictions += 1;
                status = Status::Contradiction;
                reporter.failure("contradiction", &format!("n = {n}, order type {id}: {problem}"));
            }
        }
        println!(
            "n={n}: {} order types, {} hamiltonian, {} non-hamiltonian, {} contradictions",
            summary.order_types, summary.hamiltonian, summary.non_hamiltonian, summary.contradictions
        );
        reporter.emit(&summary);
    }
    Ok(status)
}
