//! Seeded search for a refuting minor of `D(C6)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::minor::{replay, MinorOp, MinorWitness};
use super::{verify_counterexample, CounterexampleReport};
use crate::disjointness::build_dgraph;
use crate::geometry::PointSet;
use crate::graph::SimpleGraph;
use crate::hamilton::find_hamiltonian_cycle;
use crate::metrics::{independence_number, vertex_connectivity};

/// Identifier written into witnesses mined from [`hexagon_dgraph`].
pub const HEXAGON_SOURCE_ID: &str = "D(C6)";

/// Six points in convex position, labelled counterclockwise.
pub fn convex_hexagon() -> PointSet {
    PointSet::from_coords(&[(0, 0), (2, -1), (4, 0), (4, 2), (2, 3), (0, 2)])
        .expect("the hexagon is in general position")
}

/// `D(C6)` with segments numbered `01, 02, .., 45` over [`convex_hexagon`].
pub fn hexagon_dgraph() -> SimpleGraph {
    build_dgraph(&convex_hexagon()).expect("15 vertices fit").into_graph()
}

#[derive(Clone, Debug)]
pub struct MiningParams {
    pub seed: u64,
    /// First trial index; a search interrupted after `k` trials resumes with
    /// `first_trial = k`.
    pub first_trial: u64,
    pub trials: u64,
    pub max_deletions: usize,
    pub max_contractions: usize,
}

impl Default for MiningParams {
    fn default() -> Self {
        MiningParams { seed: 1, first_trial: 0, trials: 2_000_000, max_deletions: 10, max_contractions: 9 }
    }
}

#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum MiningOutcome {
    Found { trial: u64, witness: MinorWitness, report: CounterexampleReport },
    /// The budget ran out. This says nothing about existence.
    NotFound { trials: u64 },
}

/// `(deletions, contractions)` levels by ascending total size.
fn schedule(params: &MiningParams) -> Vec<(usize, usize)> {
    let mut levels: Vec<(usize, usize)> = (0..=params.max_deletions)
        .flat_map(|d| (1..=params.max_contractions).map(move |c| (d, c)))
        .collect();
    levels.sort_by_key(|&(d, c)| (d + c, c));
    levels
}

fn trial_ops(g: &SimpleGraph, seed: u64, trial: u64, level: (usize, usize)) -> Vec<MinorOp> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let (deletions, contractions) = level;
    let mut ops = Vec::with_capacity(deletions + contractions);

    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.shuffle(&mut rng);
    for &(u, v) in edges.iter().take(deletions) {
        ops.push(MinorOp::DeleteEdge(u, v));
    }
    let mut current = replay(g, &ops).expect("deleting existing edges");
    // Track source ids of the surviving vertices across contractions.
    let mut ids: Vec<usize> = (0..g.vertex_count()).collect();
    for _ in 0..contractions {
        let edges: Vec<(usize, usize)> = current.edges().collect();
        if edges.is_empty() {
            break;
        }
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        let (a, b) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
        ops.push(MinorOp::ContractEdge(ids[a], ids[b]));
        current = replay(&current, &[MinorOp::ContractEdge(a, b)]).expect("contracting an edge");
        ids.remove(b);
    }
    ops
}

/// Cheap filters first, the separator criterion last.
fn examine(g: &SimpleGraph, ops: Vec<MinorOp>) -> Option<(MinorWitness, CounterexampleReport)> {
    let h = replay(g, &ops).ok()?;
    let n = h.vertex_count();
    if n < 5 || (0..n).any(|v| h.degree(v) < 2) || !h.is_connected() {
        return None;
    }
    if independence_number(&h) > 3 || vertex_connectivity(&h) < 2 {
        return None;
    }
    if find_hamiltonian_cycle(&h).is_hamiltonian() != Some(false) {
        return None;
    }
    let report = verify_counterexample(&h);
    report.is_counterexample().then(|| {
        (MinorWitness { source_id: HEXAGON_SOURCE_ID.to_string(), operations: ops, result: h }, report)
    })
}

const BATCH: u64 = 4096;

/// Searches edge-deletion-then-contraction sequences of `g` for a graph that
/// passes [`verify_counterexample`]. Returns the lowest successful trial in
/// the range, independent of the thread count.
pub fn mine_counterexample(g: &SimpleGraph, params: &MiningParams) -> MiningOutcome {
    let levels = schedule(params);
    let end = params.first_trial + params.trials;
    let mut start = params.first_trial;
    while start < end {
        let stop = (start + BATCH).min(end);
        let hit = (start..stop)
            .into_par_iter()
            .find_map_first(|t| {
                let level = levels[(t % levels.len() as u64) as usize];
                examine(g, trial_ops(g, params.seed, t, level)).map(|(w, r)| (t, w, r))
            });
        if let Some((trial, witness, report)) = hit {
            return MiningOutcome::Found { trial, witness, report };
        }
        start = stop;
    }
    MiningOutcome::NotFound { trials: params.trials }
}
