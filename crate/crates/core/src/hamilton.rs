//! Exact hamiltonicity for small graphs.
//!
//! [`find_hamiltonian_cycle`] grows a path from vertex 0 and backtracks. A
//! partial path `0 = v0, .., vk` is abandoned when
//!
//! * an unvisited vertex has fewer than two usable neighbors (unvisited
//!   vertices plus the two path ends),
//! * the unvisited vertices cannot all be reached from the path end through
//!   unvisited vertices, or
//! * two unvisited vertices of usable degree two both demand the path end as
//!   their next neighbor.
//!
//! A vertex of usable degree two that is adjacent to the path end must be
//! the next vertex, so that branch is taken alone.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{members, SimpleGraph, VertexSet};

/// A spanning cycle given as a vertex order; the last vertex is adjacent to
/// the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub order: Vec<usize>,
}

/// Comma-separated vertex list.
impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.order.iter().join(","))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial paths examined.
    pub nodes: u64,
    /// Partial paths cut by a pruning rule.
    pub pruned: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamiltonResult {
    Cycle(CycleWitness, SearchStats),
    /// The whole search space was exhausted without finding a cycle.
    Exhausted(SearchStats),
    /// The node budget ran out first.
    Unknown(SearchStats),
}

impl HamiltonResult {
    pub fn witness(&self) -> Option<&CycleWitness> {
        match self {
            HamiltonResult::Cycle(w, _) => Some(w),
            _ => None,
        }
    }

    pub fn is_hamiltonian(&self) -> Option<bool> {
        match self {
            HamiltonResult::Cycle(..) => Some(true),
            HamiltonResult::Exhausted(_) => Some(false),
            HamiltonResult::Unknown(_) => None,
        }
    }

    pub fn stats(&self) -> SearchStats {
        match self {
            HamiltonResult::Cycle(_, s) | HamiltonResult::Exhausted(s) | HamiltonResult::Unknown(s) => *s,
        }
    }
}

/// Decides hamiltonicity exhaustively. Graphs with fewer than three vertices
/// are never hamiltonian.
pub fn find_hamiltonian_cycle(g: &SimpleGraph) -> HamiltonResult {
    find_hamiltonian_cycle_budgeted(g, None)
}

/// As [`find_hamiltonian_cycle`], giving up with [`HamiltonResult::Unknown`]
/// after `node_budget` partial paths.
pub fn find_hamiltonian_cycle_budgeted(g: &SimpleGraph, node_budget: Option<u64>) -> HamiltonResult {
    let n = g.vertex_count();
    let mut stats = SearchStats::default();
    if n < 3 {
        return HamiltonResult::Exhausted(stats);
    }
    if (0..n).any(|v| g.degree(v) < 2) || !g.is_connected() {
        // The root is rejected before any path is grown.
        return HamiltonResult::Exhausted(SearchStats { nodes: 1, pruned: 1 });
    }
    let mut search = Search { g, n, budget: node_budget, path: Vec::with_capacity(n), stats: &mut stats };
    search.path.push(0);
    let unvisited = g.vertices() & !1;
    match search.extend(0, unvisited) {
        Outcome::Found => {
            let order = std::mem::take(&mut search.path);
            debug_assert!(verify_cycle(g, &CycleWitness { order: order.clone() }));
            HamiltonResult::Cycle(CycleWitness { order }, stats)
        }
        Outcome::Exhausted => HamiltonResult::Exhausted(stats),
        Outcome::OutOfBudget => HamiltonResult::Unknown(stats),
    }
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a SimpleGraph,
    n: usize,
    budget: Option<u64>,
    path: Vec<usize>,
    stats: &'a mut SearchStats,
}

impl Search<'_> {
    fn extend(&mut self, end: usize, unvisited: VertexSet) -> Outcome {
        self.stats.nodes += 1;
        if self.budget.is_some_and(|b| self.stats.nodes > b) {
            return Outcome::OutOfBudget;
        }
        let g = self.g;
        if unvisited == 0 {
            return if self.path.len() == self.n && g.has_edge(end, 0) {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }

        // Usable neighbors of an unvisited vertex: other unvisited vertices
        // and the two ends of the path.
        let ends = (1u64 << end) | 1;
        let mut forced: Option<usize> = None;
        for w in members(unvisited) {
            let usable = g.neighbors(w) & (unvisited | ends);
            let deg = usable.count_ones();
            let single_left = unvisited.count_ones() == 1;
            if deg < 2 {
                self.stats.pruned += 1;
                return Outcome::Exhausted;
            }
            if deg == 2 && usable & (1 << end) != 0 && end != 0 && !single_left {
                if forced.is_some() {
                    self.stats.pruned += 1;
                    return Outcome::Exhausted;
                }
                forced = Some(w);
            }
        }
        if g.neighbors(0) & unvisited == 0 {
            self.stats.pruned += 1;
            return Outcome::Exhausted;
        }
        let reach_from = g.neighbors(end) & unvisited;
        if reach_from == 0 {
            self.stats.pruned += 1;
            return Outcome::Exhausted;
        }
        let start = reach_from.trailing_zeros() as usize;
        if g.reachable_within(start, unvisited) != unvisited {
            self.stats.pruned += 1;
            return Outcome::Exhausted;
        }

        let candidates = match forced {
            Some(w) => 1u64 << w,
            None => reach_from,
        };
        for next in members(candidates) {
            self.path.push(next);
            match self.extend(next, unvisited & !(1 << next)) {
                Outcome::Exhausted => {}
                other => return other,
            }
            self.path.pop();
        }
        Outcome::Exhausted
    }
}

/// Checks that `w` lists every vertex exactly once and that cyclically
/// consecutive vertices are adjacent.
pub fn verify_cycle(g: &SimpleGraph, w: &CycleWitness) -> bool {
    let n = g.vertex_count();
    if n < 3 || w.order.len() != n {
        return false;
    }
    let mut seen: VertexSet = 0;
    for &v in &w.order {
        if v >= n || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
    }
    (0..n).all(|i| g.has_edge(w.order[i], w.order[(i + 1) % n]))
}

/// Largest graph [`brute_force_hamiltonian`] accepts.
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// Hamiltonicity by scanning every ordering of the vertices other than 0.
pub fn brute_force_hamiltonian(g: &SimpleGraph) -> Result<bool> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::OracleTooLarge { what: "brute-force hamiltonicity", max: BRUTE_FORCE_LIMIT, got: n });
    }
    if n < 3 {
        return Ok(false);
    }
    Ok((1..n).permutations(n - 1).any(|rest| {
        g.has_edge(0, rest[0])
            && g.has_edge(rest[n - 2], 0)
            && rest.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }))
}
