//! The separator criterion for hamiltonicity and a refutation of it.
//!
//! For an independent set `X` of a connected graph `H`, a *separator* of `X`
//! is a set `U` of vertices, each lying on some path between two members of
//! `X`, whose removal leaves no two members of `X` in the same component. The
//! criterion claims that `H` is hamiltonian iff every independent `X`
//! satisfies `|X| <= min |U|`.
//!
//! Sets with `|X| = 1` are excluded: the empty set separates a single vertex,
//! so including them makes the condition fail for every graph. Reports still
//! carry the outcome under that reading.
//!
//! A graph that is 2-connected, non-hamiltonian, has no independent set of
//! size four, and satisfies the condition refutes the criterion.
//! [`mine_counterexample`] searches minors of the disjointness graph of six
//! points in convex position for one.

mod minor;
mod mine;

pub use minor::{replay, MinorOp, MinorWitness};
pub use mine::{convex_hexagon, hexagon_dgraph, mine_counterexample, MiningOutcome, MiningParams, HEXAGON_SOURCE_ID};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{full_set, members, set_of, SimpleGraph, VertexSet};
use crate::hamilton::{find_hamiltonian_cycle, HamiltonResult};
use crate::metrics::{independence_number, split_network, vertex_connectivity};

fn check_independent(h: &SimpleGraph, x: VertexSet) -> Result<()> {
    if x.count_ones() < 2 {
        return Err(Error::InvalidArgument(format!(
            "the separator criterion needs |X| >= 2, got {}",
            x.count_ones()
        )));
    }
    if x & !h.vertices() != 0 || !h.is_independent(x) {
        return Err(Error::InvalidArgument("X must be an independent vertex set".into()));
    }
    Ok(())
}

/// Vertices outside `x` lying on at least one simple path whose ends are two
/// distinct members of `x`.
///
/// A vertex `v` qualifies iff it has two internally disjoint paths to two
/// different members of `x`; that is a unit-capacity flow question.
pub fn path_vertex_set(h: &SimpleGraph, x: VertexSet) -> Result<VertexSet> {
    check_independent(h, x)?;
    let n = h.vertex_count();
    let sink = 2 * n;
    let mut out = 0;
    for v in members(h.vertices() & !x) {
        let mut net = split_network(h, 1);
        for t in members(x) {
            // Members of x end paths; they do not relay them.
            net.remove(2 * t, 2 * t + 1);
            net.add(2 * t, sink);
        }
        if net.max_flow(2 * v + 1, sink, 2) >= 2 {
            out |= 1 << v;
        }
    }
    Ok(out)
}

/// Does removing `u` leave every two members of `x` in different components?
pub fn separates(h: &SimpleGraph, x: VertexSet, u: VertexSet) -> bool {
    let rest = h.vertices() & !u;
    members(x).all(|t| h.reachable_within(t, rest) & x == 1 << t)
}

/// A smallest separator of `x` with at most `max_size` vertices, searched by
/// ascending size and lexicographically within a size.
pub fn min_separator_bounded(h: &SimpleGraph, x: VertexSet, max_size: usize) -> Result<Option<Vec<usize>>> {
    let candidates: Vec<usize> = members(path_vertex_set(h, x)?).collect();
    for k in 0..=max_size.min(candidates.len()) {
        for u in candidates.iter().copied().combinations(k) {
            if separates(h, x, set_of(&u)) {
                return Ok(Some(u));
            }
        }
    }
    Ok(None)
}

/// A smallest separator of `x`, or `None` when no separator exists.
pub fn min_separator(h: &SimpleGraph, x: VertexSet) -> Result<Option<Vec<usize>>> {
    min_separator_bounded(h, x, h.vertex_count())
}

/// `min |U|` over separators of `x`; `None` stands for infinity.
pub fn min_separator_size(h: &SimpleGraph, x: VertexSet) -> Result<Option<usize>> {
    Ok(min_separator(h, x)?.map(|u| u.len()))
}

/// Independent sets of `h` with at least `min_size` members, by ascending
/// size and then lexicographically.
pub fn independent_sets(h: &SimpleGraph, min_size: usize) -> Vec<VertexSet> {
    fn grow(h: &SimpleGraph, current: VertexSet, allowed: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(current);
        for v in members(allowed) {
            let next_allowed = allowed & !h.neighbors(v) & !full_set(v + 1);
            grow(h, current | 1 << v, next_allowed, out);
        }
    }
    let mut all = Vec::new();
    grow(h, 0, h.vertices(), &mut all);
    all.retain(|s| s.count_ones() as usize >= min_size);
    all.sort_by_key(|&s| (s.count_ones(), members(s).collect::<Vec<_>>()));
    all
}

/// An independent set with a separator smaller than itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub x: Vec<usize>,
    pub separator: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    /// Outcome over independent sets with at least two members.
    pub holds: bool,
    /// First violating set in size-then-lexicographic order, with a minimum
    /// separator.
    pub violation: Option<Violation>,
    pub sets_checked: usize,
    /// Outcome when single vertices count as independent sets too.
    pub holds_with_singletons: bool,
}

/// Evaluates the separator criterion on `h`.
pub fn plotnikov_holds(h: &SimpleGraph) -> CriterionReport {
    let sets = independent_sets(h, 2);
    let mut violation = None;
    for &x in &sets {
        let k = x.count_ones() as usize;
        let found = min_separator_bounded(h, x, k - 1).expect("enumerated sets are independent");
        if let Some(u) = found {
            violation = Some(Violation { x: members(x).collect(), separator: u });
            break;
        }
    }
    let holds = violation.is_none();
    CriterionReport {
        holds,
        violation,
        sets_checked: sets.len(),
        // The empty set separates any single vertex and 1 > 0.
        holds_with_singletons: holds && h.vertex_count() == 0,
    }
}

/// The four properties that together refute the criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub vertices: usize,
    pub edges: usize,
    pub kappa: usize,
    pub hamilton: HamiltonResult,
    pub alpha: usize,
    pub criterion: CriterionReport,
}

impl CounterexampleReport {
    pub fn two_connected(&self) -> bool {
        self.kappa >= 2
    }

    pub fn non_hamiltonian(&self) -> bool {
        matches!(self.hamilton, HamiltonResult::Exhausted(_))
    }

    pub fn small_independence(&self) -> bool {
        self.alpha <= 3
    }

    pub fn criterion_holds(&self) -> bool {
        self.criterion.holds
    }

    /// Names of the properties that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut f = Vec::new();
        if !self.two_connected() {
            f.push("2-connected");
        }
        if !self.non_hamiltonian() {
            f.push("non-hamiltonian");
        }
        if !self.small_independence() {
            f.push("independence number <= 3");
        }
        if !self.criterion_holds() {
            f.push("separator criterion holds");
        }
        f
    }

    pub fn is_counterexample(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Checks every property exactly.
pub fn verify_counterexample(h: &SimpleGraph) -> CounterexampleReport {
    CounterexampleReport {
        vertices: h.vertex_count(),
        edges: h.edge_count(),
        kappa: vertex_connectivity(h),
        hamilton: find_hamiltonian_cycle(h),
        alpha: independence_number(h),
        criterion: plotnikov_holds(h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every vertex on some simple path between two members of `x`, by
    /// enumerating simple paths.
    fn path_vertices_by_enumeration(h: &SimpleGraph, x: VertexSet) -> VertexSet {
        fn walk(h: &SimpleGraph, x: VertexSet, v: usize, start: usize, on: VertexSet, acc: &mut VertexSet) {
            for w in members(h.neighbors(v) & !on) {
                if x >> w & 1 == 1 {
                    if w != start {
                        *acc |= on;
                    }
                    continue;
                }
                walk(h, x, w, start, on | 1 << w, acc);
            }
        }
        let mut acc = 0;
        for s in members(x) {
            walk(h, x, s, s, 1 << s, &mut acc);
        }
        acc & !x
    }

    #[test]
    fn path_sets() {
        let star = SimpleGraph::star(3);
        assert_eq!(path_vertex_set(&star, 0b1110).unwrap(), 0b1);
        let path = SimpleGraph::path(3);
        assert_eq!(path_vertex_set(&path, 0b101).unwrap(), 0b10);
        let c6 = SimpleGraph::cycle(6);
        let alt = set_of(&[0, 2, 4]);
        assert_eq!(path_vertex_set(&c6, alt).unwrap(), path_vertices_by_enumeration(&c6, alt));
        assert_eq!(path_vertex_set(&c6, alt).unwrap(), set_of(&[1, 3, 5]));
    }

    #[test]
    fn path_set_rejects_bad_input() {
        let c6 = SimpleGraph::cycle(6);
        assert!(path_vertex_set(&c6, 0b1).is_err());
        assert!(path_vertex_set(&c6, 0b11).is_err());
    }

    #[test]
    fn path_set_matches_enumeration_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(3..9);
            let mut g = SimpleGraph::new(n).unwrap();
            for (u, v) in (0..n).tuple_combinations() {
                if rng.gen_bool(0.4) {
                    g.add_edge(u, v);
                }
            }
            for x in independent_sets(&g, 2).into_iter().take(6) {
                assert_eq!(path_vertex_set(&g, x).unwrap(), path_vertices_by_enumeration(&g, x));
            }
        }
    }

    #[test]
    fn separator_sizes() {
        let star = SimpleGraph::star(3);
        assert_eq!(min_separator_size(&star, 0b1110).unwrap(), Some(1));
        let c6 = SimpleGraph::cycle(6);
        assert_eq!(min_separator_size(&c6, set_of(&[0, 2, 4])).unwrap(), Some(3));
    }

    #[test]
    fn separator_is_a_vertex_cut() {
        // Vertices 0 and 1 see everything else, which forms a path.
        let mut g = SimpleGraph::path(6);
        g.remove_edge(0, 1);
        for v in 2..6 {
            g.add_edge(0, v);
            g.add_edge(1, v);
        }
        g.remove_edge(1, 2);
        let x = set_of(&[0, 1]);
        let u = min_separator(&g, x).unwrap().unwrap();
        assert!(separates(&g, x, set_of(&u)));
        assert!(!g.is_connected_within(g.vertices() & !set_of(&u)));
        assert_eq!(u, vec![3, 4, 5]);
    }

    #[test]
    fn criterion_examples() {
        let star = plotnikov_holds(&SimpleGraph::star(3));
        assert!(!star.holds);
        let v = star.violation.unwrap();
        assert_eq!(v.separator, vec![0]);
        assert!(plotnikov_holds(&SimpleGraph::complete(4)).holds);
        assert_eq!(plotnikov_holds(&SimpleGraph::complete(4)).sets_checked, 0);
        let c6 = plotnikov_holds(&SimpleGraph::cycle(6));
        assert!(c6.holds);
        assert!(!c6.holds_with_singletons);
    }

    #[test]
    fn counterexample_report_examples() {
        let star = verify_counterexample(&SimpleGraph::star(3));
        assert_eq!(star.failures(), vec!["2-connected", "separator criterion holds"]);
        let c6 = verify_counterexample(&SimpleGraph::cycle(6));
        assert_eq!(c6.failures(), vec!["non-hamiltonian"]);
    }

    #[test]
    fn independent_set_enumeration() {
        let c4 = SimpleGraph::cycle(4);
        assert_eq!(independent_sets(&c4, 2), vec![0b0101, 0b1010]);
        assert_eq!(independent_sets(&c4, 1).len(), 6);
    }
}
