//! Independence number, vertex connectivity and the quantities built on them.

use crate::disjointness::{build_dgraph, SegmentId};
use crate::error::{Error, Result};
use crate::geometry::PointSet;
use crate::graph::{full_set, members, SimpleGraph, VertexSet};

// ---------------------------------------------------------------------------
// Maximum flow on unit-capacity split networks.

const FLOW_WORDS: usize = 3;

/// Residual network where every arc has capacity one, rows stored as
/// bitsets. Holds up to `64 * FLOW_WORDS` nodes.
#[derive(Clone, Debug)]
pub(crate) struct FlowNetwork {
    rows: Vec<[u64; FLOW_WORDS]>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        assert!(nodes <= 64 * FLOW_WORDS, "flow network too large");
        FlowNetwork { rows: vec![[0; FLOW_WORDS]; nodes] }
    }

    pub(crate) fn add(&mut self, from: usize, to: usize) {
        self.rows[from][to / 64] |= 1 << (to % 64);
    }

    pub(crate) fn remove(&mut self, from: usize, to: usize) {
        self.rows[from][to / 64] &= !(1 << (to % 64));
    }

    /// Augments along shortest paths until `limit` units flow or none is left.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let nodes = self.rows.len();
        let mut flow = 0;
        let mut parent = vec![usize::MAX; nodes];
        while flow < limit {
            let mut seen = [0u64; FLOW_WORDS];
            seen[s / 64] |= 1 << (s % 64);
            let mut frontier = vec![s];
            let mut reached = false;
            while !frontier.is_empty() && !reached {
                let mut next = Vec::new();
                for &u in &frontier {
                    for (w, seen_word) in seen.iter_mut().enumerate() {
                        let mut fresh = self.rows[u][w] & !*seen_word;
                        *seen_word |= fresh;
                        while fresh != 0 {
                            let v = w * 64 + fresh.trailing_zeros() as usize;
                            fresh &= fresh - 1;
                            parent[v] = u;
                            next.push(v);
                            reached |= v == t;
                        }
                    }
                }
                frontier = next;
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.remove(u, v);
                self.add(v, u);
                v = u;
            }
            flow += 1;
        }
        flow
    }
}

/// Vertex `v` becomes the arc `2v -> 2v + 1`; each edge `vw` becomes the arcs
/// `2v + 1 -> 2w` and `2w + 1 -> 2v`. Every arc has capacity one, which is
/// exact whenever no edge joins the source and the sink, since each unit
/// through an edge arc also passes a unit vertex arc. `extra` appends nodes
/// after the split ones.
pub(crate) fn split_network(g: &SimpleGraph, extra: usize) -> FlowNetwork {
    let n = g.vertex_count();
    let mut net = FlowNetwork::new(2 * n + extra);
    for v in 0..n {
        net.add(2 * v, 2 * v + 1);
        for w in members(g.neighbors(v)) {
            net.add(2 * v + 1, 2 * w);
        }
    }
    net
}

fn local_connectivity_bounded(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = split_network(g, 0);
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for
/// non-adjacent `s != t`, which by Menger's theorem equals the smallest
/// vertex set separating them.
pub fn local_vertex_connectivity(g: &SimpleGraph, s: usize, t: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "endpoints must be distinct and non-adjacent");
    local_connectivity_bounded(g, s, t, g.vertex_count())
}

/// `κ(G)`: the fewest vertices whose removal disconnects `g`; `n - 1` for
/// complete graphs and `0` for disconnected ones.
///
/// Minimizes the local connectivity over non-adjacent pairs `(i, j)`,
/// `i < j`. Sources stop after index `κ`: a minimum cut misses one of the
/// first `κ + 1` vertices, and the first vertex it misses pairs with a later
/// vertex on another side of the cut.
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let mut i = 0;
    while i <= best && i < n {
        for j in members(!g.neighbors(i) & g.vertices() & !full_set(i + 1)) {
            best = best.min(local_connectivity_bounded(g, i, j, best));
        }
        i += 1;
    }
    best
}

/// `κ(G)` by deleting vertex subsets in ascending size until the rest is
/// disconnected. Exponential; a cross-check for small graphs.
pub fn vertex_connectivity_brute_force(g: &SimpleGraph) -> Result<usize> {
    use itertools::Itertools;
    const LIMIT: usize = 16;
    let n = g.vertex_count();
    if n > LIMIT {
        return Err(Error::OracleTooLarge { what: "subset-deletion connectivity", max: LIMIT, got: n });
    }
    if g.is_complete() {
        return Ok(n.saturating_sub(1));
    }
    for k in 0..n {
        for cut in (0..n).combinations(k) {
            let rest = g.vertices() & !crate::graph::set_of(&cut);
            if !g.is_connected_within(rest) {
                return Ok(k);
            }
        }
    }
    unreachable!("a non-complete graph has a vertex cut")
}

// ---------------------------------------------------------------------------
// Cliques and independent sets.

/// Greedy sequential coloring of `p`; returns vertices in color order with
/// their color numbers (1-based), ascending.
fn color_order(g: &SimpleGraph, p: VertexSet) -> Vec<(usize, usize)> {
    let mut order = Vec::with_capacity(p.count_ones() as usize);
    let mut uncolored = p;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut available = uncolored;
        while available != 0 {
            let v = available.trailing_zeros() as usize;
            available &= !(1 << v) & !g.neighbors(v);
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }
    order
}

fn expand_clique(g: &SimpleGraph, size: usize, p: VertexSet, best: &mut usize) {
    let order = color_order(g, p);
    let mut p = p;
    for &(v, color) in order.iter().rev() {
        if size + color <= *best {
            return;
        }
        let next = p & g.neighbors(v);
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand_clique(g, size + 1, next, best);
        }
        p &= !(1 << v);
    }
}

/// Size of a largest clique among the vertices of `within`.
pub fn clique_number_within(g: &SimpleGraph, within: VertexSet) -> usize {
    let mut best = 0;
    if within != 0 {
        expand_clique(g, 0, within, &mut best);
    }
    best
}

/// The lexicographically smallest maximum clique inside `within`.
pub fn maximum_clique(g: &SimpleGraph, within: VertexSet) -> Vec<usize> {
    let target = clique_number_within(g, within);
    let mut chosen = Vec::with_capacity(target);
    let mut cand = within;
    while chosen.len() < target {
        let v = members(cand)
            .find(|&v| {
                let rest = cand & g.neighbors(v) & !full_set(v + 1);
                chosen.len() + 1 + clique_number_within(g, rest) >= target
            })
            .expect("a maximum clique extends the current prefix");
        chosen.push(v);
        cand &= g.neighbors(v) & !full_set(v + 1);
    }
    chosen
}

/// A largest independent set, lexicographically smallest among ties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub members: Vec<usize>,
}

impl IndependentSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// `α(G)` with a witness, computed as a maximum clique of the complement.
pub fn maximum_independent_set(g: &SimpleGraph) -> IndependentSet {
    let c = g.complement();
    IndependentSet { members: maximum_clique(&c, c.vertices()) }
}

pub fn independence_number(g: &SimpleGraph) -> usize {
    let c = g.complement();
    clique_number_within(&c, c.vertices())
}

// ---------------------------------------------------------------------------
// Thrackles.

/// A set of segments in which every two share an endpoint or cross.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThrackleWitness {
    pub segments: Vec<SegmentId>,
}

/// Checks the thrackle condition geometrically, pair by pair.
pub fn is_thrackle(points: &PointSet, segments: &[SegmentId]) -> bool {
    segments.iter().enumerate().all(|(a, s)| {
        segments[a + 1..].iter().all(|t| {
            let (gs, gt) = (points.segment(s.i(), s.j()), points.segment(t.i(), t.j()));
            gs.shares_endpoint(&gt) || gs.crosses_properly(&gt)
        })
    })
}

/// A largest thrackle of `points`, found as a maximum independent set of
/// `D(P)` and checked against the geometric definition.
pub fn max_thrackle(points: &PointSet) -> Result<ThrackleWitness> {
    let d = build_dgraph(points)?;
    let mis = maximum_independent_set(d.graph());
    let segments: Vec<SegmentId> = mis.members.iter().map(|&v| d.segment(v)).collect();
    assert!(
        is_thrackle(points, &segments),
        "independent set of D(P) failed the geometric thrackle check"
    );
    Ok(ThrackleWitness { segments })
}

pub fn max_thrackle_size(points: &PointSet) -> Result<usize> {
    Ok(max_thrackle(points)?.segments.len())
}

// ---------------------------------------------------------------------------
// Bounds.

fn choose2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// `C(⌊(n-2)/2⌋, 2) + C(⌈(n-2)/2⌉, 2)`, a lower bound on `κ(D(P))` for any
/// `n >= 3` points in general position.
pub fn connectivity_lower_bound(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "the connectivity bound needs n >= 3, got {n}"
        )));
    }
    let m = n - 2;
    Ok(choose2(m / 2) + choose2(m.div_ceil(2)))
}

/// Outcome of testing `α(G) <= κ(G)`, which forces a hamiltonian cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChvatalErdos {
    pub alpha: usize,
    pub kappa: usize,
}

impl ChvatalErdos {
    pub fn applies(&self) -> bool {
        self.alpha <= self.kappa
    }
}

pub fn chvatal_erdos(g: &SimpleGraph) -> ChvatalErdos {
    ChvatalErdos { alpha: independence_number(g), kappa: vertex_connectivity(g) }
}

pub fn chvatal_erdos_applies(g: &SimpleGraph) -> bool {
    chvatal_erdos(g).applies()
}
