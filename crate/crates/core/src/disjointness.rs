//! The edge disjointness graph of a point set.
//!
//! Vertices are the `C(n, 2)` closed segments spanned by the points; two
//! segments are adjacent exactly when they share no point.

use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{segments_disjoint, PointSet};
use crate::graph::{SimpleGraph, MAX_VERTICES};

/// The segment between points `i < j` of a point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegmentId {
    i: usize,
    j: usize,
}

impl SegmentId {
    /// Endpoints may be given in either order. Panics if `i == j`.
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j, "a segment needs two distinct endpoints");
        SegmentId { i: i.min(j), j: i.max(j) }
    }

    pub fn i(self) -> usize {
        self.i
    }

    pub fn j(self) -> usize {
        self.j
    }

    /// Position in the lexicographic order `01, 02, .., 0(n-1), 12, ..`.
    pub fn index(self, n: usize) -> usize {
        self.i * (2 * n - self.i - 1) / 2 + (self.j - self.i - 1)
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        let mut rest = index;
        for i in 0..n {
            let row = n - i - 1;
            if rest < row {
                return SegmentId { i, j: i + 1 + rest };
            }
            rest -= row;
        }
        panic!("segment index {index} out of range for {n} points")
    }

    pub fn shares_endpoint(self, other: SegmentId) -> bool {
        self.i == other.i || self.i == other.j || self.j == other.i || self.j == other.j
    }

    /// The segment joining the images of the endpoints under `gamma`.
    pub fn mapped(self, gamma: &[usize]) -> SegmentId {
        SegmentId::new(gamma[self.i], gamma[self.j])
    }
}

/// Printed one-based, as `p1p4`.
impl fmt::Display for SegmentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}p{}", self.i + 1, self.j + 1)
    }
}

/// All segments over `n` points in index order.
pub fn segments(n: usize) -> impl Iterator<Item = SegmentId> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| SegmentId { i, j }))
}

/// Largest point count whose disjointness graph fits a [`SimpleGraph`].
pub const MAX_POINTS: usize = 11;

const _: () = assert!(MAX_POINTS * (MAX_POINTS - 1) / 2 <= MAX_VERTICES);

/// `D(P)` together with the point set that generated it.
#[derive(Clone, Debug)]
pub struct DGraph {
    points: PointSet,
    graph: SimpleGraph,
}

impl DGraph {
    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }

    pub fn segment(&self, vertex: usize) -> SegmentId {
        SegmentId::from_index(vertex, self.n_points())
    }

    pub fn vertex(&self, s: SegmentId) -> usize {
        s.index(self.n_points())
    }

    pub fn adjacent(&self, s: SegmentId, t: SegmentId) -> bool {
        self.graph.has_edge(self.vertex(s), self.vertex(t))
    }

    /// Export form: a header `vertex-count edge-count`, then one
    /// `i j <-> k l` line per edge with zero-based point indices.
    pub fn export(&self) -> String {
        let g = &self.graph;
        let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
        for (u, v) in g.edges() {
            let (s, t) = (self.segment(u), self.segment(v));
            out.push_str(&format!("{} {} <-> {} {}\n", s.i, s.j, t.i, t.j));
        }
        out
    }
}

/// Builds `D(P)`.
pub fn build_dgraph(points: &PointSet) -> Result<DGraph> {
    let n = points.len();
    if n > MAX_POINTS {
        return Err(Error::TooManyVertices(n * (n - 1) / 2));
    }
    let segs: Vec<SegmentId> = segments(n).collect();
    let mut graph = SimpleGraph::new(segs.len())?;
    for (u, s) in segs.iter().enumerate() {
        for (v, t) in segs.iter().enumerate().skip(u + 1) {
            if s.shares_endpoint(*t) {
                continue;
            }
            if segments_disjoint(&points.segment(s.i, s.j), &points.segment(t.i, t.j)) {
                graph.add_edge(u, v);
            }
        }
    }
    Ok(DGraph { points: points.clone(), graph })
}

/// Does the point bijection `gamma` (point `i` of `p` to point `gamma[i]` of
/// `q`) lift to an isomorphism `D(p) -> D(q)` on segments?
pub fn lifted_bijection_is_isomorphism(p: &DGraph, q: &DGraph, gamma: &[usize]) -> bool {
    let n = p.n_points();
    if q.n_points() != n || gamma.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &g in gamma {
        if g >= n || std::mem::replace(&mut hit[g], true) {
            return false;
        }
    }
    let image: Vec<usize> = segments(n).map(|s| q.vertex(s.mapped(gamma))).collect();
    p.graph
        .edges()
        .all(|(u, v)| q.graph.has_edge(image[u], image[v]))
        && p.graph.edge_count() == q.graph.edge_count()
}
