//! Small simple graphs stored as one 64-bit adjacency row per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`SimpleGraph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids below [`MAX_VERTICES`].
pub type VertexSet = u64;

/// Iterates the members of a vertex set in ascending order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | (1 << v))
}

/// The set `{0, .., n-1}`.
#[inline]
pub fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Undirected graph without loops or parallel edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    rows: Vec<VertexSet>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertex_count));
        }
        Ok(SimpleGraph { rows: vec![0; vertex_count] })
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(vertex_count)?;
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count || u == v {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) is not valid in a graph on {vertex_count} vertices"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n).expect("vertex count within limit");
        for u in 0..n {
            g.rows[u] = full_set(n) & !(1 << u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n).expect("vertex count within limit");
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n).expect("vertex count within limit");
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::new(leaves + 1).expect("vertex count within limit");
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn vertices(&self) -> VertexSet {
        full_set(self.rows.len())
    }

    /// Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed");
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count())
            .flat_map(move |u| members(self.rows[u] & !full_set(u + 1)).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let rows = (0..n).map(|u| !self.rows[u] & full_set(n) & !(1 << u)).collect();
        SimpleGraph { rows }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        members(set).all(|v| self.rows[v] & set == 0)
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reachable_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, each as a set.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reachable_within(v, within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        within == 0 || self.reachable_within(within.trailing_zeros() as usize, within) == within
    }

    /// The empty graph and the single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Subgraph induced by `keep`, relabelled in ascending id order.
    pub fn induced(&self, keep: VertexSet) -> SimpleGraph {
        let ids: Vec<usize> = members(keep).collect();
        let mut g = SimpleGraph { rows: vec![0; ids.len()] };
        for (a, &u) in ids.iter().enumerate() {
            for (b, &v) in ids.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.rows[a] |= 1 << b;
                }
            }
        }
        g
    }

    /// Relabels so that vertex `v` of `self` becomes `perm[v]`.
    pub fn relabelled(&self, perm: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph { rows: vec![0; self.vertex_count()] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Text form: a header `n m`, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list form written by [`SimpleGraph::to_edge_list`] or the
    /// segment form `i j <-> k l` written for disjointness graphs. Blank lines
    /// and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let nums = parse_numbers(hline, header)?;
        let [n, m] = nums[..] else {
            return Err(Error::parse(hline, "header must be `vertex-count edge-count`"));
        };
        let mut g = Self::new(n)?;
        // Segment form: recover the point count from n = C(p, 2).
        let points = (2..=12).find(|p| p * (p - 1) / 2 == n);

        let mut seen = 0;
        for (line, body) in lines {
            let (u, v) = if let Some((left, right)) = body.split_once("<->") {
                let p = points.ok_or_else(|| {
                    Error::parse(line, format!("segment form needs C(p, 2) vertices, got {n}"))
                })?;
                let seg = |s: &str| -> Result<usize> {
                    match parse_numbers(line, s)?[..] {
                        [i, j] if i < j && j < p => Ok(crate::disjointness::SegmentId::new(i, j).index(p)),
                        _ => Err(Error::parse(line, format!("bad segment `{}`", s.trim()))),
                    }
                };
                (seg(left)?, seg(right)?)
            } else {
                match parse_numbers(line, body)?[..] {
                    [u, v] => (u, v),
                    _ => return Err(Error::parse(line, "expected `u v`")),
                }
            };
            if u >= n || v >= n || u == v {
                return Err(Error::parse(line, format!("invalid edge ({u}, {v})")));
            }
            if !g.has_edge(u, v) {
                g.add_edge(u, v);
                seen += 1;
            }
        }
        if seen != m {
            return Err(Error::parse(hline, format!("header announces {m} edges, found {seen}")));
        }
        Ok(g)
    }
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::parse(line, format!("not a count: `{t}`"))))
        .collect()
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph({} vertices, edges: ", self.vertex_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// True iff some bijection maps `g` onto `h`. Exhaustive search with degree
/// refinement; meant for the small graphs handled by minor replay.
pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    let (gd, hd) = (dg.clone(), dh.clone());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    // Map g's vertices in order of decreasing degree.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(gd[v]));
    let mut image = vec![usize::MAX; n];
    extend_isomorphism(g, h, &gd, &hd, &order, 0, &mut image, 0)
}

#[allow(clippy::too_many_arguments)]
fn extend_isomorphism(
    g: &SimpleGraph,
    h: &SimpleGraph,
    gd: &[usize],
    hd: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in members(h.vertices() & !used) {
        if hd[w] != gd[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if consistent {
            image[v] = w;
            if extend_isomorphism(g, h, gd, hd, order, depth + 1, image, used | 1 << w) {
                return true;
            }
        }
    }
    image[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shapes() {
        let c = SimpleGraph::cycle(6);
        assert_eq!(c.edge_count(), 6);
        assert!(c.degrees().iter().all(|&d| d == 2));
        assert!(SimpleGraph::complete(5).is_complete());
        assert_eq!(SimpleGraph::star(3).degree(0), 3);
        assert!(SimpleGraph::new(65).is_err());
        assert!(SimpleGraph::complete(64).is_complete());
    }

    #[test]
    fn components() {
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components_within(g.vertices()), vec![0b111, 0b11000, 0b100000]);
        assert!(!g.is_connected());
        assert!(g.is_connected_within(0b111));
        assert!(SimpleGraph::path(4).is_connected());
    }

    #[test]
    fn complement_of_cycle() {
        let g = SimpleGraph::cycle(5).complement();
        assert_eq!(g.edge_count(), 5);
        assert!(are_isomorphic(&g, &SimpleGraph::cycle(5)));
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let g = SimpleGraph::star(3);
        assert_eq!(SimpleGraph::parse(&g.to_edge_list()).unwrap(), g);
        assert!(SimpleGraph::parse("# nothing\n3 1\n0 3\n").is_err());
        assert!(SimpleGraph::parse("3 2\n0 1\n").is_err());
        assert!(SimpleGraph::parse("").is_err());
        let seg = SimpleGraph::parse("6 1\n0 1 <-> 2 3\n").unwrap();
        assert_eq!(seg.edge_count(), 1);
    }

    #[test]
    fn isomorphism_detects_difference() {
        let path = SimpleGraph::path(4);
        let star = SimpleGraph::star(3);
        assert!(!are_isomorphic(&path, &star));
        let relabelled = path.relabelled(&[2, 0, 3, 1]);
        assert!(are_isomorphic(&path, &relabelled));
    }
}
