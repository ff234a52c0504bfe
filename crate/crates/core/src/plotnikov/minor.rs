//! Replayable minor witnesses.
//!
//! Operations name vertices by their id in the source graph. A contraction
//! `C u v` merges `v` into `u`; `v` disappears and `u` keeps its id. After the
//! last operation the surviving vertices are renumbered `0..` in ascending
//! order of their source ids.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, members, SimpleGraph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorOp {
    DeleteVertex(usize),
    DeleteEdge(usize, usize),
    ContractEdge(usize, usize),
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MinorOp::DeleteVertex(v) => write!(f, "D {v}"),
            MinorOp::DeleteEdge(u, v) => write!(f, "DE {u} {v}"),
            MinorOp::ContractEdge(u, v) => write!(f, "C {u} {v}"),
        }
    }
}

/// Applies `ops` to `source` and returns the compacted result.
pub fn replay(source: &SimpleGraph, ops: &[MinorOp]) -> Result<SimpleGraph> {
    let mut g = source.clone();
    let mut alive: VertexSet = source.vertices();
    let fail = |step: usize, message: String| Error::Replay { step, message };
    let live = |alive: VertexSet, v: usize| v < 64 && alive >> v & 1 == 1;

    for (step, op) in ops.iter().enumerate() {
        match *op {
            MinorOp::DeleteVertex(v) => {
                if !live(alive, v) {
                    return Err(fail(step, format!("vertex {v} is not present")));
                }
                for w in members(g.neighbors(v)) {
                    g.remove_edge(v, w);
                }
                alive &= !(1 << v);
            }
            MinorOp::DeleteEdge(u, v) | MinorOp::ContractEdge(u, v) => {
                if u == v || !live(alive, u) || !live(alive, v) || !g.has_edge(u, v) {
                    return Err(fail(step, format!("{u} {v} is not an edge")));
                }
                g.remove_edge(u, v);
                if let MinorOp::ContractEdge(..) = op {
                    for w in members(g.neighbors(v)) {
                        g.remove_edge(v, w);
                        g.add_edge(u, w);
                    }
                    alive &= !(1 << v);
                }
            }
        }
    }
    Ok(g.induced(alive))
}

/// A claim that `result` is a minor of the graph named `source_id`, with the
/// operations that produce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub source_id: String,
    pub operations: Vec<MinorOp>,
    pub result: SimpleGraph,
}

impl MinorWitness {
    /// Replays the operations on `source` and checks the outcome is
    /// isomorphic to the recorded result.
    pub fn verify(&self, source: &SimpleGraph) -> Result<bool> {
        Ok(are_isomorphic(&replay(source, &self.operations)?, &self.result))
    }

    /// Text form:
    ///
    /// ```text
    /// source <id>
    /// DE u v | C u v | D v      (one per line, in order)
    /// result <n> <m>
    /// E u v                     (one per edge)
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!("source {}\n", self.source_id);
        for op in &self.operations {
            out.push_str(&format!("{op}\n"));
        }
        out.push_str(&format!("result {} {}\n", self.result.vertex_count(), self.result.edge_count()));
        for (u, v) in self.result.edges() {
            out.push_str(&format!("E {u} {v}\n"));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut source_id = None;
        let mut operations = Vec::new();
        let mut result: Option<(SimpleGraph, usize)> = None;
        let mut edges_seen = 0;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let mut words = body.split_whitespace();
            let tag = words.next().unwrap_or_default();
            let rest: Vec<&str> = words.collect();
            let nums = || -> Result<Vec<usize>> {
                rest.iter()
                    .map(|t| t.parse().map_err(|_| Error::parse(line, format!("bad number `{t}`"))))
                    .collect()
            };
            match (tag, result.is_some()) {
                ("source", _) if source_id.is_none() && rest.len() == 1 => {
                    source_id = Some(rest[0].to_string());
                }
                ("D", false) => match nums()?[..] {
                    [v] => operations.push(MinorOp::DeleteVertex(v)),
                    _ => return Err(Error::parse(line, "expected `D v`")),
                },
                ("DE", false) => match nums()?[..] {
                    [u, v] => operations.push(MinorOp::DeleteEdge(u, v)),
                    _ => return Err(Error::parse(line, "expected `DE u v`")),
                },
                ("C", false) => match nums()?[..] {
                    [u, v] => operations.push(MinorOp::ContractEdge(u, v)),
                    _ => return Err(Error::parse(line, "expected `C u v`")),
                },
                ("result", false) => match nums()?[..] {
                    [n, m] => result = Some((SimpleGraph::new(n)?, m)),
                    _ => return Err(Error::parse(line, "expected `result n m`")),
                },
                ("E", true) => {
                    let (g, _) = result.as_mut().expect("matched on is_some");
                    match nums()?[..] {
                        [u, v] if u < g.vertex_count() && v < g.vertex_count() && u != v && !g.has_edge(u, v) => {
                            g.add_edge(u, v);
                            edges_seen += 1;
                        }
                        _ => return Err(Error::parse(line, "invalid result edge")),
                    }
                }
                _ => return Err(Error::parse(line, format!("unexpected `{body}`"))),
            }
        }
        let source_id = source_id.ok_or_else(|| Error::parse(1, "missing `source` header"))?;
        let (result, m) = result.ok_or_else(|| Error::parse(1, "missing `result` section"))?;
        if edges_seen != m {
            return Err(Error::parse(1, format!("result announces {m} edges, found {edges_seen}")));
        }
        Ok(MinorWitness { source_id, operations, result })
    }
}
