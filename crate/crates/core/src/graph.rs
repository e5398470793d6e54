//! Labeled simple graphs, the wheel and fan families, and the edge-list text
//! format.
//!
//! Vertex `0` is the center of a wheel or the hub of a fan; rim and path
//! vertices are `1..=n`. Subgraphs are plain [`EdgeSet`]s interpreted against
//! a parent [`LabeledGraph`], so vertex labels never change.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Canonically oriented undirected edge (`a < b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    pub fn new(x: VertexId, y: VertexId) -> Result<Self> {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Ok(Edge { a: x, b: y }),
            std::cmp::Ordering::Greater => Ok(Edge { a: y, b: x }),
            std::cmp::Ordering::Equal => Err(Error::Loop(x, y)),
        }
    }

    pub fn a(&self) -> VertexId {
        self.a
    }

    pub fn b(&self) -> VertexId {
        self.b
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }

    /// Applies a vertex relabeling and re-canonicalizes.
    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Result<Self> {
        Edge::new(f(self.a), f(self.b))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

/// Edge subsets iterate in canonical (lexicographic) order and compare by value.
pub type EdgeSet = BTreeSet<Edge>;

/// Builds an [`EdgeSet`] from endpoint pairs in any orientation.
pub fn edge_set(pairs: &[(VertexId, VertexId)]) -> Result<EdgeSet> {
    pairs.iter().map(|&(x, y)| Edge::new(x, y)).collect()
}

/// Renders `{0-3, 1-2}` style inline notation.
pub fn render_inline(edges: &EdgeSet) -> String {
    let parts: Vec<String> = edges.iter().map(Edge::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_count: usize,
    edges: EdgeSet,
}

impl LabeledGraph {
    pub fn new(vertex_count: usize, edges: EdgeSet) -> Result<Self> {
        for e in &edges {
            if e.b >= vertex_count {
                return Err(Error::VertexOutOfRange {
                    vertex: e.b,
                    vertex_count,
                });
            }
        }
        Ok(LabeledGraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn check_subset(&self, sub: &EdgeSet) -> Result<()> {
        match sub.iter().find(|e| !self.edges.contains(e)) {
            Some(e) => Err(Error::NotInGraph(e.a, e.b)),
            None => Ok(()),
        }
    }

    pub fn to_edge_list(&self) -> String {
        format_edge_list(self.vertex_count, &self.edges)
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let (vertex_count, edges) = parse_edge_list(text)?;
        LabeledGraph::new(vertex_count, edges)
    }
}

/// Wheel on `n` rim vertices: center `0`, spokes `{0,i}`, cycle `1..n`.
pub fn make_wheel(n: usize) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(Error::WheelTooSmall(n));
    }
    let mut edges = EdgeSet::new();
    for i in 1..=n {
        edges.insert(Edge { a: 0, b: i });
        edges.insert(Edge::new(i, rim_succ(n, i))?);
    }
    LabeledGraph::new(n + 1, edges)
}

/// Fan on `m` path vertices: hub `0`, hub edges `{0,i}`, path `1..m`.
pub fn make_fan(m: usize) -> Result<LabeledGraph> {
    if m < 1 {
        return Err(Error::FanTooSmall(m));
    }
    let mut edges = EdgeSet::new();
    for i in 1..=m {
        edges.insert(Edge { a: 0, b: i });
        if i < m {
            edges.insert(Edge { a: i, b: i + 1 });
        }
    }
    LabeledGraph::new(m + 1, edges)
}

/// Next rim vertex clockwise on a wheel with `n` rim vertices (`n` wraps to 1).
pub fn rim_succ(n: usize, i: VertexId) -> VertexId {
    if i == n {
        1
    } else {
        i + 1
    }
}

/// Previous rim vertex (`1` wraps to `n`).
pub fn rim_pred(n: usize, i: VertexId) -> VertexId {
    if i == 1 {
        n
    } else {
        i - 1
    }
}

/// Relabels rim vertices `v_i -> v_{i-shift}` (indices mod `n`); the
/// center is fixed.
pub fn rotate_rim(n: usize, edges: &EdgeSet, shift: usize) -> EdgeSet {
    let shift = shift % n;
    let relabel = |v: VertexId| {
        if v == 0 {
            0
        } else {
            (v - 1 + n - shift) % n + 1
        }
    };
    edges
        .iter()
        .map(|e| {
            e.map(relabel)
                .expect("rotation preserves distinct endpoints")
        })
        .collect()
}

/// Cycle distance `min(|i-j|, n-|i-j|)` between rim positions.
pub fn cycle_distance(n: usize, i: VertexId, j: VertexId) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

/// Minimal union-find over `0..n`.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `x` and `y` were already joined.
    pub(crate) fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        // Keep the smaller id as root so parts are keyed by their minimum.
        if rx < ry {
            self.parent[ry] = rx;
        } else {
            self.parent[rx] = ry;
        }
        true
    }
}

/// Connected components of all vertices of `g` under `sub`, ordered by
/// minimum vertex id; each part is sorted.
pub fn components(g: &LabeledGraph, sub: &EdgeSet) -> Result<Vec<Vec<VertexId>>> {
    g.check_subset(sub)?;
    Ok(partition(g.vertex_count, sub))
}

pub(crate) fn partition(vertex_count: usize, sub: &EdgeSet) -> Vec<Vec<VertexId>> {
    let mut ds = DisjointSets::new(vertex_count);
    for e in sub {
        ds.union(e.a, e.b);
    }
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    let mut slot = vec![usize::MAX; vertex_count];
    for v in 0..vertex_count {
        let r = ds.find(v);
        if slot[r] == usize::MAX {
            slot[r] = parts.len();
            parts.push(Vec::new());
        }
        parts[slot[r]].push(v);
    }
    parts
}

pub(crate) fn is_acyclic(vertex_count: usize, sub: &EdgeSet) -> bool {
    let mut ds = DisjointSets::new(vertex_count);
    sub.iter().all(|e| ds.union(e.a, e.b))
}

pub fn is_spanning_tree(g: &LabeledGraph, sub: &EdgeSet) -> Result<bool> {
    g.check_subset(sub)?;
    if sub.len() + 1 != g.vertex_count {
        return Ok(false);
    }
    Ok(is_acyclic(g.vertex_count, sub))
}

/// Serializes as `V <count>` followed by one `a b` line per edge.
pub fn format_edge_list(vertex_count: usize, edges: &EdgeSet) -> String {
    let mut out = format!("V {vertex_count}\n");
    for e in edges {
        out.push_str(&format!("{} {}\n", e.a, e.b));
    }
    out
}

/// Parses the edge-list text format. Edges must be written `a b` with
/// `a < b`; duplicates and out-of-range endpoints are rejected.
pub fn parse_edge_list(text: &str) -> Result<(usize, EdgeSet)> {
    parse_block(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

fn parse_block<'a>(mut lines: impl Iterator<Item = (usize, &'a str)>) -> Result<(usize, EdgeSet)> {
    let (first_no, header) = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() => continue,
            Some(item) => break item,
            None => {
                return Err(Error::Parse {
                    line: 0,
                    msg: "missing \"V <count>\" header".into(),
                })
            }
        }
    };
    let parse_err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut head = header.split_whitespace();
    let vertex_count = match (head.next(), head.next(), head.next()) {
        (Some("V"), Some(count), None) => count
            .parse::<usize>()
            .map_err(|e| parse_err(first_no, format!("bad vertex count {count:?}: {e}")))?,
        _ => {
            return Err(parse_err(
                first_no,
                format!("expected \"V <count>\", got {header:?}"),
            ))
        }
    };
    let mut edges = EdgeSet::new();
    for (no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(no, format!("expected \"a b\", got {line:?}")));
        }
        let mut ends = [0usize; 2];
        for (slot, f) in ends.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|e| parse_err(no, format!("bad vertex {f:?}: {e}")))?;
        }
        let [a, b] = ends;
        if a >= b {
            return Err(parse_err(
                no,
                format!("edge must satisfy a < b, got {a} {b}"),
            ));
        }
        if b >= vertex_count {
            return Err(parse_err(
                no,
                format!("vertex {b} out of range for V {vertex_count}"),
            ));
        }
        if !edges.insert(Edge { a, b }) {
            return Err(parse_err(no, format!("duplicate edge {a} {b}")));
        }
    }
    Ok((vertex_count, edges))
}

/// One edge-list block per forest, blocks separated by a blank line.
pub fn format_forest_list<'a>(
    vertex_count: usize,
    forests: impl IntoIterator<Item = &'a EdgeSet>,
) -> String {
    forests
        .into_iter()
        .map(|f| format_edge_list(vertex_count, f))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn parse_forest_list(text: &str) -> Result<Vec<(usize, EdgeSet)>> {
    let mut blocks: Vec<Vec<(usize, &str)>> = vec![Vec::new()];
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !blocks.last().unwrap().is_empty() {
                blocks.push(Vec::new());
            }
        } else {
            blocks.last_mut().unwrap().push((i + 1, line));
        }
    }
    blocks
        .into_iter()
        .filter(|b| !b.is_empty())
        .map(|b| parse_block(b.into_iter()))
        .collect()
}
