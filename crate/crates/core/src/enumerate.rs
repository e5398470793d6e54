//! Brute-force ground truth for small graphs.
//!
//! Edge subsets are scanned in lexicographic order of the canonical edge
//! list; a branch is cut as soon as the chosen edges close a cycle. Output is
//! therefore canonical and duplicate-free.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{
    make_wheel, partition, rim_pred, rim_succ, rotate_rim, DisjointSets, Edge, EdgeSet,
    LabeledGraph, VertexId,
};
use crate::report::Check;
use crate::seq::fib;
use crate::Int;

/// Maximum vertex count accepted by the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCap(pub usize);

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap(10)
    }
}

impl EnumCap {
    pub fn check(self, g: &LabeledGraph) -> Result<()> {
        if g.vertex_count() > self.0 {
            Err(Error::CapExceeded {
                vertex_count: g.vertex_count(),
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }

    pub fn admits(self, vertex_count: usize) -> bool {
        vertex_count <= self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestRecord {
    pub edges: EdgeSet,
    pub parts: Vec<Vec<VertexId>>,
}

/// A member of the tau family together with its rim arc: the rim-only
/// component is `arc_len` consecutive rim vertices starting at `arc_start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauRecord {
    pub forest: ForestRecord,
    pub arc_start: VertexId,
    pub arc_len: usize,
}

/// Calls `visit` on every acyclic subset of `edges` with exactly `size`
/// elements, in lexicographic order.
fn for_each_acyclic_subset(
    vertex_count: usize,
    edges: &[Edge],
    size: usize,
    visit: &mut dyn FnMut(&[Edge]),
) {
    fn rec(
        edges: &[Edge],
        from: usize,
        size: usize,
        ds: &DisjointSets,
        chosen: &mut Vec<Edge>,
        visit: &mut dyn FnMut(&[Edge]),
    ) {
        if chosen.len() == size {
            visit(chosen);
            return;
        }
        let need = size - chosen.len();
        for i in from..edges.len() {
            if edges.len() - i < need {
                break;
            }
            let mut next = ds.clone();
            if !next.union(edges[i].a(), edges[i].b()) {
                continue;
            }
            chosen.push(edges[i]);
            rec(edges, i + 1, size, &next, chosen, visit);
            chosen.pop();
        }
    }
    rec(
        edges,
        0,
        size,
        &DisjointSets::new(vertex_count),
        &mut Vec::with_capacity(size),
        visit,
    );
}

/// All spanning forests of `g` with exactly `components` parts.
fn forests_with_components(g: &LabeledGraph, components: usize) -> Vec<ForestRecord> {
    let v = g.vertex_count();
    if components > v || components == 0 {
        return Vec::new();
    }
    let edges: Vec<Edge> = g.edges().iter().copied().collect();
    let mut out = Vec::new();
    for_each_acyclic_subset(v, &edges, v - components, &mut |chosen| {
        let edges: EdgeSet = chosen.iter().copied().collect();
        let parts = partition(v, &edges);
        out.push(ForestRecord { edges, parts });
    });
    out
}

pub fn enum_spanning_trees(g: &LabeledGraph, cap: EnumCap) -> Result<Vec<EdgeSet>> {
    cap.check(g)?;
    Ok(forests_with_components(g, 1)
        .into_iter()
        .map(|r| r.edges)
        .collect())
}

/// Every two-component spanning forest of `g`.
pub fn enum_all_two_forests(g: &LabeledGraph, cap: EnumCap) -> Result<Vec<ForestRecord>> {
    cap.check(g)?;
    Ok(forests_with_components(g, 2))
}

/// Two-component spanning forests with `u` and `v` in different parts.
pub fn enum_two_forests(
    g: &LabeledGraph,
    u: VertexId,
    v: VertexId,
    cap: EnumCap,
) -> Result<Vec<ForestRecord>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    cap.check(g)?;
    Ok(forests_with_components(g, 2)
        .into_iter()
        .filter(|r| r.parts.iter().all(|p| p.contains(&u) != p.contains(&v)))
        .collect())
}

/// Locates the rim arc covered by a set of rim vertices, as
/// `(start, length)`. When the set is the whole rim the arc is anchored just
/// after the cycle edge missing from `edges`.
pub fn rim_arc(n: usize, rim_part: &[VertexId], edges: &EdgeSet) -> Option<(VertexId, usize)> {
    let inside: BTreeSet<VertexId> = rim_part.iter().copied().collect();
    if inside.is_empty() || inside.contains(&0) {
        return None;
    }
    let k = inside.len();
    let start = if k == n {
        let missing: Vec<VertexId> = (1..=n)
            .filter(|&i| !edges.contains(&Edge::new(i, rim_succ(n, i)).unwrap()))
            .collect();
        match missing.as_slice() {
            [i] => rim_succ(n, *i),
            _ => return None,
        }
    } else {
        let starts: Vec<VertexId> = inside
            .iter()
            .copied()
            .filter(|&i| !inside.contains(&rim_pred(n, i)))
            .collect();
        match starts.as_slice() {
            [s] => *s,
            _ => return None,
        }
    };
    Some((start, k))
}

/// The tau family of `make_wheel(n)`: two-component spanning forests with
/// one part containing the center and the other only rim vertices.
pub fn enum_tau(n: usize, cap: EnumCap) -> Result<Vec<TauRecord>> {
    let g = make_wheel(n)?;
    cap.check(&g)?;
    let mut out = Vec::new();
    for forest in forests_with_components(&g, 2) {
        let rim_parts: Vec<&Vec<VertexId>> =
            forest.parts.iter().filter(|p| !p.contains(&0)).collect();
        let [rim] = rim_parts.as_slice() else {
            continue;
        };
        let (arc_start, arc_len) = rim_arc(n, rim, &forest.edges)
            .expect("a connected acyclic rim part is a consecutive arc");
        out.push(TauRecord {
            forest,
            arc_start,
            arc_len,
        });
    }
    Ok(out)
}

/// Lexicographically least edge set among all rim rotations.
pub fn rotation_canonical(n: usize, edges: &EdgeSet) -> EdgeSet {
    (0..n)
        .map(|r| rotate_rim(n, edges, r))
        .min()
        .expect("n >= 1")
}

pub fn rotation_class_count(n: usize, forests: &[TauRecord]) -> usize {
    forests
        .iter()
        .map(|t| rotation_canonical(n, &t.forest.edges))
        .collect::<BTreeSet<_>>()
        .len()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauCardinality {
    pub n: usize,
    pub labeled: usize,
    pub rotation_classes: usize,
    /// `(label, value)` for f_{2n-2}, f_{2n-1}, f_{2n}, n*f_{2n-1}.
    pub candidates: Vec<(&'static str, Int)>,
}

impl TauCardinality {
    fn matches(&self, count: usize) -> Vec<&'static str> {
        let count = Int::from(count);
        self.candidates
            .iter()
            .filter(|(_, v)| *v == count)
            .map(|(name, _)| *name)
            .collect()
    }

    pub fn labeled_matches(&self) -> Vec<&'static str> {
        self.matches(self.labeled)
    }

    pub fn class_matches(&self) -> Vec<&'static str> {
        self.matches(self.rotation_classes)
    }

    pub fn render(&self) -> String {
        let cands: Vec<String> = self
            .candidates
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let show = |m: Vec<&str>| {
            if m.is_empty() {
                "none".to_string()
            } else {
                m.join(",")
            }
        };
        format!(
            "n={} labeled={} classes={} [{}] labeled_matches={} class_matches={}",
            self.n,
            self.labeled,
            self.rotation_classes,
            cands.join(" "),
            show(self.labeled_matches()),
            show(self.class_matches())
        )
    }

    pub fn to_check(&self) -> Check {
        Check::info("tau", "cardinality", format!("n={}", self.n), self.render())
    }
}

/// Labeled and rotation-class counts of the tau family beside candidate
/// closed forms. Nothing is asserted.
pub fn tau_cardinality_report(
    ns: impl IntoIterator<Item = usize>,
    cap: EnumCap,
) -> Result<Vec<TauCardinality>> {
    ns.into_iter()
        .map(|n| {
            let tau = enum_tau(n, cap)?;
            let m = n as u64;
            let f2n_1: Int = fib(2 * m - 1);
            Ok(TauCardinality {
                n,
                labeled: tau.len(),
                rotation_classes: rotation_class_count(n, &tau),
                candidates: vec![
                    ("f(2n-2)", fib(2 * m - 2)),
                    ("f(2n-1)", f2n_1.clone()),
                    ("f(2n)", fib(2 * m)),
                    ("n*f(2n-1)", Int::from(n) * f2n_1),
                ],
            })
        })
        .collect()
}
