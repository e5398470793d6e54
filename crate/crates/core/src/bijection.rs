//! The map from tau-family wheel forests to fan spanning trees, its inverse,
//! and an exhaustive fiber audit.
//!
//! Forests are first rotation-normalized so the rim-only component is the arc
//! `v_1..v_k`; the cut vertex is then `v_{k+1}`. On a normalized forest with
//! `k < n` the forward map relabels
//!
//! ```text
//! v_c -> v_h,  v_i -> u_i (i <= k),  v_{k+1} -> u_k,  v_i -> u_{i-1} (i >= k+2)
//! ```
//!
//! into the fan with `n - 1` path vertices. Cycle edges of the arc become the
//! path `u_1..u_k`, the spoke at the cut vertex becomes `{v_h, u_k}` and every
//! other spoke lands on its reindexed position. Rim edges inside the center
//! component follow the same relabeling. When the center is isolated
//! (`k = n`) the arc edges `v_1..v_{n-1}` become the full path, `{v_{n-1}, v_n}`
//! is dropped and `{v_h, u_1}` is added.
//!
//! The inverse reads the arc off the longest path prefix starting at `u_1`.
//! It only accepts trees whose path edges all lie in that prefix, which
//! are exactly the images of forests whose center component is a star.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::enumerate::{enum_tau, rim_arc, EnumCap};
use crate::error::{Error, Result};
use crate::graph::{
    edge_set, is_acyclic, make_fan, make_wheel, partition, render_inline, rotate_rim, Edge,
    EdgeSet, VertexId,
};
use crate::kirchhoff::count_spanning_trees;
use crate::report::Check;
use crate::Int;

/// A tau-family forest of `make_wheel(n)` split into its two components.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WheelForest {
    n: usize,
    center_edges: EdgeSet,
    cycle_edges: EdgeSet,
    arc_start: VertexId,
    arc_len: usize,
}

impl WheelForest {
    pub fn from_edges(n: usize, edges: &EdgeSet) -> Result<Self> {
        let wheel = make_wheel(n)?;
        let invalid = |msg: String| Error::InvalidForest(msg);
        if let Some(e) = edges.iter().find(|e| !wheel.has_edge(e)) {
            return Err(invalid(format!(
                "{e} is not an edge of the wheel on {n} rim vertices"
            )));
        }
        if edges.len() != n - 1 {
            return Err(invalid(format!(
                "expected {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        if !is_acyclic(n + 1, edges) {
            return Err(invalid("edges contain a cycle".into()));
        }
        let parts = partition(n + 1, edges);
        let rim = parts.iter().find(|p| !p.contains(&0)).expect("two parts");
        let (arc_start, arc_len) = rim_arc(n, rim, edges)
            .ok_or_else(|| invalid("rim component is not a consecutive arc".into()))?;
        let (cycle_edges, center_edges): (EdgeSet, EdgeSet) =
            edges.iter().partition(|e| rim.contains(&e.a()));
        let arc: Vec<VertexId> = (0..arc_len).map(|i| (arc_start - 1 + i) % n + 1).collect();
        let path: EdgeSet = arc
            .windows(2)
            .map(|w| Edge::new(w[0], w[1]))
            .collect::<Result<_>>()?;
        if path != cycle_edges {
            return Err(invalid(
                "rim component is not the path along its arc".into(),
            ));
        }
        Ok(WheelForest {
            n,
            center_edges,
            cycle_edges,
            arc_start,
            arc_len,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn center_edges(&self) -> &EdgeSet {
        &self.center_edges
    }

    pub fn cycle_edges(&self) -> &EdgeSet {
        &self.cycle_edges
    }

    pub fn arc_start(&self) -> VertexId {
        self.arc_start
    }

    pub fn arc_len(&self) -> usize {
        self.arc_len
    }

    pub fn edges(&self) -> EdgeSet {
        self.center_edges
            .union(&self.cycle_edges)
            .copied()
            .collect()
    }

    /// True when the center component uses spokes only.
    pub fn center_is_star(&self) -> bool {
        self.center_edges.iter().all(|e| e.a() == 0)
    }

    pub fn rotated(&self, shift: usize) -> Self {
        WheelForest::from_edges(self.n, &rotate_rim(self.n, &self.edges(), shift))
            .expect("rotation preserves forest structure")
    }
}

impl fmt::Display for WheelForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_inline(&self.edges()))
    }
}

/// A spanning tree of `make_fan(m)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FanTree {
    m: usize,
    edges: EdgeSet,
}

impl FanTree {
    pub fn new(m: usize, edges: EdgeSet) -> Result<Self> {
        let fan = make_fan(m)?;
        if let Some(e) = edges.iter().find(|e| !fan.has_edge(e)) {
            return Err(Error::InvalidFanTree(format!(
                "{e} is not an edge of the fan on {m} path vertices"
            )));
        }
        if edges.len() != m || !is_acyclic(m + 1, &edges) {
            return Err(Error::InvalidFanTree(
                "edges do not form a spanning tree".into(),
            ));
        }
        Ok(FanTree { m, edges })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }
}

impl fmt::Display for FanTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_inline(&self.edges))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedForest {
    pub forest: WheelForest,
    /// Shift applied by [`normalize`]; rotating back by it recovers the input.
    pub rotation: usize,
}

impl NormalizedForest {
    pub fn cut_vertex(&self) -> Option<VertexId> {
        (self.forest.arc_len < self.forest.n).then_some(self.forest.arc_len + 1)
    }

    pub fn denormalize(&self) -> WheelForest {
        let n = self.forest.n;
        self.forest.rotated(n - self.rotation % n)
    }
}

/// Rotates rim labels so the rim arc starts at `v_1`. With an isolated center
/// this puts the missing cycle edge at `{v_n, v_1}`.
pub fn normalize(f: &WheelForest) -> NormalizedForest {
    let rotation = f.arc_start - 1;
    let forest = f.rotated(rotation);
    debug_assert_eq!(forest.arc_start, 1);
    NormalizedForest { forest, rotation }
}

/// Forward map into the fan on `n - 1` path vertices.
pub fn phi(f: &WheelForest) -> Result<FanTree> {
    let nf = normalize(f);
    let (n, k) = (nf.forest.n, nf.forest.arc_len);
    let m = n - 1;
    let edges: EdgeSet = if k == n {
        (1..m)
            .map(|i| Edge::new(i, i + 1))
            .chain([Edge::new(0, 1)])
            .collect::<Result<_>>()?
    } else {
        let relabel = |v: VertexId| match v {
            0 => 0,
            v if v <= k => v,
            v if v == k + 1 => k,
            v => v - 1,
        };
        nf.forest
            .edges()
            .iter()
            .map(|e| e.map(relabel))
            .collect::<Result<_>>()?
    };
    FanTree::new(m, edges)
}

/// Inverse of [`phi`] on its star-center image, producing a normalized
/// forest of the wheel on `n` rim vertices.
pub fn psi(s: &FanTree, n: usize) -> Result<WheelForest> {
    if n < 3 || s.m + 1 != n {
        return Err(Error::InvalidFanTree(format!(
            "a wheel with {n} rim vertices pairs with a fan of {} path vertices",
            n.saturating_sub(1)
        )));
    }
    let m = s.m;
    let path: BTreeSet<VertexId> = s
        .edges
        .iter()
        .filter(|e| e.a() != 0)
        .map(|e| e.a())
        .collect();
    let hubs: BTreeSet<VertexId> = s
        .edges
        .iter()
        .filter(|e| e.a() == 0)
        .map(|e| e.b())
        .collect();

    // step 1: the maximal path prefix u_1..u_k is the rim arc
    let mut k = 1;
    while path.contains(&k) {
        k += 1;
    }
    if path.len() != k - 1 {
        return Err(Error::NotInImage(
            "path edges do not form a single prefix path u1..uk".into(),
        ));
    }
    let arc = |k: usize| (1..k).map(|i| Edge::new(i, i + 1));

    // step 4: full path plus {v_h, u_1} is the isolated center
    if k == m && hubs.len() == 1 && hubs.contains(&1) {
        let edges: EdgeSet = arc(n).collect::<Result<_>>()?;
        return WheelForest::from_edges(n, &edges);
    }
    if let Some(i) = hubs.iter().find(|&&i| i < k) {
        return Err(Error::NotInImage(format!(
            "hub edge 0-{i} lies inside the prefix path u1..u{k}"
        )));
    }
    // steps 2 and 3: {v_h, u_k} is the cut-vertex spoke, the rest shift by one
    let edges: EdgeSet = arc(k)
        .chain(hubs.iter().map(|&i| Edge::new(0, i + 1)))
        .collect::<Result<_>>()?;
    WheelForest::from_edges(n, &edges)
}

/// `(input, expected output)` edge-set pairs.
pub type ExamplePairs = Vec<(EdgeSet, EdgeSet)>;

/// The three worked correspondences for the wheel on 4 rim vertices:
/// `(forest, image)` pairs checked by [`phi`], and `(image, preimage)` pairs
/// checked by [`psi`].
pub fn worked_examples() -> (ExamplePairs, ExamplePairs) {
    let es = |p: &[(VertexId, VertexId)]| edge_set(p).expect("literal edges");
    let forward = vec![
        (es(&[(1, 2), (2, 3), (0, 4)]), es(&[(1, 2), (2, 3), (0, 3)])),
        (es(&[(2, 3), (0, 1), (0, 4)]), es(&[(1, 2), (0, 2), (0, 3)])),
        (es(&[(1, 2), (2, 3), (3, 4)]), es(&[(1, 2), (2, 3), (0, 1)])),
    ];
    let inverse = vec![
        (es(&[(1, 2), (0, 2), (0, 3)]), es(&[(1, 2), (0, 3), (0, 4)])),
        (es(&[(1, 2), (2, 3), (0, 1)]), es(&[(1, 2), (2, 3), (3, 4)])),
    ];
    (forward, inverse)
}

pub fn worked_example_checks() -> Vec<Check> {
    let (forward, inverse) = worked_examples();
    let mut checks = Vec::new();
    for (forest, image) in forward {
        let params = format!("n=4 forest={}", render_inline(&forest));
        let got = WheelForest::from_edges(4, &forest)
            .and_then(|f| phi(&f))
            .map(|t| render_inline(t.edges()));
        let got = got.unwrap_or_else(|e| e.to_string());
        checks.push(Check::compare(
            "bijection",
            "forward example",
            params,
            &render_inline(&image),
            &got,
        ));
    }
    for (tree, preimage) in inverse {
        let params = format!("n=4 tree={}", render_inline(&tree));
        let got = FanTree::new(3, tree)
            .and_then(|t| psi(&t, 4))
            .map(|f| render_inline(&f.edges()));
        let got = got.unwrap_or_else(|e| e.to_string());
        checks.push(Check::compare(
            "bijection",
            "inverse example",
            params,
            &render_inline(&preimage),
            &got,
        ));
    }
    checks
}

/// Exhaustive audit of [`phi`] over the tau family of one wheel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub n: usize,
    pub labeled: usize,
    /// Distinct images over all labeled forests.
    pub images: usize,
    /// fiber size -> number of images with that many labeled preimages
    pub fiber_histogram: BTreeMap<usize, usize>,
    pub all_images_valid: bool,
    pub edge_counts_preserved: bool,
    pub fan_trees_n_minus_1: Int,
    pub fan_trees_n: Int,
    /// Normalized representatives (arc starting at `v_1`).
    pub normalized: usize,
    pub normalized_images: usize,
    pub roundtrip_ok: usize,
    /// Representatives the inverse rejects as outside its image.
    pub roundtrip_rejected: usize,
    pub star_center: usize,
    pub star_center_roundtrip_ok: usize,
}

impl FiberReport {
    pub fn fibers_max(&self) -> usize {
        self.fiber_histogram
            .keys()
            .next_back()
            .copied()
            .unwrap_or(0)
    }

    pub fn roundtrip_pass(&self) -> bool {
        self.roundtrip_ok == self.normalized
    }

    pub fn normalized_injective(&self) -> bool {
        self.normalized_images == self.normalized
    }

    /// Fan size whose full spanning-tree set the image set covers, if any.
    pub fn exhausts(&self) -> Option<usize> {
        if Int::from(self.images) == self.fan_trees_n_minus_1 {
            Some(self.n - 1)
        } else if Int::from(self.images) == self.fan_trees_n {
            Some(self.n)
        } else {
            None
        }
    }

    pub fn machine_line(&self) -> String {
        format!(
            "n={} images={} fibers_max={} roundtrip={}",
            self.n,
            self.images,
            self.fibers_max(),
            if self.roundtrip_pass() {
                "pass"
            } else {
                "fail"
            }
        )
    }

    pub fn render(&self) -> String {
        let hist: Vec<String> = self
            .fiber_histogram
            .iter()
            .map(|(size, count)| format!("{size}:{count}"))
            .collect();
        let exhausts = match self.exhausts() {
            Some(m) => format!("fan with {m} path vertices"),
            None => "neither fan size".into(),
        };
        format!(
            "fiber audit, wheel with {n} rim vertices (images in the fan with {m} path vertices)\n\
             \x20 labeled forests:        {labeled}\n\
             \x20 distinct images:        {images} (fan trees: {t1} on {m} path vertices, {t2} on {n})\n\
             \x20 image set exhausts:     {exhausts}\n\
             \x20 fiber histogram:        {hist}\n\
             \x20 images valid:           {valid}\n\
             \x20 edge counts preserved:  {edges}\n\
             \x20 normalized forests:     {norm} -> {nimg} distinct images (injective: {inj})\n\
             \x20 round trip:             {ok}/{norm} ({rej} rejected by the inverse)\n\
             \x20 star-center round trip: {sok}/{star}\n\
             \x20 note: image fan has n-1 path vertices; the cut vertex is excluded\n\
             {line}\n",
            n = self.n,
            m = self.n - 1,
            labeled = self.labeled,
            images = self.images,
            t1 = self.fan_trees_n_minus_1,
            t2 = self.fan_trees_n,
            hist = hist.join(" "),
            valid = self.all_images_valid,
            edges = self.edge_counts_preserved,
            norm = self.normalized,
            nimg = self.normalized_images,
            inj = self.normalized_injective(),
            ok = self.roundtrip_ok,
            rej = self.roundtrip_rejected,
            sok = self.star_center_roundtrip_ok,
            star = self.star_center,
            line = self.machine_line(),
        )
    }

    /// Asserted checks (image validity, edge counts, star-center round trip)
    /// plus informational findings on injectivity and coverage.
    pub fn to_checks(&self) -> Vec<Check> {
        let params = format!("n={}", self.n);
        vec![
            Check::assert_true(
                "bijection",
                "images are fan spanning trees",
                params.clone(),
                self.all_images_valid,
                self.all_images_valid.to_string(),
            ),
            Check::assert_true(
                "bijection",
                "edge count preserved",
                params.clone(),
                self.edge_counts_preserved,
                self.edge_counts_preserved.to_string(),
            ),
            Check::compare(
                "bijection",
                "star-center round trip",
                params.clone(),
                &self.star_center,
                &self.star_center_roundtrip_ok,
            ),
            Check::info("bijection", "fibers", params.clone(), self.machine_line()),
            Check::info(
                "bijection",
                "normalized round trip",
                params,
                format!(
                    "{}/{} ok, {} rejected, {} distinct images of {} normalized forests",
                    self.roundtrip_ok,
                    self.normalized,
                    self.roundtrip_rejected,
                    self.normalized_images,
                    self.normalized
                ),
            ),
        ]
    }
}

pub fn fiber_report(n: usize, cap: EnumCap) -> Result<FiberReport> {
    let tau = enum_tau(n, cap)?;
    let fan = make_fan(n - 1)?;
    let mut fibers: BTreeMap<EdgeSet, usize> = BTreeMap::new();
    let mut all_images_valid = true;
    let mut edge_counts_preserved = true;
    let mut normalized_images = BTreeSet::new();
    let (mut normalized, mut roundtrip_ok, mut roundtrip_rejected) = (0, 0, 0);
    let (mut star_center, mut star_center_roundtrip_ok) = (0, 0);

    for rec in &tau {
        let forest = WheelForest::from_edges(n, &rec.forest.edges)?;
        let image = match phi(&forest) {
            Ok(t) => t,
            Err(_) => {
                all_images_valid = false;
                continue;
            }
        };
        edge_counts_preserved &= image.edges.len() == fan.vertex_count() - 1
            && image.edges.len() == forest.edges().len();
        *fibers.entry(image.edges.clone()).or_default() += 1;

        if forest.arc_start == 1 {
            normalized += 1;
            normalized_images.insert(image.edges.clone());
            let back = psi(&image, n);
            let ok = back.as_ref().is_ok_and(|b| *b == forest);
            roundtrip_ok += usize::from(ok);
            roundtrip_rejected += usize::from(back.is_err());
            if forest.center_is_star() {
                star_center += 1;
                star_center_roundtrip_ok += usize::from(ok);
            }
        }
    }

    let mut fiber_histogram = BTreeMap::new();
    for size in fibers.values() {
        *fiber_histogram.entry(*size).or_default() += 1;
    }
    Ok(FiberReport {
        n,
        labeled: tau.len(),
        images: fibers.len(),
        fiber_histogram,
        all_images_valid,
        edge_counts_preserved,
        fan_trees_n_minus_1: count_spanning_trees(&fan),
        fan_trees_n: count_spanning_trees(&make_fan(n)?),
        normalized,
        normalized_images: normalized_images.len(),
        roundtrip_ok,
        roundtrip_rejected,
        star_center,
        star_center_roundtrip_ok,
    })
}
