//! Verification suites: every closed form against Laplacian minors, and
//! minors against enumeration wherever the graph fits under the cap.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use wheelfan_core::bijection::{fiber_report, worked_example_checks};
use wheelfan_core::enumerate::{
    enum_all_two_forests, enum_spanning_trees, tau_cardinality_report, EnumCap,
};
use wheelfan_core::formulas::resistance_center_simplified;
use wheelfan_core::graph::{make_fan, make_wheel, LabeledGraph, VertexId};
use wheelfan_core::kirchhoff::{count_spanning_trees, count_two_forests, effective_resistance};
use wheelfan_core::seq::check_identities;
use wheelfan_core::{render_rational, Check, ExactRational, Int, VerificationReport};

use crate::source::FormulaSource;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Identities,
    Trees,
    Forests,
    Resistance,
    Bijection,
    Tau,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Identities,
        Suite::Trees,
        Suite::Forests,
        Suite::Resistance,
        Suite::Bijection,
        Suite::Tau,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Trees => "trees",
            Suite::Forests => "forests",
            Suite::Resistance => "resistance",
            Suite::Bijection => "bijection",
            Suite::Tau => "tau",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub cap: EnumCap,
}

fn mismatch(suite: Suite, name: &str, params: String, err: impl fmt::Display) -> Check {
    Check::assert_true(suite.name(), name, params, false, format!("error: {err}"))
}

fn compare_int(
    suite: Suite,
    name: &str,
    params: String,
    expected: wheelfan_core::Result<Int>,
    actual: &Int,
) -> Check {
    match expected {
        Ok(v) => Check::compare(suite.name(), name, params, &v, actual),
        Err(e) => mismatch(suite, name, params, e),
    }
}

struct Rational<'a>(&'a ExactRational);

impl fmt::Display for Rational<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_rational(self.0))
    }
}

impl PartialEq for Rational<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

fn compare_rational(
    suite: Suite,
    name: &str,
    params: String,
    expected: wheelfan_core::Result<ExactRational>,
    actual: &ExactRational,
) -> Check {
    match expected {
        Ok(v) => Check::compare(suite.name(), name, params, &Rational(&v), &Rational(actual)),
        Err(e) => mismatch(suite, name, params, e),
    }
}

/// Enumeration-based counts of separating two-forests for every vertex pair.
fn enumerated_pair_counts(
    g: &LabeledGraph,
    cap: EnumCap,
) -> wheelfan_core::Result<BTreeMap<(VertexId, VertexId), usize>> {
    let mut counts = BTreeMap::new();
    for rec in enum_all_two_forests(g, cap)? {
        let [p, q] = rec.parts.as_slice() else {
            unreachable!("two parts")
        };
        for &u in p {
            for &v in q {
                *counts.entry((u.min(v), u.max(v))).or_default() += 1;
            }
        }
    }
    Ok(counts)
}

fn identities(opts: VerifyOptions) -> Vec<Check> {
    check_identities(opts.max_n as u64)
}

fn trees(opts: VerifyOptions, src: &dyn FormulaSource) -> Vec<Check> {
    let s = Suite::Trees;
    let mut checks = Vec::new();
    for n in 3..=opts.max_n {
        let g = make_wheel(n).expect("n >= 3");
        let minor: Int = count_spanning_trees(&g);
        checks.push(compare_int(
            s,
            "wheel formula vs minor",
            format!("n={n}"),
            src.trees_wheel(n),
            &minor,
        ));
        if opts.cap.admits(g.vertex_count()) {
            let listed = enum_spanning_trees(&g, opts.cap).expect("within cap").len();
            checks.push(Check::compare(
                s.name(),
                "wheel enumeration vs minor",
                format!("n={n}"),
                &minor,
                &Int::from(listed),
            ));
        }
    }
    for m in 1..=opts.max_n {
        let g = make_fan(m).expect("m >= 1");
        let minor: Int = count_spanning_trees(&g);
        checks.push(compare_int(
            s,
            "fan formula vs minor",
            format!("m={m}"),
            src.trees_fan(m),
            &minor,
        ));
        if opts.cap.admits(g.vertex_count()) {
            let listed = enum_spanning_trees(&g, opts.cap).expect("within cap").len();
            checks.push(Check::compare(
                s.name(),
                "fan enumeration vs minor",
                format!("m={m}"),
                &minor,
                &Int::from(listed),
            ));
        }
    }
    checks
}

fn forests(opts: VerifyOptions, src: &dyn FormulaSource) -> Vec<Check> {
    let s = Suite::Forests;
    let mut checks = Vec::new();
    for n in 3..=opts.max_n {
        let g = make_wheel(n).expect("n >= 3");
        let minor_at = |u, v| count_two_forests::<Int>(&g, u, v).expect("distinct vertices");
        for k in 1..=n / 2 {
            let params = format!("n={n} k={k}");
            checks.push(compare_int(
                s,
                "separating formula vs minor",
                params,
                src.forests_at_distance(n, k),
                &minor_at(1, 1 + k),
            ));
        }
        checks.push(compare_int(
            s,
            "adjacent formula vs minor",
            format!("n={n}"),
            src.sep_adjacent(n),
            &minor_at(1, 2),
        ));
        if n >= 4 {
            checks.push(compare_int(
                s,
                "distance-2 formula vs minor",
                format!("n={n}"),
                src.sep_dist2(n),
                &minor_at(1, 3),
            ));
        }
        checks.push(compare_int(
            s,
            "center formula vs minor",
            format!("n={n}"),
            src.sep_center(n),
            &minor_at(1, 0),
        ));
    }
    // minors against enumeration, every pair, wheels and fans under the cap
    let graphs = (3..=opts.max_n)
        .map(|n| (format!("wheel n={n}"), make_wheel(n).expect("n >= 3")))
        .chain((1..=opts.max_n).map(|m| (format!("fan m={m}"), make_fan(m).expect("m >= 1"))))
        .filter(|(_, g)| opts.cap.admits(g.vertex_count()));
    for (label, g) in graphs {
        let counts = enumerated_pair_counts(&g, opts.cap).expect("within cap");
        let v = g.vertex_count();
        let mut all_equal = true;
        let mut first_bad = String::new();
        for a in 0..v {
            for b in a + 1..v {
                let minor: Int = count_two_forests(&g, a, b).expect("distinct");
                let listed = Int::from(counts.get(&(a, b)).copied().unwrap_or(0));
                if minor != listed && all_equal {
                    all_equal = false;
                    first_bad = format!("pair ({a},{b}): minor={minor} enumerated={listed}");
                }
            }
        }
        let detail = if all_equal {
            format!("{} pairs agree", v * (v - 1) / 2)
        } else {
            first_bad
        };
        checks.push(Check::assert_true(
            s.name(),
            "enumeration vs minor, all pairs",
            label,
            all_equal,
            detail,
        ));
    }
    checks
}

fn resistance(opts: VerifyOptions, src: &dyn FormulaSource) -> Vec<Check> {
    let s = Suite::Resistance;
    let mut checks = Vec::new();
    for n in 3..=opts.max_n {
        let g = make_wheel(n).expect("n >= 3");
        let trees = ExactRational::from_integer(count_spanning_trees(&g));
        for k in 1..=n / 2 {
            let params = format!("n={n} k={k}");
            let minor = effective_resistance::<Int>(&g, 1, 1 + k).expect("connected");
            checks.push(compare_rational(
                s,
                "rim formula vs minor ratio",
                params.clone(),
                src.resistance_rim(n, k),
                &minor,
            ));
            let forests =
                ExactRational::from_integer(count_two_forests(&g, 1, 1 + k).expect("distinct"));
            checks.push(Check::compare(
                s.name(),
                "r*T = F",
                params,
                &Rational(&forests),
                &Rational(&(minor * trees.clone())),
            ));
        }
        let params = format!("n={n}");
        let minor = effective_resistance::<Int>(&g, 1, 0).expect("connected");
        checks.push(compare_rational(
            s,
            "center formula vs minor ratio",
            params.clone(),
            src.resistance_center(n),
            &minor,
        ));
        checks.push(compare_rational(
            s,
            "center simplified vs minor ratio",
            params,
            resistance_center_simplified(n),
            &minor,
        ));
    }
    checks
}

fn bijection(opts: VerifyOptions) -> Vec<Check> {
    let s = Suite::Bijection;
    let mut checks = worked_example_checks();
    for n in 3..=opts.max_n {
        if !opts.cap.admits(n + 1) {
            checks.push(Check::info(
                s.name(),
                "skipped",
                format!("n={n}"),
                format!("above enumeration cap {}", opts.cap.0),
            ));
            continue;
        }
        match fiber_report(n, opts.cap) {
            Ok(r) => checks.extend(r.to_checks()),
            Err(e) => checks.push(mismatch(s, "fiber audit", format!("n={n}"), e)),
        }
    }
    checks
}

fn tau(opts: VerifyOptions) -> Vec<Check> {
    let ns: Vec<usize> = (3..=opts.max_n)
        .filter(|&n| opts.cap.admits(n + 1))
        .collect();
    match tau_cardinality_report(ns, opts.cap) {
        Ok(rows) => rows.iter().map(|r| r.to_check()).collect(),
        Err(e) => vec![mismatch(Suite::Tau, "cardinality", String::new(), e)],
    }
}

pub fn run_suite(suite: Suite, opts: VerifyOptions, src: &dyn FormulaSource) -> Vec<Check> {
    match suite {
        Suite::Identities => identities(opts),
        Suite::Trees => trees(opts, src),
        Suite::Forests => forests(opts, src),
        Suite::Resistance => resistance(opts, src),
        Suite::Bijection => bijection(opts),
        Suite::Tau => tau(opts),
    }
}

pub fn run(suites: &[Suite], opts: VerifyOptions, src: &dyn FormulaSource) -> VerificationReport {
    let mut report = VerificationReport::new();
    for &suite in suites {
        report.extend(run_suite(suite, opts, src));
    }
    report
}
