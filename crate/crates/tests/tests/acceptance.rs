//! Acceptance gate: one line per criterion, nonzero exit if any is red.
//!
//! Run with `cargo test -p wheelfan-tests --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use wheelfan_cli::source::{FormulaSource, Standard};
use wheelfan_core::bijection::{fiber_report, normalize, phi, psi, FanTree, WheelForest};
use wheelfan_core::enumerate::{
    enum_spanning_trees, enum_tau, enum_two_forests, tau_cardinality_report, EnumCap,
};
use wheelfan_core::formulas::{self, RimPair};
use wheelfan_core::graph::{
    edge_set, is_spanning_tree, make_fan, make_wheel, render_inline, LabeledGraph,
};
use wheelfan_core::kirchhoff::{count_spanning_trees, count_two_forests, effective_resistance};
use wheelfan_core::{seq, ExactRational, Int};
use wheelfan_tests::{fib_table, lucas_table};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn wheel(n: usize) -> LabeledGraph {
    make_wheel(n).expect("n >= 3")
}

fn c1_wheel_trees() -> Outcome {
    let l = lucas_table(130);
    for n in 3..=64 {
        let expected = &l[2 * n] - 2;
        let minor: Int = count_spanning_trees(&wheel(n));
        ensure(minor == expected, || {
            format!("n={n}: minor={minor} L(2n)-2={expected}")
        })?;
        let formula: Int = formulas::trees_wheel(n).map_err(|e| e.to_string())?;
        ensure(formula == expected, || {
            format!("n={n}: formula={formula} L(2n)-2={expected}")
        })?;
    }
    Ok("n=3..64 minor = formula = L(2n)-2".into())
}

fn c2_fan_trees() -> Outcome {
    let f = fib_table(130);
    for m in 1..=64 {
        let minor: Int = count_spanning_trees(&make_fan(m).expect("m >= 1"));
        ensure(minor == f[2 * m], || {
            format!("m={m}: minor={minor} F(2m)={}", f[2 * m])
        })?;
        let formula: Int = formulas::trees_fan(m).map_err(|e| e.to_string())?;
        ensure(formula == f[2 * m], || {
            format!("m={m}: formula={formula} F(2m)={}", f[2 * m])
        })?;
    }
    Ok("m=1..64 minor = formula = F(2m)".into())
}

fn c3_separating_forests() -> Outcome {
    let mut cells = 0;
    for n in 3..=32 {
        let g = wheel(n);
        for k in 1..=n / 2 {
            let minor: Int = count_two_forests(&g, 1, 1 + k).map_err(|e| e.to_string())?;
            let pair = RimPair::new(n, 1, 1 + k).map_err(|e| e.to_string())?;
            let formula: Int = formulas::forests_separating(&pair).map_err(|e| e.to_string())?;
            ensure(formula == minor, || {
                format!("n={n} k={k}: formula={formula} minor={minor}")
            })?;
            cells += 1;
        }
    }
    Ok(format!("{cells} (n,k) cells, n=3..32"))
}

fn c4_special_pairs() -> Outcome {
    let (f, l) = (fib_table(70), lucas_table(70));
    for n in 3..=32 {
        let g = wheel(n);
        let minor = |u, v| -> Int { count_two_forests(&g, u, v).expect("distinct") };
        let adjacent = (&f[2 * n - 1] - 1) * 2;
        ensure(minor(1, 2) == adjacent, || {
            format!("adjacent n={n}: minor={} oracle={adjacent}", minor(1, 2))
        })?;
        let a: Int = formulas::forests_sep_adjacent(n).map_err(|e| e.to_string())?;
        ensure(a == adjacent, || {
            format!("adjacent n={n}: formula={a} oracle={adjacent}")
        })?;
        if n >= 4 {
            let dist2 = (&l[2 * n - 2] - 3) * 2;
            ensure(minor(1, 3) == dist2, || {
                format!("distance 2 n={n}: minor={} oracle={dist2}", minor(1, 3))
            })?;
            let d: Int = formulas::forests_sep_dist2(n).map_err(|e| e.to_string())?;
            ensure(d == dist2, || {
                format!("distance 2 n={n}: formula={d} oracle={dist2}")
            })?;
        }
        ensure(minor(1, 0) == f[2 * n], || {
            format!("center n={n}: minor={} F(2n)={}", minor(1, 0), f[2 * n])
        })?;
        let c: Int = formulas::forests_sep_center(n).map_err(|e| e.to_string())?;
        ensure(c == f[2 * n], || {
            format!("center n={n}: formula={c} F(2n)={}", f[2 * n])
        })?;
    }
    Ok("adjacent n=3..32, distance 2 n=4..32, center n=3..32".into())
}

fn c5_resistance() -> Outcome {
    let mut cells = 0;
    for n in 3..=32 {
        let g = wheel(n);
        for k in 1..=n / 2 {
            let minor = effective_resistance::<Int>(&g, 1, 1 + k).map_err(|e| e.to_string())?;
            let formula: ExactRational =
                formulas::resistance_rim(n, k).map_err(|e| e.to_string())?;
            ensure(formula == minor, || {
                format!("rim n={n} k={k}: formula={formula} minor={minor}")
            })?;
            cells += 1;
        }
        let minor = effective_resistance::<Int>(&g, 1, 0).map_err(|e| e.to_string())?;
        let formula: ExactRational = formulas::resistance_center(n).map_err(|e| e.to_string())?;
        ensure(formula == minor, || {
            format!("center n={n}: formula={formula} minor={minor}")
        })?;
        cells += 1;
    }
    Ok(format!("{cells} resistances exact, n=3..32"))
}

fn c6_oracle_agreement() -> Outcome {
    let cap = EnumCap(8);
    let graphs = (3..=7)
        .map(|n| (format!("wheel n={n}"), wheel(n)))
        .chain((1..=7).map(|m| (format!("fan m={m}"), make_fan(m).unwrap())));
    let (mut graphs_seen, mut pairs) = (0, 0);
    for (label, g) in graphs {
        let trees = enum_spanning_trees(&g, cap)
            .map_err(|e| e.to_string())?
            .len();
        let minor: Int = count_spanning_trees(&g);
        ensure(Int::from(trees) == minor, || {
            format!("{label}: enumerated {trees} trees, minor {minor}")
        })?;
        let v = g.vertex_count();
        for a in 0..v {
            for b in a + 1..v {
                let listed = enum_two_forests(&g, a, b, cap)
                    .map_err(|e| e.to_string())?
                    .len();
                let minor: Int = count_two_forests(&g, a, b).map_err(|e| e.to_string())?;
                ensure(Int::from(listed) == minor, || {
                    format!("{label} pair ({a},{b}): enumerated {listed}, minor {minor}")
                })?;
                pairs += 1;
            }
        }
        graphs_seen += 1;
    }
    Ok(format!(
        "{graphs_seen} graphs with at most 8 vertices, {pairs} pairs"
    ))
}

/// The four identities exactly as stated, over n = 1..500.
fn c7_identity_sweep() -> Outcome {
    let (f, l) = (fib_table(2002), lucas_table(2002));
    let (mut printed_fails, mut first_fail, mut corrected_holds) = (0, None, 0);
    for n in 1..=500u64 {
        let i = n as usize;
        let f2n: BigInt = seq::fib(2 * n);
        let l2n: BigInt = seq::lucas(2 * n);
        ensure(f2n == f[2 * i] && l2n == l[2 * i], || {
            format!("n={n}: fast doubling disagrees with the recurrence")
        })?;
        let f4n: BigInt = seq::fib(4 * n);
        ensure(f4n == &f2n * &l2n, || format!("n={n}: f4n != f2n*l2n"))?;
        ensure(&l2n - &f2n == &f[2 * i - 1] * 2, || {
            format!("n={n}: l2n - f2n != 2 f(2n-1)")
        })?;
        let sum: BigInt = (0..i).map(|k| &f[2 * k]).sum();
        ensure(sum == &f[2 * i - 1] - 1, || {
            format!("n={n}: sum of f(2k), k<n != f(2n-1) - 1")
        })?;
        let lhs: BigInt = &l2n - &f2n * 5;
        let rhs: BigInt = &l[2 * i - 2] * 2;
        if lhs != rhs {
            printed_fails += 1;
            first_fail.get_or_insert((n, lhs, rhs.clone()));
        }
        corrected_holds += usize::from(&l2n * 3 - &f2n * 5 == rhs);
    }
    match first_fail {
        None => Ok("four identities hold for n=1..500".into()),
        Some((n, lhs, rhs)) => Err(format!(
            "l2n - 5 f2n = 2 l(2n-2) fails for {printed_fails} of 500 n (first n={n}: {lhs} vs {rhs}); \
             the other three hold for all n; 3 l2n - 5 f2n = 2 l(2n-2) holds for {corrected_holds} of 500"
        )),
    }
}

/// Worked examples on the wheel with 4 rim vertices, as rendered strings.
const FORWARD_EXAMPLES: [(&[(usize, usize)], &str); 2] = [
    (&[(1, 2), (2, 3), (0, 4)], "{0-3, 1-2, 2-3}"),
    (&[(2, 3), (0, 1), (0, 4)], "{0-2, 0-3, 1-2}"),
];
const INVERSE_EXAMPLE: (&[(usize, usize)], &str) = (&[(1, 2), (0, 2), (0, 3)], "{0-3, 0-4, 1-2}");

fn c8_bijection_roundtrip() -> Outcome {
    let mut problems = Vec::new();
    for (forest, want) in FORWARD_EXAMPLES {
        let f =
            WheelForest::from_edges(4, &edge_set(forest).unwrap()).map_err(|e| e.to_string())?;
        let got = phi(&f)
            .map(|t| render_inline(t.edges()))
            .unwrap_or_else(|e| e.to_string());
        if got != want {
            problems.push(format!(
                "forward example {}: got {got}, want {want}",
                render_inline(&edge_set(forest).unwrap())
            ));
        }
    }
    let (tree, want) = INVERSE_EXAMPLE;
    let t = FanTree::new(3, edge_set(tree).unwrap()).map_err(|e| e.to_string())?;
    let got = psi(&t, 4)
        .map(|f| render_inline(&f.edges()))
        .unwrap_or_else(|e| e.to_string());
    if got != want {
        problems.push(format!("inverse example: got {got}, want {want}"));
    }

    let (mut tally, mut roundtrip_ok) = (Vec::new(), true);
    for n in 3..=8 {
        let fan = make_fan(n - 1).unwrap();
        let mut normalized = BTreeSet::new();
        for rec in enum_tau(n, EnumCap(9)).map_err(|e| e.to_string())? {
            let f = WheelForest::from_edges(n, &rec.forest.edges).map_err(|e| e.to_string())?;
            let image = phi(&f).map_err(|e| {
                format!(
                    "n={n}: phi failed on {}: {e}",
                    render_inline(&rec.forest.edges)
                )
            })?;
            if !is_spanning_tree(&fan, image.edges()).unwrap_or(false) {
                problems.push(format!(
                    "n={n}: image {} is not a spanning tree of the fan",
                    render_inline(image.edges())
                ));
            }
            normalized.insert(normalize(&f).forest.edges());
        }
        let mut ok = 0;
        for edges in &normalized {
            let f = WheelForest::from_edges(n, edges).map_err(|e| e.to_string())?;
            if phi(&f).and_then(|t| psi(&t, n)).is_ok_and(|back| back == f) {
                ok += 1;
            }
        }
        tally.push(format!("n={n} {ok}/{}", normalized.len()));
        roundtrip_ok &= ok == normalized.len();
    }
    let summary = format!(
        "examples {}; images valid: {}; round trip {}",
        if problems.iter().any(|p| p.contains("example")) {
            "differ"
        } else {
            "exact"
        },
        !problems.iter().any(|p| p.contains("not a spanning tree")),
        tally.join(", ")
    );
    if problems.is_empty() && roundtrip_ok {
        Ok(summary)
    } else if problems.is_empty() {
        Err(summary)
    } else {
        Err(format!("{}; {summary}", problems.join("; ")))
    }
}

fn c9_fiber_audit() -> Outcome {
    let render = || -> Result<String, String> {
        let mut text = String::new();
        for n in 3..=7 {
            text += &fiber_report(n, EnumCap(8))
                .map_err(|e| e.to_string())?
                .render();
        }
        for row in tau_cardinality_report(3..=7, EnumCap(8)).map_err(|e| e.to_string())? {
            ensure(row.candidates.len() == 4, || {
                format!("n={}: expected four comparison columns", row.n)
            })?;
            text += &row.render();
            text.push('\n');
        }
        Ok(text)
    };
    let first = render()?;
    ensure(first == render()?, || {
        "report text differs between runs".into()
    })?;
    for n in 3..=7 {
        ensure(first.contains(&format!("n={n} images=")), || {
            format!("missing fiber line for n={n}")
        })?;
        ensure(first.contains(&format!("n={n} labeled=")), || {
            format!("missing cardinality line for n={n}")
        })?;
    }
    Ok(format!(
        "reports for n=3..7, {} bytes, deterministic",
        first.len()
    ))
}

/// One closed form with a single constant altered.
#[derive(Clone, Copy, Debug)]
enum Tamper {
    WheelTrees,
    FanTrees,
    Separating,
    Adjacent,
    Distance2,
    Center,
    RimResistance,
    CenterResistance,
}

impl Tamper {
    const ALL: [Tamper; 8] = [
        Tamper::WheelTrees,
        Tamper::FanTrees,
        Tamper::Separating,
        Tamper::Adjacent,
        Tamper::Distance2,
        Tamper::Center,
        Tamper::RimResistance,
        Tamper::CenterResistance,
    ];
}

impl FormulaSource for Tamper {
    fn trees_wheel(&self, n: usize) -> wheelfan_core::Result<Int> {
        match self {
            Tamper::WheelTrees => Ok(seq::lucas::<Int>(2 * n as u64) - 3),
            _ => Standard.trees_wheel(n),
        }
    }
    fn trees_fan(&self, m: usize) -> wheelfan_core::Result<Int> {
        match self {
            Tamper::FanTrees => Ok(seq::fib(2 * m as u64 + 1)),
            _ => Standard.trees_fan(m),
        }
    }
    fn forests_at_distance(&self, n: usize, k: usize) -> wheelfan_core::Result<Int> {
        match self {
            Tamper::Separating => {
                let (n2, k2) = (2 * n as u64, 2 * k as u64);
                Ok(seq::fib::<Int>(k2) * (seq::lucas::<Int>(n2) - 2)
                    - seq::fib::<Int>(n2) * (seq::lucas::<Int>(k2) - 3))
            }
            _ => Standard.forests_at_distance(n, k),
        }
    }
    fn sep_adjacent(&self, n: usize) -> wheelfan_core::Result<Int> {
        match self {
            Tamper::Adjacent => Ok((seq::fib::<Int>(2 * n as u64 - 1) - 2) * 2),
            _ => Standard.sep_adjacent(n),
        }
    }
    fn sep_dist2(&self, n: usize) -> wheelfan_core::Result<Int> {
        match self {
            Tamper::Distance2 => Ok((seq::lucas::<Int>(2 * n as u64 - 2) - 4) * 2),
            _ => Standard.sep_dist2(n),
        }
    }
    fn sep_center(&self, n: usize) -> wheelfan_core::Result<Int> {
        match self {
            Tamper::Center => Ok(seq::fib(2 * n as u64 - 1)),
            _ => Standard.sep_center(n),
        }
    }
    fn resistance_rim(&self, n: usize, k: usize) -> wheelfan_core::Result<ExactRational> {
        match self {
            Tamper::RimResistance => {
                let (f2n, f4n): (Int, Int) = (seq::fib(2 * n as u64), seq::fib(4 * n as u64));
                let (f2k, f4k): (Int, Int) = (seq::fib(2 * k as u64), seq::fib(4 * k as u64));
                let lead = ExactRational::new(&f2n * &f2n, f4n - f2n * 2);
                let two = ExactRational::from_integer(Int::from(3));
                Ok(lead * (two - ExactRational::new(f4k, f2k.clone()))
                    + ExactRational::from_integer(f2k))
            }
            _ => Standard.resistance_rim(n, k),
        }
    }
    fn resistance_center(&self, n: usize) -> wheelfan_core::Result<ExactRational> {
        match self {
            Tamper::CenterResistance => Standard
                .resistance_center(n)
                .map(|r| r + ExactRational::one()),
            _ => Standard.resistance_center(n),
        }
    }
}

fn verify_exit(src: &dyn FormulaSource) -> i32 {
    let mut sink = std::io::sink();
    let args = [
        "wheelfan",
        "verify",
        "--suite",
        "all",
        "--max-n",
        "12",
        "--enum-cap",
        "9",
    ];
    wheelfan_cli::run(args, src, &mut sink, &mut std::io::sink())
}

fn c10_cli_contract() -> Outcome {
    let code = verify_exit(&Standard);
    ensure(code == 0, || {
        format!("verify exited {code} with the standard formulas")
    })?;
    for t in Tamper::ALL {
        let code = verify_exit(&t);
        ensure(code == 1, || {
            format!("tampered {t:?}: verify exited {code}, expected 1")
        })?;
    }
    Ok(format!(
        "verify exits 0; each of {} tampered formulas exits 1",
        Tamper::ALL.len()
    ))
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        id: "C1",
        title: "wheel spanning trees",
        budget: Duration::from_secs(5),
        run: c1_wheel_trees,
    },
    Criterion {
        id: "C2",
        title: "fan spanning trees",
        budget: Duration::from_secs(5),
        run: c2_fan_trees,
    },
    Criterion {
        id: "C3",
        title: "separating two-forests",
        budget: Duration::from_secs(30),
        run: c3_separating_forests,
    },
    Criterion {
        id: "C4",
        title: "adjacent, distance-2 and center counts",
        budget: Duration::from_secs(10),
        run: c4_special_pairs,
    },
    Criterion {
        id: "C5",
        title: "effective resistance",
        budget: Duration::from_secs(30),
        run: c5_resistance,
    },
    Criterion {
        id: "C6",
        title: "enumeration vs determinant",
        budget: Duration::from_secs(60),
        run: c6_oracle_agreement,
    },
    Criterion {
        id: "C7",
        title: "identity sweep",
        budget: Duration::from_secs(5),
        run: c7_identity_sweep,
    },
    Criterion {
        id: "C8",
        title: "bijection round trip",
        budget: Duration::from_secs(60),
        run: c8_bijection_roundtrip,
    },
    Criterion {
        id: "C9",
        title: "fiber and cardinality audit",
        budget: Duration::from_secs(60),
        run: c9_fiber_audit,
    },
    Criterion {
        id: "C10",
        title: "CLI verify contract",
        budget: Duration::from_secs(60),
        run: c10_cli_contract,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if outcome.is_ok() && elapsed > c.budget {
            outcome = Err(format!("took {elapsed:.2?}, budget {:?}", c.budget));
        }
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += usize::from(outcome.is_err());
        println!("[{tag}] {} {} ({elapsed:.2?}): {detail}", c.id, c.title);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        CRITERIA.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
