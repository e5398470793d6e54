//! Command-line front end: counting, enumeration, resistance, the wheel/fan
//! map, verification sweeps and b-file output.
//!
//! Exit codes: `0` success, `1` verification mismatch, `2` usage or input
//! error.

pub mod bfile;
pub mod source;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wheelfan_core::bijection::{fiber_report, phi, psi, FanTree, WheelForest};
use wheelfan_core::enumerate::{enum_spanning_trees, enum_tau, enum_two_forests, EnumCap};
use wheelfan_core::graph::{
    cycle_distance, format_edge_list, format_forest_list, make_fan, make_wheel, parse_edge_list,
    Edge, EdgeSet, LabeledGraph, VertexId,
};
use wheelfan_core::kirchhoff::{count_spanning_trees, count_two_forests, effective_resistance};
use wheelfan_core::{render_rational, ExactRational, Int};

use bfile::{BFile, Sequence};
use source::FormulaSource;
use verify::{Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Wheel(usize),
    Fan(usize),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| format!("expected wheel:N, fan:M or file:PATH, got {s:?}"))?;
        let size = || {
            arg.parse::<usize>()
                .map_err(|e| format!("bad size {arg:?}: {e}"))
        };
        match kind {
            "wheel" => Ok(GraphSpec::Wheel(size()?)),
            "fan" => Ok(GraphSpec::Fan(size()?)),
            "file" => Ok(GraphSpec::File(PathBuf::from(arg))),
            _ => Err(format!("unknown graph kind {kind:?}")),
        }
    }
}

impl GraphSpec {
    fn load(&self) -> Result<LabeledGraph, String> {
        match self {
            GraphSpec::Wheel(n) => make_wheel(*n).map_err(|e| e.to_string()),
            GraphSpec::Fan(m) => make_fan(*m).map_err(|e| e.to_string()),
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                LabeledGraph::from_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair(pub VertexId, pub VertexId);

impl FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| format!("expected A,B, got {s:?}"))?;
        let p = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad vertex {x:?}: {e}"))
        };
        Ok(Pair(p(a)?, p(b)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Minor,
    Enum,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountWhat {
    Trees,
    Forests,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateWhat {
    Trees,
    Forests,
    Tau,
}

#[derive(Debug, Parser)]
#[command(
    name = "wheelfan",
    about = "Exact spanning-tree and spanning-forest counts for wheels and fans"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count spanning trees, or two-component forests separating a pair.
    Count {
        what: CountWhat,
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        separate: Option<Pair>,
        #[arg(long, value_enum, default_value = "minor")]
        method: Method,
        #[arg(long, default_value_t = 10)]
        enum_cap: usize,
    },
    /// Effective resistance between two vertices as an exact fraction.
    Resist {
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "minor")]
        method: Method,
        #[arg(long, default_value_t = 10)]
        enum_cap: usize,
    },
    /// The wheel-forest to fan-tree map, its inverse, and the fiber audit.
    Bijection {
        #[command(subcommand)]
        action: BijectionAction,
    },
    /// List trees, separating forests or the tau family in edge-list blocks.
    Enumerate {
        what: EnumerateWhat,
        #[arg(long)]
        graph: GraphSpec,
        #[arg(long)]
        separate: Option<Pair>,
        #[arg(long, default_value_t = 10)]
        enum_cap: usize,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        enum_cap: usize,
    },
    /// Emit sequence terms as "index value" rows.
    Oeis {
        #[arg(long)]
        sequence: String,
        #[arg(long)]
        max_n: usize,
        /// Prefix the rows with '#' header comments.
        #[arg(long)]
        bfile: bool,
    },
}

#[derive(Debug, Args)]
pub struct EdgeInput {
    /// Rim size of the wheel.
    #[arg(long)]
    pub n: Option<usize>,
    /// Inline edges such as "1-2,2-3,0-4".
    #[arg(long, conflicts_with = "file")]
    pub edges: Option<String>,
    /// Edge-list file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum BijectionAction {
    /// Map a wheel forest to its fan tree.
    Forward(EdgeInput),
    /// Map a fan tree back to a normalized wheel forest.
    Inverse(EdgeInput),
    /// Exhaustive fiber audit for one wheel size.
    Audit {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        enum_cap: usize,
    },
}

/// Failure of a subcommand, mapped to an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch(String),
}

type CmdResult = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn io(e: std::io::Error) -> Failure {
    Failure::Usage(e.to_string())
}

/// Parses inline edges: `a-b` or `a b` items separated by commas; braces
/// and whitespace around items are ignored.
pub fn parse_inline_edges(s: &str) -> Result<EdgeSet, String> {
    let body = s.trim().trim_start_matches('{').trim_end_matches('}');
    let mut edges = EdgeSet::new();
    for item in body.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (a, b) = item
            .split_once('-')
            .or_else(|| item.split_once(char::is_whitespace))
            .ok_or_else(|| format!("bad edge {item:?}"))?;
        let p = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad vertex {x:?} in {item:?}: {e}"))
        };
        let e = Edge::new(p(a)?, p(b)?).map_err(|e| e.to_string())?;
        if !edges.insert(e) {
            return Err(format!("duplicate edge {item:?}"));
        }
    }
    Ok(edges)
}

/// Returns `(vertex_count, edges)` from inline or file input; inline input
/// takes its vertex count from `vertices_for_n`.
fn read_edges(
    input: &EdgeInput,
    vertices_for_n: impl Fn(usize) -> usize,
) -> Result<(Option<usize>, EdgeSet), Failure> {
    match (&input.edges, &input.file) {
        (Some(inline), None) => Ok((
            input.n.map(&vertices_for_n),
            parse_inline_edges(inline).map_err(usage)?,
        )),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let (v, edges) =
                parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            if let Some(n) = input.n {
                if vertices_for_n(n) != v {
                    return Err(usage(format!(
                        "--n {n} disagrees with V {v} in {}",
                        path.display()
                    )));
                }
            }
            Ok((Some(v), edges))
        }
        _ => Err(usage("supply exactly one of --edges or --file")),
    }
}

fn wheel_rim(g: &GraphSpec) -> Option<usize> {
    match g {
        GraphSpec::Wheel(n) => Some(*n),
        _ => None,
    }
}

fn check_pair(g: &LabeledGraph, p: Pair) -> CmdResult {
    g.check_vertex(p.0).map_err(usage)?;
    g.check_vertex(p.1).map_err(usage)?;
    if p.0 == p.1 {
        return Err(usage(format!(
            "pair vertices must differ (got {} twice)",
            p.0
        )));
    }
    Ok(())
}

/// Closed-form count for the requested quantity, if one exists.
fn formula_count(
    spec: &GraphSpec,
    separate: Option<Pair>,
    src: &dyn FormulaSource,
) -> Option<wheelfan_core::Result<Int>> {
    match (spec, separate) {
        (GraphSpec::Wheel(n), None) => Some(src.trees_wheel(*n)),
        (GraphSpec::Fan(m), None) => Some(src.trees_fan(*m)),
        (GraphSpec::Wheel(n), Some(Pair(a, b))) if a == 0 || b == 0 => Some(src.sep_center(*n)),
        (GraphSpec::Wheel(n), Some(Pair(a, b))) => {
            Some(src.forests_at_distance(*n, cycle_distance(*n, a, b)))
        }
        _ => None,
    }
}

fn formula_resistance(
    spec: &GraphSpec,
    p: Pair,
    src: &dyn FormulaSource,
) -> Option<wheelfan_core::Result<ExactRational>> {
    let n = wheel_rim(spec)?;
    Some(if p.0 == 0 || p.1 == 0 {
        src.resistance_center(n)
    } else {
        src.resistance_rim(n, cycle_distance(n, p.0, p.1))
    })
}

/// Prints one line per method and fails on disagreement.
fn report_methods(out: &mut dyn Write, values: Vec<(&str, String)>) -> CmdResult {
    for (name, v) in &values {
        writeln!(out, "{name}: {v}").map_err(io)?;
    }
    if values.windows(2).all(|w| w[0].1 == w[1].1) {
        writeln!(out, "pass").map_err(io)?;
        Ok(())
    } else {
        writeln!(out, "FAIL: methods disagree").map_err(io)?;
        Err(Failure::Mismatch("methods disagree".into()))
    }
}

fn cmd_count(
    what: CountWhat,
    spec: &GraphSpec,
    separate: Option<Pair>,
    method: Method,
    cap: EnumCap,
    src: &dyn FormulaSource,
    out: &mut dyn Write,
) -> CmdResult {
    let g = spec.load().map_err(usage)?;
    let separate = match (what, separate) {
        (CountWhat::Trees, None) => None,
        (CountWhat::Trees, Some(_)) => return Err(usage("--separate applies to `count forests`")),
        (CountWhat::Forests, Some(p)) => {
            check_pair(&g, p)?;
            Some(p)
        }
        (CountWhat::Forests, None) => return Err(usage("`count forests` needs --separate A,B")),
    };
    let minor = || -> Int {
        match separate {
            None => count_spanning_trees(&g),
            Some(Pair(a, b)) => count_two_forests(&g, a, b).expect("validated pair"),
        }
    };
    let enumerated = || -> wheelfan_core::Result<Int> {
        Ok(Int::from(match separate {
            None => enum_spanning_trees(&g, cap)?.len(),
            Some(Pair(a, b)) => enum_two_forests(&g, a, b, cap)?.len(),
        }))
    };
    let formula = || formula_count(spec, separate, src);

    match method {
        Method::Minor => writeln!(out, "{}", minor()).map_err(io),
        Method::Formula => {
            let v = formula()
                .ok_or_else(|| usage("no closed form for this graph"))?
                .map_err(usage)?;
            writeln!(out, "{v}").map_err(io)
        }
        Method::Enum => {
            let v = enumerated().map_err(usage)?;
            writeln!(out, "{v}").map_err(io)
        }
        Method::All => {
            let mut values = Vec::new();
            if let Some(f) = formula() {
                values.push(("formula", f.map_err(usage)?.to_string()));
            }
            values.push(("minor", minor().to_string()));
            if cap.admits(g.vertex_count()) {
                values.push(("enum", enumerated().map_err(usage)?.to_string()));
            }
            report_methods(out, values)
        }
    }
}

fn cmd_resist(
    spec: &GraphSpec,
    pair: Pair,
    method: Method,
    cap: EnumCap,
    src: &dyn FormulaSource,
    out: &mut dyn Write,
) -> CmdResult {
    let g = spec.load().map_err(usage)?;
    check_pair(&g, pair)?;
    let minor = || effective_resistance::<Int>(&g, pair.0, pair.1).map_err(usage);
    let enumerated = || -> Result<ExactRational, Failure> {
        let trees = enum_spanning_trees(&g, cap).map_err(usage)?.len();
        if trees == 0 {
            return Err(usage(wheelfan_core::Error::InfiniteResistance));
        }
        let forests = enum_two_forests(&g, pair.0, pair.1, cap)
            .map_err(usage)?
            .len();
        Ok(ExactRational::new(Int::from(forests), Int::from(trees)))
    };
    let formula = || formula_resistance(spec, pair, src);
    match method {
        Method::Minor => writeln!(out, "{}", render_rational(&minor()?)).map_err(io),
        Method::Formula => {
            let r = formula()
                .ok_or_else(|| usage("no closed form for this graph"))?
                .map_err(usage)?;
            writeln!(out, "{}", render_rational(&r)).map_err(io)
        }
        Method::Enum => writeln!(out, "{}", render_rational(&enumerated()?)).map_err(io),
        Method::All => {
            let mut values = Vec::new();
            if let Some(f) = formula() {
                values.push(("formula", render_rational(&f.map_err(usage)?)));
            }
            values.push(("minor", render_rational(&minor()?)));
            if cap.admits(g.vertex_count()) {
                values.push(("enum", render_rational(&enumerated()?)));
            }
            report_methods(out, values)
        }
    }
}

fn cmd_bijection(action: &BijectionAction, out: &mut dyn Write) -> CmdResult {
    match action {
        BijectionAction::Forward(input) => {
            let (v, edges) = read_edges(input, |n| n + 1)?;
            let n = v
                .ok_or_else(|| usage("--n is required with --edges"))?
                .saturating_sub(1);
            let forest = WheelForest::from_edges(n, &edges).map_err(usage)?;
            let tree = phi(&forest).map_err(usage)?;
            write!(out, "{}", format_edge_list(tree.m() + 1, tree.edges())).map_err(io)
        }
        BijectionAction::Inverse(input) => {
            // the fan paired with a wheel of n rim vertices has n vertices
            let (v, edges) = read_edges(input, |n| n)?;
            let n = v.ok_or_else(|| usage("--n is required with --edges"))?;
            let tree = FanTree::new(n.saturating_sub(1), edges).map_err(usage)?;
            let forest = psi(&tree, n).map_err(usage)?;
            write!(out, "{}", format_edge_list(n + 1, &forest.edges())).map_err(io)
        }
        BijectionAction::Audit { n, enum_cap } => {
            if *n < 3 {
                return Err(usage(wheelfan_core::Error::WheelTooSmall(*n)));
            }
            let report = fiber_report(*n, EnumCap(*enum_cap)).map_err(usage)?;
            write!(out, "{}", report.render()).map_err(io)?;
            if report.to_checks().iter().all(|c| c.passed()) {
                Ok(())
            } else {
                Err(Failure::Mismatch("fiber audit check failed".into()))
            }
        }
    }
}

fn cmd_enumerate(
    what: EnumerateWhat,
    spec: &GraphSpec,
    separate: Option<Pair>,
    cap: EnumCap,
    out: &mut dyn Write,
) -> CmdResult {
    let g = spec.load().map_err(usage)?;
    let v = g.vertex_count();
    let text = match (what, separate) {
        (EnumerateWhat::Trees, None) => {
            format_forest_list(v, &enum_spanning_trees(&g, cap).map_err(usage)?)
        }
        (EnumerateWhat::Forests, Some(p)) => {
            check_pair(&g, p)?;
            let recs = enum_two_forests(&g, p.0, p.1, cap).map_err(usage)?;
            format_forest_list(v, recs.iter().map(|r| &r.edges))
        }
        (EnumerateWhat::Tau, None) => {
            let n = wheel_rim(spec).ok_or_else(|| usage("the tau family needs --graph wheel:N"))?;
            let recs = enum_tau(n, cap).map_err(usage)?;
            format_forest_list(v, recs.iter().map(|r| &r.forest.edges))
        }
        (EnumerateWhat::Forests, None) => {
            return Err(usage("`enumerate forests` needs --separate A,B"))
        }
        (_, Some(_)) => return Err(usage("--separate applies to `enumerate forests`")),
    };
    write!(out, "{text}").map_err(io)
}

fn cmd_verify(
    suite: &str,
    max_n: usize,
    cap: EnumCap,
    src: &dyn FormulaSource,
    out: &mut dyn Write,
) -> CmdResult {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(usage)?]
    };
    let report = verify::run(&suites, VerifyOptions { max_n, cap }, src);
    write!(out, "{}", report.render()).map_err(io)?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "{} checks failed",
            report.summary().failed
        )))
    }
}

fn cmd_oeis(
    sequence: &str,
    max_n: usize,
    bfile: bool,
    src: &dyn FormulaSource,
    out: &mut dyn Write,
) -> CmdResult {
    let seq: Sequence = sequence.parse().map_err(usage)?;
    let file = BFile::generate(seq, max_n, src).map_err(usage)?;
    let file = if bfile { file } else { file.without_comments() };
    write!(out, "{file}").map_err(io)
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, src: &dyn FormulaSource, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match &cli.command {
        Command::Count {
            what,
            graph,
            separate,
            method,
            enum_cap,
        } => cmd_count(
            *what,
            graph,
            *separate,
            *method,
            EnumCap(*enum_cap),
            src,
            out,
        ),
        Command::Resist {
            graph,
            pair,
            method,
            enum_cap,
        } => cmd_resist(graph, *pair, *method, EnumCap(*enum_cap), src, out),
        Command::Bijection { action } => cmd_bijection(action, out),
        Command::Enumerate {
            what,
            graph,
            separate,
            enum_cap,
        } => cmd_enumerate(*what, graph, *separate, EnumCap(*enum_cap), out),
        Command::Verify {
            suite,
            max_n,
            enum_cap,
        } => cmd_verify(suite, *max_n, EnumCap(*enum_cap), src, out),
        Command::Oeis {
            sequence,
            max_n,
            bfile,
        } => cmd_oeis(sequence, *max_n, *bfile, src, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "mismatch: {msg}");
            EXIT_MISMATCH
        }
    }
}
