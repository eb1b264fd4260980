//! The `bhx` command line.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage error, 3 refusal (size
//! or budget limit).

pub mod config;
pub mod verify;
pub mod views;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
struct CliChapter;

use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bh_extra::connectivity::{beta_g, gamma_g_bruteforce, lambda_g_bruteforce, CutWitness};
use bh_extra::extremal::{
    construct_dense_witness, construct_k2_star, eg_bounds, eg_exact, eg_exhaustive, Certification, Construction,
};
use bh_extra::graph::{girth, is_complete_bipartite, shortest_cycle_through};
use bh_extra::hypercube::{
    bh_neighbors, build_bh, build_xn, equivalent_vertex, fiber_of, BhImplicit, BhVertex,
    DEFAULT_MATERIALIZE_LIMIT, MAX_DIMENSION,
};
use bh_extra::pipeline::{theorem_pipeline, LambdaValue};
use bh_extra::{Budget, Error, Graph, Result};

use verify::{verify_suite, Status, GROUPS};
use views::{digits, key_values, table, vertex_list, CutFile, LambdaDoc, PipelineDoc, WitnessFile};

#[derive(Debug, Parser)]
#[command(name = "bhx", version, about = "Balanced hypercubes, extremal subgraphs and g-extra edge-connectivity")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Emit one JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the document to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Wall-clock budget per computation, in seconds
    #[arg(long, global = true, value_name = "SECONDS")]
    pub budget: Option<u64>,
    /// Budget file with key = value lines
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Pipeline,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    K2Star,
    Dense,
}

#[derive(Debug, Args)]
pub struct Dim {
    /// Dimension of the balanced hypercube
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct DimG {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub g: usize,
    #[arg(long, value_enum, default_value = "auto")]
    pub method: Method,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Edge list of BH_n
    Gen(Dim),
    /// Edge list of the quotient X_n
    Quotient(Dim),
    /// Neighbors and equivalent vertex of one vertex
    Neighbors {
        #[arg(long)]
        n: usize,
        /// Digits a_0,...,a_{n-1}, e.g. 2,0,1
        #[arg(long)]
        vertex: String,
    },
    /// Girth of X_n with a shortest cycle
    Girth(Dim),
    /// e_g(BH_n): brute = every subset, pipeline = bounds, auto = exact when small
    Eg(DimG),
    /// beta_g(BH_n): brute = every subset, pipeline = regular shortcut
    Beta(DimG),
    /// gamma_g(BH_n) by sweeping all cuts
    Gamma(DimG),
    /// lambda_g(BH_n): brute = sweep, pipeline = e_g formula
    Lambda(DimG),
    /// Full pipeline report for lambda_g(BH_n)
    Pipeline(DimG),
    /// Explicit dense witnesses
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Run the verification suite
    Verify {
        /// `all` or one group name
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Leave elapsed times out, for byte-identical reruns
        #[arg(long)]
        no_timings: bool,
    },
    /// Recheck a witness or cut file written by this tool
    CheckWitness {
        file: PathBuf,
    },
}

/// What a command produced: the document and the exit code.
struct Outcome {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Outcome {
        Outcome { text, json, code: 0 }
    }
}

fn budget_from(global: &GlobalArgs) -> Result<Budget> {
    let mut budget = match &global.config {
        Some(path) => config::load(path)?,
        None => Budget::default(),
    };
    if let Some(secs) = global.budget {
        budget.wall = Duration::from_secs(secs);
    }
    Ok(budget)
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_DIMENSION {
        return Err(Error::OutOfRange(format!("--n must be in {min}..={MAX_DIMENSION}, got {n}")));
    }
    Ok(())
}

fn check_g(n: usize, g: usize, min: usize) -> Result<()> {
    let order = BhImplicit::new(n)?.order();
    if g < min || g + 1 > order {
        return Err(Error::OutOfRange(format!(
            "--g must satisfy {min} <= g and g + 1 <= 4^n = {order}, got {g}"
        )));
    }
    Ok(())
}

fn materialize(n: usize) -> Result<Graph> {
    build_bh(n, DEFAULT_MATERIALIZE_LIMIT)
}

fn to_json<T: serde::Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("documents serialize")
}

fn edge_list(n: usize, quotient: bool) -> Result<Outcome> {
    check_n(n, 1)?;
    let bh = materialize(n)?;
    let (graph, label, name) = if quotient {
        (build_xn(&bh, n)?.0, format!("X n={n}"), "X")
    } else {
        (bh, format!("BH n={n}"), "BH")
    };
    let text = graph.to_edge_list(Some(&label));
    let rep = |v: usize| if quotient { digits(fiber_of(v).0, n) } else { digits(v, n) };
    let json = serde_json::json!({
        "graph": name,
        "n": n,
        "order": graph.order(),
        "edge_count": graph.edge_count(),
        "edges": graph.edges().iter().map(|&(u, v)| (rep(u), rep(v))).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(text, json))
}

fn neighbors(n: usize, vertex: &str) -> Result<Outcome> {
    check_n(n, 1)?;
    let v: BhVertex = vertex.parse()?;
    if v.dimension() != n {
        return Err(Error::InvalidVertex(format!("{v} has {} digits, expected {n}", v.dimension())));
    }
    let nbrs = bh_neighbors(n, &v)?;
    let twin = equivalent_vertex(&v);
    let text = key_values(&[
        ("vertex", format!("({v})")),
        ("equivalent", format!("({twin})")),
        ("degree", nbrs.len().to_string()),
        ("neighbors", vertex_list(&nbrs)),
    ]);
    let json = serde_json::json!({ "n": n, "vertex": v, "equivalent": twin, "neighbors": nbrs });
    Ok(Outcome::ok(text, json))
}

fn quotient_girth(n: usize) -> Result<Outcome> {
    check_n(n, 1)?;
    let bh = BhImplicit::new(n)?;
    let cycle = if bh.order() <= DEFAULT_MATERIALIZE_LIMIT {
        let (xn, _) = build_xn(&materialize(n)?, n)?;
        girth(&xn)
    } else {
        // X_n is vertex-transitive, so a shortest cycle through class 0 is
        // a shortest cycle overall; its length is at most 8.
        shortest_cycle_through(&bh.quotient(), 0, 8)
    };
    let cycle: Vec<BhVertex> = cycle
        .unwrap_or_default()
        .iter()
        .map(|&c| digits(fiber_of(c).0, n))
        .collect();
    let length = (!cycle.is_empty()).then_some(cycle.len());
    let text = key_values(&[
        ("graph", format!("X_{n}")),
        ("girth", length.map_or("infinite".into(), |l| l.to_string())),
        ("cycle", vertex_list(&cycle)),
    ]);
    let json = serde_json::json!({ "n": n, "girth": length, "cycle": cycle });
    Ok(Outcome::ok(text, json))
}

fn witness_text(w: &WitnessFile) -> String {
    let mut rows = vec![
        ("n", w.n.to_string()),
        ("g", w.g.to_string()),
        ("edges", w.edges.to_string()),
        ("certification", format!("{:?}", w.certification).to_lowercase()),
        ("construction", w.construction.to_string()),
    ];
    if let Some(u) = w.upper_bound {
        rows.push(("upper bound", u.to_string()));
    }
    rows.push(("vertices", vertex_list(&w.vertices)));
    key_values(&rows)
}

fn eg(a: &DimG, budget: &Budget) -> Result<Outcome> {
    check_n(a.n, 1)?;
    check_g(a.n, a.g, 0)?;
    let order = BhImplicit::new(a.n)?.order();
    let file = match a.method {
        Method::Brute => {
            let w = eg_exhaustive(&materialize(a.n)?, a.g, budget)?;
            WitnessFile::new(a.n, &w, Construction::Exhaustive, Some(w.induced_edge_count))
        }
        Method::Auto if order <= budget.exact_order_limit => {
            let r = eg_exact(&materialize(a.n)?, a.g, budget)?;
            WitnessFile::new(a.n, &r.witness, Construction::ExactSearch, r.upper_bound)
        }
        _ => {
            let b = eg_bounds(a.n, a.g, budget)?;
            let best = b.best();
            WitnessFile::new(a.n, &best.witness, best.construction, b.upper)
        }
    };
    Ok(Outcome::ok(witness_text(&file), to_json(&file)))
}

fn cut_text(label: &str, method: &str, c: &CutFile) -> String {
    key_values(&[
        ("n", c.n.to_string()),
        ("g", c.g.to_string()),
        (label, c.cut_size.to_string()),
        ("method", method.into()),
        ("smallest parts", format!("{} / {}", c.min_component_u, c.min_component_ubar)),
        ("side U", vertex_list(&c.side_u)),
    ])
}

fn beta(a: &DimG, budget: &Budget) -> Result<Outcome> {
    check_n(a.n, 1)?;
    check_g(a.n, a.g, 0)?;
    let shortcut = a.method != Method::Brute;
    let w = beta_g(&materialize(a.n)?, a.g, shortcut, budget)?;
    let file = CutFile::new(a.n, &w);
    let method = if shortcut { "regular-shortcut" } else { "brute" };
    let mut json = to_json(&file);
    json["method"] = method.into();
    Ok(Outcome::ok(cut_text("beta_g", method, &file), json))
}

fn sweep_result(n: usize, cut: Option<CutWitness>, label: &str) -> Result<Outcome> {
    match cut {
        Some(c) => {
            let file = CutFile::new(n, &c);
            let doc = LambdaDoc {
                n,
                g: c.g,
                method: "brute".into(),
                value: Some(c.cut_size as i64),
                lower: Some(c.cut_size as i64),
                upper: Some(c.cut_size as i64),
                contingent: false,
                witness: Some(file.clone()),
            };
            Ok(Outcome::ok(cut_text(label, "brute", &file), to_json(&doc)))
        }
        None => Ok(Outcome {
            text: format!("no cut of BH_{n} meets the {label} constraint\n"),
            json: serde_json::json!({ "n": n, "method": "brute", "value": null, "witness": null }),
            code: 1,
        }),
    }
}

fn gamma(a: &DimG, budget: &Budget) -> Result<Outcome> {
    check_n(a.n, 1)?;
    check_g(a.n, a.g, 0)?;
    let graph = materialize(a.n)?;
    sweep_result(a.n, gamma_g_bruteforce(&graph, a.g, budget)?, "gamma_g")
}

fn lambda(a: &DimG, budget: &Budget) -> Result<Outcome> {
    check_n(a.n, 1)?;
    check_g(a.n, a.g, 0)?;
    let order = BhImplicit::new(a.n)?.order();
    let brute = match a.method {
        Method::Brute => true,
        Method::Pipeline => false,
        Method::Auto => order <= budget.sweep_order_limit,
    };
    if brute {
        let graph = materialize(a.n)?;
        return sweep_result(a.n, lambda_g_bruteforce(&graph, a.g, budget)?, "lambda_g");
    }
    let r = theorem_pipeline(a.n, a.g, budget)?;
    let (value, lower, upper) = match r.lambda_value {
        Some(LambdaValue::Exact { value }) if !r.contingent_on_cond_degree => (Some(value), Some(value), Some(value)),
        Some(LambdaValue::Exact { value }) => (None, None, Some(value)),
        Some(LambdaValue::Interval { lower, upper }) => (None, lower.filter(|_| !r.contingent_on_cond_degree), Some(upper)),
        None => (None, None, None),
    };
    // The cut certificate bounds lambda from above on its own.
    let upper = match (upper, &r.cut_certificate) {
        (Some(u), Some(c)) => Some(u.min(c.cut_size as i64)),
        (u, c) => u.or(c.as_ref().map(|c| c.cut_size as i64)),
    };
    let doc = LambdaDoc {
        n: a.n,
        g: a.g,
        method: "pipeline".into(),
        value,
        lower,
        upper,
        contingent: r.contingent_on_cond_degree,
        witness: r.cut_certificate.as_ref().map(|c| CutFile::new(a.n, c)),
    };
    let show = |v: Option<i64>| v.map_or("?".into(), |v| v.to_string());
    let text = key_values(&[
        ("n", a.n.to_string()),
        ("g", a.g.to_string()),
        ("lambda_g", value.map_or(format!("[{}, {}]", show(lower), show(upper)), |v| v.to_string())),
        ("method", "pipeline".into()),
        ("contingent", doc.contingent.to_string()),
    ]);
    Ok(Outcome::ok(text, to_json(&doc)))
}

fn pipeline(a: &DimG, budget: &Budget) -> Result<Outcome> {
    check_n(a.n, 1)?;
    check_g(a.n, a.g, 0)?;
    let r = theorem_pipeline(a.n, a.g, budget)?;
    let doc = PipelineDoc::new(&r);
    let mut rows = vec![
        ("n", r.n.to_string()),
        ("g", r.g.to_string()),
        ("order condition", r.cond_order.to_string()),
        ("degree condition", format!("{:?}", r.cond_degree).to_lowercase()),
        (
            "e_g",
            format!("[{}, {}]", r.eg_lower, r.eg_upper.map_or("?".into(), |u| u.to_string())),
        ),
        ("lambda_g", r.lambda_value.map_or("-".into(), |v| v.to_string())),
        ("contingent", r.contingent_on_cond_degree.to_string()),
        (
            "cut certificate",
            r.cut_certificate.as_ref().map_or("-".into(), |c| c.cut_size.to_string()),
        ),
        ("conjecture", r.conjecture_value.to_string()),
        ("verdict", to_json(&r.verdict).as_str().unwrap_or_default().to_string()),
    ];
    for reason in &r.reasons {
        rows.push(("reason", reason.clone()));
    }
    Ok(Outcome::ok(key_values(&rows), to_json(&doc)))
}

fn construct(n: usize, g: usize, kind: Kind) -> Result<Outcome> {
    check_n(n, 1)?;
    let file = match kind {
        Kind::K2Star => WitnessFile::new(n, &construct_k2_star(n, g)?, Construction::K2Star, None),
        Kind::Dense => {
            let d = construct_dense_witness(n, g)?;
            WitnessFile::new(n, &d.witness, d.construction, None)
        }
    };
    Ok(Outcome::ok(witness_text(&file), to_json(&file)))
}

fn run_verify(suite: &str, max_n: usize, no_timings: bool, budget: &Budget) -> Result<Outcome> {
    if max_n < 2 {
        return Err(Error::OutOfRange(format!("--max-n must be at least 2, got {max_n}")));
    }
    check_n(max_n, 2)?;
    let selected: Option<Vec<&str>> = match suite {
        "all" => None,
        name if GROUPS.contains(&name) => Some(vec![name]),
        other => {
            return Err(Error::OutOfRange(format!(
                "unknown suite {other:?}; expected all or one of {}",
                GROUPS.join(", ")
            )))
        }
    };
    let report = verify_suite(max_n, selected.as_deref(), budget, !no_timings);
    let mut header = vec!["group", "check", "status"];
    if !no_timings {
        header.push("ms");
    }
    header.push("detail");
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            let mut row = vec![r.group.clone(), r.check.clone(), to_json(&r.status).as_str().unwrap_or_default().into()];
            if let Some(ms) = r.elapsed_ms {
                row.push(ms.to_string());
            }
            row.push(r.detail.clone());
            row
        })
        .collect();
    let passed = report.rows.iter().filter(|r| r.status == Status::Pass).count();
    let mut text = table(&header, &rows);
    text.push_str(&format!("{passed}/{} checks passed\n", report.rows.len()));
    let code = if report.failed() {
        1
    } else if report.skipped() {
        3
    } else {
        0
    };
    Ok(Outcome {
        text,
        json: to_json(&report),
        code,
    })
}

fn check_witness(path: &PathBuf, budget: &Budget) -> Result<Outcome> {
    let text = std::fs::read_to_string(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.get("side_u").is_some() {
        let file: CutFile = serde_json::from_value(value)?;
        check_n(file.n, 1)?;
        let graph = materialize(file.n)?;
        let cut = file.to_witness()?;
        cut.revalidate(&graph)?;
        let msg = format!("cut of size {} for g = {} rechecked\n", cut.cut_size, cut.g);
        return Ok(Outcome::ok(msg, serde_json::json!({ "valid": true, "kind": "cut", "cut_size": cut.cut_size })));
    }
    let file: WitnessFile = serde_json::from_value(value)?;
    check_n(file.n, 1)?;
    let bh = BhImplicit::new(file.n)?;
    let w = file.to_witness()?;
    w.revalidate(&bh, file.g)?;
    let mut notes = vec![format!("{} vertices, {} induced edges", w.vertices.len(), w.induced_edge_count)];
    if file.construction == Construction::K2Star {
        let set = w.vertices.clone();
        let graph = materialize_subgraph(&bh, &set)?;
        if is_complete_bipartite(&graph) != Some((2.min(file.g - 1), 2.max(file.g - 1))) {
            return Err(Error::InvalidSubset("witness does not induce K_{2,g-1}".into()));
        }
        notes.push("induces K_{2,g-1}".into());
    }
    if file.certification == Certification::Exact && bh.order() <= budget.exact_order_limit {
        let exact = eg_exact(&materialize(file.n)?, file.g, budget)?;
        if exact.upper_bound != Some(w.induced_edge_count) {
            return Err(Error::InvalidSubset(format!(
                "claimed exact {} but e_g is {:?}",
                w.induced_edge_count, exact.upper_bound
            )));
        }
        notes.push("maximality rechecked".into());
    }
    let msg = format!("witness rechecked: {}\n", notes.join(", "));
    Ok(Outcome::ok(msg, serde_json::json!({ "valid": true, "kind": "subgraph", "edges": w.induced_edge_count })))
}

fn materialize_subgraph(bh: &BhImplicit, set: &[usize]) -> Result<Graph> {
    use bh_extra::graph::NeighborOracle;
    let mut edges = Vec::new();
    for (i, &v) in set.iter().enumerate() {
        for (j, &w) in set.iter().enumerate().skip(i + 1) {
            if bh.adjacent(v, w) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(set.len(), edges)
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let budget = budget_from(&cli.global)?;
    match &cli.command {
        Command::Gen(d) => edge_list(d.n, false),
        Command::Quotient(d) => edge_list(d.n, true),
        Command::Neighbors { n, vertex } => neighbors(*n, vertex),
        Command::Girth(d) => quotient_girth(d.n),
        Command::Eg(a) => eg(a, &budget),
        Command::Beta(a) => beta(a, &budget),
        Command::Gamma(a) => gamma(a, &budget),
        Command::Lambda(a) => lambda(a, &budget),
        Command::Pipeline(a) => pipeline(a, &budget),
        Command::Construct { n, g, kind } => construct(*n, *g, *kind),
        Command::Verify { suite, max_n, no_timings } => run_verify(suite, *max_n, *no_timings, &budget),
        Command::CheckWitness { file } => check_witness(file, &budget),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        e if e.is_refusal() => 3,
        Error::InvalidVertex(_) | Error::Parse { .. } => 2,
        _ => 1,
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            let code = exit_code(&e);
            if cli.global.json {
                let doc = serde_json::json!({ "error": e.to_string(), "exit_code": code });
                let _ = writeln!(stdout, "{doc}");
            }
            let _ = writeln!(stderr, "bhx: {e}");
            return code;
        }
    };
    let body = if cli.global.json {
        let mut s = serde_json::to_string_pretty(&outcome.json).expect("documents serialize");
        s.push('\n');
        s
    } else {
        outcome.text
    };
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                let _ = writeln!(stderr, "bhx: cannot write {}: {e}", path.display());
                return 1;
            }
            if cli.global.json {
                let _ = writeln!(stdout, "{}", serde_json::json!({ "written": path }));
            } else {
                let _ = writeln!(stdout, "wrote {}", path.display());
            }
        }
        None => {
            let _ = stdout.write_all(body.as_bytes());
        }
    }
    outcome.code
}
