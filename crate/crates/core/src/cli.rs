//! Command-line front end. Every subcommand prints one JSON certificate
//! envelope (or raw generator output) and maps outcomes to exit codes:
//! 0 success, 1 property violation or negative answer, 2 input error,
//! 3 resource limit or undecided.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::canonical_graph6;
use crate::colorings::{chi_cc_with, is_centered, is_cycle_centered_with, is_td2_coloring, td2_with, treedepth, Budgets, Coloring};
use crate::error::{Error, Result};
use crate::experiments::{bump_campaign, bump_campaign_over, run_suite, CampaignConfig, Suite, Verdict};
use crate::extraction::{ladder_or_td2_certificate_with, lk_or_rooted_lt_with, ExtractionOutcome};
use crate::generators::{kelly_cover_graph, path_of_k4s, random_3_connected, subdivide, SubdivisionPlan};
use crate::graph::{Graph, Vertex};
use crate::io::{read_graph, to_dot, to_graph6, to_json};
use crate::minors::{
    find_ladder_model_with_budget, ladder, max_ladder_order_with_budget, verify_subdivision_model, Decision, MinorModel,
    DEFAULT_NODE_BUDGET,
};
use crate::posets::{dimension_exact, is_realizer, kelly_poset, realizer_via_td2, Poset};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ladderkit", version, about = "Certificates for ladder minors, centered colorings and poset dimension")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GlobalOpts {
    /// Add wall-clock timing to the envelope (output is then not reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Also write the input graph as DOT, labelled by the certificate.
    #[arg(long, global = true, value_name = "PATH")]
    pub emit_dot: Option<PathBuf>,
    /// Search nodes for the coloring solver and the ladder search.
    #[arg(long, global = true)]
    pub node_budget: Option<u64>,
    /// Largest vertex count for which induced subsets are enumerated.
    #[arg(long, global = true)]
    pub subset_budget: Option<usize>,
    /// Largest number of cycles enumerated.
    #[arg(long, global = true)]
    pub cycle_budget: Option<usize>,
    /// Worker threads for campaigns.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Indent JSON output.
    #[arg(long, global = true)]
    pub pretty: bool,
}

/// `INPUT` is a file path, `-` for stdin, or a literal graph6 / JSON string.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Optimal 2-connected centered coloring.
    Td2 { input: String },
    /// Optimal cycle centered coloring.
    Chicc { input: String },
    /// Treedepth with an elimination forest.
    Treedepth { input: String },
    /// Find an L_k subdivision (`--find k`) or the largest ladder minor.
    Ladder {
        input: String,
        #[arg(long, value_name = "K")]
        find: Option<usize>,
    },
    /// Ladder-or-coloring certificate, or ladder-or-rooted-ladder extraction.
    Extract {
        input: String,
        #[arg(long, value_enum, default_value_t = ExtractMode::LadderOrTd2)]
        mode: ExtractMode,
        #[arg(long)]
        k: usize,
        /// Columns of the rooted ladder (rooted mode).
        #[arg(long)]
        t: Option<usize>,
        /// First root (rooted mode).
        #[arg(long)]
        x1: Option<Vertex>,
        /// Second root (rooted mode).
        #[arg(long)]
        x2: Option<Vertex>,
    },
    /// Exact dimension of a poset given as JSON.
    Dim { input: String },
    /// Realizer built from a 2-connected centered coloring of the cover graph.
    Realizer { input: String },
    /// Generate a graph or poset.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6, global = true)]
        format: GraphFormat,
    },
    /// Check 3-connected graphs for L_{k+1} given many disjoint L_k.
    Bump {
        /// A single graph; without it a campaign over generated graphs runs.
        input: Option<String>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        threshold: usize,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        seed_start: u64,
    },
    /// Run seeded property suites.
    VerifySuite {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest instance size.
        #[arg(long, default_value_t = 7)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        seed_start: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExtractMode {
    LadderOrTd2,
    Rooted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum GenFamily {
    /// The ladder L_k.
    Ladder { k: usize },
    /// Subdivide each edge of a graph up to `--max` times.
    Subdivide {
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        max: usize,
    },
    /// `k` copies of K4 in a row, consecutive copies sharing an edge, with top and bottom edges subdivided.
    PathOfK4s { k: usize },
    /// The poset as JSON; with `--format graph6` its cover graph.
    Kelly { k: usize },
    /// A random 3-connected graph on `n` vertices.
    Random3c {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// What every certificate-producing subcommand prints.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateEnvelope {
    pub schema_version: u32,
    /// Canonical graph6 of the input graph (of the cover graph for posets).
    pub fingerprint: Option<String>,
    pub operation: String,
    pub params: Value,
    pub payload: Value,
    /// Set by re-running the matching verifier on the payload.
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

struct Emitted {
    envelope: CertificateEnvelope,
    code: i32,
    dot_labels: Option<(Graph, BTreeMap<Vertex, String>)>,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource(_) => EXIT_UNDECIDED,
        Error::Internal(_) => EXIT_VIOLATION,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (program name first) and runs the command against the
/// process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn load(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    let path = std::path::Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| Error::input(format!("{arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn load_graph(arg: &str) -> Result<Graph> {
    read_graph(&load(arg)?)
}

fn load_poset(arg: &str) -> Result<Poset> {
    Poset::from_json(&load(arg)?)
}

fn fingerprint(g: &Graph) -> Option<String> {
    canonical_graph6(g).ok()
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("certificates serialize")
}

fn color_labels(col: &Coloring) -> BTreeMap<Vertex, String> {
    col.assignment.iter().map(|(&v, c)| (v, c.to_string())).collect()
}

fn model_labels(m: &MinorModel) -> BTreeMap<Vertex, String> {
    m.branch_sets.iter().flat_map(|(&x, s)| s.iter().map(move |&v| (v, format!("b{x}")))).collect()
}

impl GlobalOpts {
    fn budgets(&self) -> Budgets {
        let d = Budgets::default();
        Budgets {
            subset_vertices: self.subset_budget.unwrap_or(d.subset_vertices),
            cycles: self.cycle_budget.unwrap_or(d.cycles),
            solver_nodes: self.node_budget.unwrap_or(d.solver_nodes),
        }
    }

    fn search_budget(&self) -> u64 {
        self.node_budget.unwrap_or(DEFAULT_NODE_BUDGET)
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, x: &T, pretty: bool) -> Result<()> {
    let s = if pretty { serde_json::to_string_pretty(x) } else { serde_json::to_string(x) }.expect("serializable");
    writeln!(out, "{s}").map_err(|e| Error::input(format!("writing output: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    let start = Instant::now();
    let emitted = match &cli.command {
        Command::Gen { family, format } => return generate(family, *format, out),
        Command::VerifySuite { suite, n, seeds, seed_start } => return verify_suite(suite, *n, *seeds, *seed_start, g, out, err),
        Command::Bump { input, k, threshold, n_min, n_max, seeds, seed_start } => {
            return bump(input.as_deref(), *k, *threshold, (*n_min, *n_max), (*seed_start, *seeds), g, out)
        }
        Command::Td2 { input } => {
            let graph = load_graph(input)?;
            let (value, col) = td2_with(&graph, &g.budgets())?;
            let verified = is_td2_coloring(&graph, &col)?.is_valid() && col.color_count == value;
            emit("td2", &graph, json!({}), json!({ "value": value, "coloring": col }), verified, Some(color_labels(&col)))
        }
        Command::Chicc { input } => {
            let graph = load_graph(input)?;
            let b = g.budgets();
            let (value, col) = chi_cc_with(&graph, &b)?;
            let verified = is_cycle_centered_with(&graph, &col, b.cycles)?.is_valid() && col.color_count == value;
            emit("chicc", &graph, json!({}), json!({ "value": value, "coloring": col }), verified, Some(color_labels(&col)))
        }
        Command::Treedepth { input } => {
            let graph = load_graph(input)?;
            let (value, col, forest) = treedepth(&graph)?;
            let verified = is_centered(&graph, &col)?.is_valid() && forest.verify(&graph) && col.color_count == value;
            let payload = json!({ "value": value, "coloring": col, "forest": forest });
            emit("treedepth", &graph, json!({}), payload, verified, Some(color_labels(&col)))
        }
        Command::Ladder { input, find } => ladder_command(&load_graph(input)?, *find, g)?,
        Command::Extract { input, mode, k, t, x1, x2 } => {
            let graph = load_graph(input)?;
            let b = g.budgets();
            let (outcome, params) = match mode {
                ExtractMode::LadderOrTd2 => (ladder_or_td2_certificate_with(&graph, *k, &b)?, json!({ "mode": "ladder-or-td2", "k": k })),
                ExtractMode::Rooted => {
                    let (Some(t), Some(x1), Some(x2)) = (t, x1, x2) else {
                        return Err(Error::input("rooted mode needs --t, --x1 and --x2"));
                    };
                    let o = lk_or_rooted_lt_with(&graph, *x1, *x2, *k, *t, &b)?;
                    (o, json!({ "mode": "rooted", "k": k, "t": t, "x1": x1, "x2": x2 }))
                }
            };
            let verified = outcome.verify(&graph)?;
            let labels = match &outcome {
                ExtractionOutcome::LadderMinor { model, .. } => Some(model_labels(model)),
                ExtractionOutcome::RootedModel(m) => Some(model_labels(&m.model)),
                ExtractionOutcome::BoundCertificate(c) => Some(color_labels(c)),
                ExtractionOutcome::Undecided(_) => None,
            };
            let mut e = emit("extract", &graph, params, to_value(&outcome), verified, labels);
            if outcome.is_undecided() {
                e.code = EXIT_UNDECIDED;
            }
            e
        }
        Command::Dim { input } => {
            let p = load_poset(input)?;
            let (d, r) = dimension_exact(&p)?;
            let verified = is_realizer(&p, &r)?.is_valid() && r.len() == d;
            emit("dim", &crate::posets::cover_graph(&p), json!({}), json!({ "dimension": d, "realizer": r }), verified, None)
        }
        Command::Realizer { input } => {
            let p = load_poset(input)?;
            let rep = realizer_via_td2(&p)?;
            let verified = is_realizer(&p, &rep.realizer)?.is_valid() && rep.realizer.len() <= rep.bound.max(1);
            emit("realizer", &crate::posets::cover_graph(&p), json!({}), to_value(&rep), verified, None)
        }
    };
    let Emitted { mut envelope, mut code, dot_labels } = emitted;
    if g.timing {
        envelope.timing = Some(Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1e3 });
    }
    if !envelope.verified {
        code = EXIT_VIOLATION;
    }
    if let (Some(path), Some((graph, labels))) = (&g.emit_dot, dot_labels) {
        std::fs::write(path, to_dot(&graph, Some(&labels))).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
    }
    print_json(out, &envelope, g.pretty)?;
    Ok(code)
}

fn emit(op: &str, graph: &Graph, params: Value, payload: Value, verified: bool, labels: Option<BTreeMap<Vertex, String>>) -> Emitted {
    Emitted {
        envelope: CertificateEnvelope {
            schema_version: SCHEMA_VERSION,
            fingerprint: fingerprint(graph),
            operation: op.to_string(),
            params,
            payload,
            verified,
            timing: None,
        },
        code: EXIT_OK,
        dot_labels: Some((graph.clone(), labels.unwrap_or_default())),
    }
}

fn ladder_command(graph: &Graph, find: Option<usize>, g: &GlobalOpts) -> Result<Emitted> {
    let budget = g.search_budget();
    Ok(match find {
        Some(k) => match find_ladder_model_with_budget(graph, k, budget)? {
            Decision::Found(sm) => {
                let model = sm.to_minor_model(graph)?;
                let verified = verify_subdivision_model(graph, &sm) && model.pattern == ladder(k);
                let labels = model_labels(&model);
                let payload = json!({ "found": true, "subdivision": sm, "model": model });
                emit("ladder", graph, json!({ "find": k }), payload, verified, Some(labels))
            }
            Decision::Absent => {
                let mut e = emit("ladder", graph, json!({ "find": k }), json!({ "found": false }), true, None);
                e.code = EXIT_VIOLATION;
                e
            }
            Decision::Undecided(why) => {
                let mut e = emit("ladder", graph, json!({ "find": k }), json!({ "found": null, "undecided": why }), true, None);
                e.code = EXIT_UNDECIDED;
                e
            }
        },
        None => {
            let (k, sm) = max_ladder_order_with_budget(graph, budget)?;
            let verified = sm.as_ref().is_none_or(|sm| verify_subdivision_model(graph, sm) && sm.k() == k);
            let labels = sm.as_ref().map(|sm| sm.to_minor_model(graph)).transpose()?.map(|m| model_labels(&m));
            emit("ladder", graph, json!({ "max_order": true }), json!({ "max_order": k, "subdivision": sm }), verified, labels)
        }
    })
}

fn generate(family: &GenFamily, format: GraphFormat, out: &mut dyn Write) -> Result<i32> {
    let graph = match family {
        GenFamily::Ladder { k } => ladder(*k),
        GenFamily::Subdivide { input, seed, max } => subdivide(&load_graph(input)?, &SubdivisionPlan::Random { seed: *seed, max: *max })?,
        GenFamily::PathOfK4s { k } => {
            if *k == 0 {
                return Err(Error::input("k must be positive"));
            }
            path_of_k4s(*k)
        }
        GenFamily::Kelly { k } => {
            if *k < 2 {
                return Err(Error::input("Kelly posets need k >= 2"));
            }
            if format == GraphFormat::Json {
                writeln!(out, "{}", kelly_poset(*k).to_json()).map_err(|e| Error::input(e.to_string()))?;
                return Ok(EXIT_OK);
            }
            kelly_cover_graph(*k)
        }
        GenFamily::Random3c { n, seed } => {
            if *n < 4 {
                return Err(Error::input("3-connected graphs need at least 4 vertices"));
            }
            random_3_connected(*n, *seed)
        }
    };
    let text = match format {
        GraphFormat::Graph6 => to_graph6(&graph),
        GraphFormat::Json => to_json(&graph),
    };
    writeln!(out, "{text}").map_err(|e| Error::input(e.to_string()))?;
    Ok(EXIT_OK)
}

fn bump(input: Option<&str>, k: usize, threshold: usize, (n_min, n_max): (usize, usize), (first, seeds): (u64, u64), g: &GlobalOpts, out: &mut dyn Write) -> Result<i32> {
    if k == 0 || threshold == 0 {
        return Err(Error::input("k and threshold must be positive"));
    }
    let budget = g.search_budget();
    let campaign = match input {
        Some(arg) => bump_campaign_over([load_graph(arg)?], k, threshold, budget, 1)?,
        None => bump_campaign(&CampaignConfig { n_range: n_min.max(4)..=n_max, k, threshold, seeds: first..first + seeds, budget, jobs: g.jobs })?,
    };
    write!(out, "{}", campaign.to_json_lines()).map_err(|e| Error::input(e.to_string()))?;
    print_json(out, &json!({ "summary": campaign.summary }), false)?;
    Ok(if campaign.reports.iter().any(|r| r.verdict == Verdict::Counterexample) {
        EXIT_VIOLATION
    } else if campaign.summary.undecided > 0 {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    })
}

fn verify_suite(name: &str, n: usize, seeds: u64, first: u64, g: &GlobalOpts, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let suites: Vec<Suite> = if name == "all" { Suite::ALL.to_vec() } else { vec![name.parse()?] };
    let mut failed = false;
    let mut summary = Vec::new();
    for s in suites {
        let report = run_suite(s, n, first, seeds)?;
        for line in &report.log {
            let _ = writeln!(err, "[{s}] {line}");
        }
        failed |= !report.passed();
        summary.push(json!({
            "suite": s,
            "cases": report.cases,
            "skipped": report.skipped,
            "violations": report.violations,
            "passed": report.passed(),
        }));
    }
    print_json(out, &json!({ "schema_version": SCHEMA_VERSION, "operation": "verify-suite", "suites": summary }), g.pretty)?;
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}
