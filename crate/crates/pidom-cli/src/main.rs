//! Command-line surface for the perfect Italian domination toolkit.
//!
//! Subcommands: `solve` (exact parameters), `verify` (labeling checks),
//! `generate` (family generators), `characterize` (polynomial tests and
//! bounds), `reduce` (exact-cover reductions) and `corpus` (batch
//! verification over graph6 files). Reports are JSON on standard output;
//! graphs are emitted as graph6 or edge-list text.
//!
//! Exit codes: 0 success, 1 assertion or verification failure, 2 usage
//! error, 3 budget exhausted.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pidom::characterize::{bounds, closed_form, test_pid2, test_pid3, Conclusion};
use pidom::families::FamilySpec;
use pidom::graph::Graph;
use pidom::graph6::{decode_graph6, encode_graph6};
use pidom::labeling::{check_pid, check_roman, check_roman2, Labeling, Verdict};
use pidom::reduction::{reduce_x3c, reduce_x3c_roman2, X3CInstance};
use pidom::solver::{
    cubic_upper_labeling, fd2_exact, gamma_exact, max_induced_matching, pid_branch_bound,
    pid_bruteforce, roman2_exact, roman_exact, SearchBudget, SolveResult, Status, Witness,
    DEFAULT_BRUTE_CAP,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

const ENV_CAP: &str = "PIDOM_BRUTE_CAP";
const ENV_TIME_LIMIT: &str = "PIDOM_TIME_LIMIT";

#[derive(Parser)]
#[command(
    name = "pidom",
    version,
    about = "Exact perfect Italian domination toolkit",
    after_help = "Environment:\n  PIDOM_BRUTE_CAP    default order cap for the exhaustive solvers (default 14)\n  PIDOM_TIME_LIMIT   default time limit in seconds for the branch-and-bound\n\nExit codes: 0 success, 1 assertion/verification failure, 2 usage error, 3 budget exhausted."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a domination parameter exactly
    Solve(SolveArgs),
    /// Check a labeling against a predicate
    Verify(VerifyArgs),
    /// Emit a parametric family graph
    Generate(GenerateArgs),
    /// Run the polynomial characterizations and bounds
    Characterize(CharacterizeArgs),
    /// Build a hardness-reduction instance from an X3C file
    Reduce(ReduceArgs),
    /// Stream a graph6 file, solving and asserting per line
    Corpus(CorpusArgs),
}

#[derive(Args, Clone)]
struct GraphInput {
    /// Graph as a graph6 string
    #[arg(long, group = "graph_input")]
    graph6: Option<String>,
    /// Graph as an edge-list file ("n m" header, "u v" lines)
    #[arg(long, group = "graph_input")]
    edges: Option<PathBuf>,
    /// Graph as a family spec, e.g. cycle:9, jewel:3, kc:3,2,5,1
    #[arg(long, group = "graph_input")]
    family: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<(Graph, String, Option<FamilySpec>)> {
        match (&self.graph6, &self.edges, &self.family) {
            (Some(s), None, None) => {
                let g = decode_graph6(s)?;
                Ok((g, format!("graph6:{s}"), None))
            }
            (None, Some(path), None) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let g = Graph::from_edge_list_text(&text)?;
                Ok((g, format!("edges:{}", path.display()), None))
            }
            (None, None, Some(spec)) => {
                let spec: FamilySpec = spec.parse()?;
                let g = spec.make()?;
                Ok((g, format!("family:{spec}"), Some(spec)))
            }
            _ => Err(anyhow!(
                "exactly one of --graph6, --edges, --family is required"
            )),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Param {
    Pid,
    Gamma,
    Roman,
    Roman2,
    Fd2,
    Im,
}

impl Param {
    fn name(self) -> &'static str {
        match self {
            Param::Pid => "pid",
            Param::Gamma => "gamma",
            Param::Roman => "roman",
            Param::Roman2 => "roman2",
            Param::Fd2 => "fd2",
            Param::Im => "im",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Bnb,
}

#[derive(Args)]
struct BudgetArgs {
    /// Decide pid <= W instead of optimizing unboundedly
    #[arg(long)]
    max_weight: Option<u32>,
    /// Time limit in seconds (default from PIDOM_TIME_LIMIT, if set)
    #[arg(long)]
    time_limit: Option<f64>,
    /// Node limit for the branch-and-bound
    #[arg(long)]
    node_limit: Option<u64>,
}

impl BudgetArgs {
    fn to_budget(&self) -> Result<SearchBudget> {
        let time_limit = match self.time_limit {
            Some(secs) => Some(Duration::from_secs_f64(secs)),
            None => match std::env::var(ENV_TIME_LIMIT) {
                Ok(raw) => {
                    let secs: f64 = raw
                        .parse()
                        .with_context(|| format!("parsing {ENV_TIME_LIMIT}={raw}"))?;
                    Some(Duration::from_secs_f64(secs))
                }
                Err(_) => None,
            },
        };
        Ok(SearchBudget {
            max_weight: self.max_weight,
            time_limit,
            node_limit: self.node_limit,
        })
    }
}

fn effective_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(ENV_CAP) {
        Ok(raw) => raw
            .parse()
            .with_context(|| format!("parsing {ENV_CAP}={raw}")),
        Err(_) => Ok(DEFAULT_BRUTE_CAP),
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Which parameter to compute
    #[arg(long, value_enum)]
    param: Param,
    #[command(flatten)]
    input: GraphInput,
    /// brute = exhaustive oracle (order-capped); bnb = branch-and-bound (pid only)
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Order cap for the exhaustive oracles (default from PIDOM_BRUTE_CAP or 14)
    #[arg(long)]
    cap: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Labeling as comma-separated digits aligned to vertex ids, e.g. 1,0,1
    #[arg(long)]
    labeling: String,
    /// Which predicate to check
    #[arg(long, value_enum)]
    check: CheckKind,
    #[command(flatten)]
    input: GraphInput,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Pid,
    Roman,
    Roman2,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family spec, e.g. jewel:3, kpartite:3,3,3
    #[arg(long)]
    family: String,
    /// Output format
    #[arg(long, value_enum, default_value = "graph6")]
    out: OutFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Graph6,
    Edges,
}

#[derive(Args)]
struct CharacterizeArgs {
    #[command(flatten)]
    input: GraphInput,
}

#[derive(Args)]
struct ReduceArgs {
    /// X3C instance file ("q t" header, then one triple per line)
    #[arg(long)]
    x3c: PathBuf,
    /// Reduction target
    #[arg(long, value_enum, default_value = "pid")]
    target: ReduceTarget,
    /// Target weight for the roman2 reduction (its formula is not built in)
    #[arg(long)]
    target_weight: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceTarget {
    Pid,
    Roman2,
}

#[derive(Args)]
struct CorpusArgs {
    /// File with one graph6 string per line
    #[arg(long)]
    file: PathBuf,
    /// Assert pid(G) = n for every line
    #[arg(long)]
    assert_pid_equals_n: bool,
    /// Assert the cubic sandwich and the constructive upper labeling
    /// (lines that are not connected cubic graphs fail the assertion)
    #[arg(long)]
    assert_cubic_bounds: bool,
    /// Order cap for the matching solver used by the cubic assertions
    #[arg(long)]
    cap: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

// --------------------------------------------------------------------------
// report schema

#[derive(Serialize)]
struct Report {
    command: String,
    input: String,
    version: String,
    results: Vec<Entry>,
}

#[derive(Serialize, Default)]
struct Entry {
    parameter: String,
    value: Option<u32>,
    witness: Option<WitnessJson>,
    status: String,
    nodes: Option<u64>,
    millis: Option<u128>,
    reason: Option<String>,
    violations: Option<Vec<ViolationJson>>,
    index: Option<usize>,
    graph6: Option<String>,
    n: Option<usize>,
    failures: Option<Vec<String>>,
}

#[derive(Serialize)]
struct WitnessJson {
    kind: String,
    data: String,
}

#[derive(Serialize)]
struct ViolationJson {
    vertex: u32,
    observed: u32,
}

#[derive(Serialize)]
struct ReduceReport {
    command: String,
    input: String,
    version: String,
    target: String,
    k: u32,
    order: usize,
    graph6: String,
    roles: Vec<String>,
}

fn witness_json(w: &Witness) -> WitnessJson {
    match w {
        Witness::Labeling(f) => WitnessJson {
            kind: "labeling".into(),
            data: f.to_csv(),
        },
        Witness::Vertices(s) => WitnessJson {
            kind: "vertices".into(),
            data: s
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        },
        Witness::Edges(e) => WitnessJson {
            kind: "edges".into(),
            data: e
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect::<Vec<_>>()
                .join(","),
        },
    }
}

fn status_str(status: Status) -> &'static str {
    match status {
        Status::Optimal => "optimal",
        Status::BudgetProvedInfeasible => "budget-proved-infeasible",
        Status::Timeout => "timeout",
    }
}

fn solve_entry(parameter: &str, res: &SolveResult) -> Entry {
    Entry {
        parameter: parameter.into(),
        value: res.value,
        witness: res.witness.as_ref().map(witness_json),
        status: status_str(res.status).into(),
        nodes: Some(res.nodes_explored),
        millis: Some(res.elapsed.as_millis()),
        ..Default::default()
    }
}

fn violations_json(verdict: &Verdict) -> Vec<ViolationJson> {
    verdict
        .violations
        .iter()
        .map(|v| ViolationJson {
            vertex: v.vertex,
            observed: v.observed,
        })
        .collect()
}

fn print_report(report: &Report) {
    println!(
        "{}",
        serde_json::to_string_pretty(report).expect("report serializes")
    );
}

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

// --------------------------------------------------------------------------
// subcommands

fn run_solve(args: &SolveArgs) -> Result<u8> {
    let (graph, descriptor, _) = args.input.load()?;
    let cap = effective_cap(args.cap)?;
    let budget = args.budget.to_budget()?;
    let method = args.method.unwrap_or(match args.param {
        Param::Pid => Method::Bnb,
        _ => Method::Brute,
    });
    if method == Method::Bnb && args.param != Param::Pid {
        eprintln!("--method bnb is only available for --param pid");
        return Ok(EXIT_USAGE);
    }
    let explicit_budget = args.budget.max_weight.is_some()
        || args.budget.time_limit.is_some()
        || args.budget.node_limit.is_some();
    if explicit_budget && method != Method::Bnb {
        eprintln!("budget flags (--max-weight/--time-limit/--node-limit) apply to --method bnb only");
        return Ok(EXIT_USAGE);
    }
    let res = match (args.param, method) {
        (Param::Pid, Method::Bnb) => pid_branch_bound(&graph, &budget),
        (Param::Pid, Method::Brute) => pid_bruteforce(&graph, cap)?,
        (Param::Gamma, _) => gamma_exact(&graph, cap)?,
        (Param::Roman, _) => roman_exact(&graph, cap)?,
        (Param::Roman2, _) => roman2_exact(&graph, cap)?,
        (Param::Fd2, _) => fd2_exact(&graph, cap)?,
        (Param::Im, _) => max_induced_matching(&graph, cap)?,
    };
    let entry = solve_entry(args.param.name(), &res);
    let report = Report {
        command: "solve".into(),
        input: descriptor,
        version: version(),
        results: vec![entry],
    };
    print_report(&report);
    Ok(match res.status {
        Status::Timeout => EXIT_BUDGET,
        _ => 0,
    })
}

fn run_verify(args: &VerifyArgs) -> Result<u8> {
    let (graph, descriptor, _) = args.input.load()?;
    let labeling = Labeling::from_csv(&args.labeling)?;
    let (name, verdict) = match args.check {
        CheckKind::Pid => ("pid", check_pid(&graph, &labeling)?),
        CheckKind::Roman => ("roman", check_roman(&graph, &labeling)?),
        CheckKind::Roman2 => ("roman2", check_roman2(&graph, &labeling)?),
    };
    let ok = verdict.ok();
    let entry = Entry {
        parameter: format!("verify:{name}"),
        value: Some(labeling.weight()),
        status: if ok { "ok".into() } else { "violated".into() },
        violations: Some(violations_json(&verdict)),
        ..Default::default()
    };
    let report = Report {
        command: "verify".into(),
        input: descriptor,
        version: version(),
        results: vec![entry],
    };
    print_report(&report);
    Ok(if ok { 0 } else { EXIT_FAILURE })
}

fn run_generate(args: &GenerateArgs) -> Result<u8> {
    let spec: FamilySpec = args.family.parse()?;
    let graph = spec.make()?;
    match args.out {
        OutFormat::Graph6 => println!("{}", encode_graph6(&graph)?),
        OutFormat::Edges => print!("{}", graph.to_edge_list_text()),
    }
    Ok(0)
}

fn run_characterize(args: &CharacterizeArgs) -> Result<u8> {
    let (graph, descriptor, family) = args.input.load()?;
    let mut results = Vec::new();
    let mut concluded = false;
    if let Some(spec) = &family {
        let res = closed_form(spec)?;
        if res.conclusion == Conclusion::PidEquals {
            results.push(Entry {
                parameter: "pid".into(),
                value: Some(res.value),
                status: "pid-equals".into(),
                reason: Some(res.reason.into()),
                witness: res.witness.as_ref().map(witness_json),
                ..Default::default()
            });
            concluded = true;
        }
    }
    if !concluded && graph.n() >= 2 && graph.is_connected() {
        let res2 = test_pid2(&graph)?;
        if res2.conclusion == Conclusion::PidEquals {
            results.push(Entry {
                parameter: "pid".into(),
                value: Some(2),
                status: "pid-equals".into(),
                reason: Some(res2.reason.into()),
                witness: res2.witness.as_ref().map(witness_json),
                ..Default::default()
            });
        } else {
            let res3 = test_pid3(&graph)?;
            let (status, value) = match res3.conclusion {
                Conclusion::PidEquals => ("pid-equals", 3),
                _ => ("pid-at-least", res3.value),
            };
            results.push(Entry {
                parameter: "pid".into(),
                value: Some(value),
                status: status.into(),
                reason: Some(res3.reason.into()),
                witness: res3.witness.as_ref().map(witness_json),
                ..Default::default()
            });
        }
        concluded = true;
    }
    if !concluded {
        results.push(Entry {
            parameter: "pid".into(),
            status: "unknown".into(),
            reason: Some("not-characterized".into()),
            ..Default::default()
        });
    }
    if graph.is_connected() && graph.n() >= 1 {
        let (lower, upper) = bounds(&graph)?;
        results.push(Entry {
            parameter: "pid-lower-bound".into(),
            value: Some(lower),
            status: "bound".into(),
            reason: Some("degree-lower-bound".into()),
            ..Default::default()
        });
        results.push(Entry {
            parameter: "pid-upper-bound".into(),
            value: Some(upper),
            status: "bound".into(),
            reason: Some(if upper < graph.n() as u32 {
                "strong-matching-upper-bound".into()
            } else {
                "all-ones-upper-bound".into()
            }),
            ..Default::default()
        });
    }
    let report = Report {
        command: "characterize".into(),
        input: descriptor,
        version: version(),
        results,
    };
    print_report(&report);
    Ok(0)
}

fn run_reduce(args: &ReduceArgs) -> Result<u8> {
    let text = fs::read_to_string(&args.x3c)
        .with_context(|| format!("reading {}", args.x3c.display()))?;
    let inst = X3CInstance::parse(&text)?;
    let red = match args.target {
        ReduceTarget::Pid => reduce_x3c(&inst),
        ReduceTarget::Roman2 => {
            let Some(k) = args.target_weight else {
                eprintln!("--target roman2 requires --target-weight (the formula is not built in)");
                return Ok(EXIT_USAGE);
            };
            reduce_x3c_roman2(&inst, k)
        }
    };
    let report = ReduceReport {
        command: "reduce".into(),
        input: format!("x3c:{}", args.x3c.display()),
        version: version(),
        target: match args.target {
            ReduceTarget::Pid => "pid".into(),
            ReduceTarget::Roman2 => "roman2".into(),
        },
        k: red.k,
        order: red.graph.n(),
        graph6: encode_graph6(&red.graph)?,
        roles: red.roles.iter().map(|r| r.tag()).collect(),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(0)
}

fn run_corpus(args: &CorpusArgs) -> Result<u8> {
    let text = fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let cap = effective_cap(args.cap)?;
    let budget = args.budget.to_budget()?;
    let mut results = Vec::new();
    let mut any_failure = false;
    let mut any_timeout = false;
    for (index, line) in text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
    {
        let mut entry = Entry {
            parameter: "corpus-line".into(),
            index: Some(index),
            graph6: Some(line.to_string()),
            status: "ok".into(),
            ..Default::default()
        };
        let mut failures = Vec::new();
        match decode_graph6(line) {
            Err(err) => failures.push(format!("decode: {err}")),
            Ok(graph) => {
                entry.n = Some(graph.n());
                let res = pid_branch_bound(&graph, &budget);
                entry.value = res.value;
                entry.nodes = Some(res.nodes_explored);
                entry.millis = Some(res.elapsed.as_millis());
                entry.status = status_str(res.status).into();
                if res.status == Status::Timeout {
                    any_timeout = true;
                }
                if args.assert_pid_equals_n {
                    match res.value {
                        Some(v) if v == graph.n() as u32 => {}
                        Some(v) => failures.push(format!("pid {} != n {}", v, graph.n())),
                        None if res.status == Status::BudgetProvedInfeasible => {
                            failures.push("pid proved above the weight budget".into())
                        }
                        None => {}
                    }
                }
                if args.assert_cubic_bounds {
                    corpus_cubic_checks(&graph, res.value, cap, &mut failures);
                }
            }
        }
        if !failures.is_empty() {
            any_failure = true;
            entry.status = "failed".into();
            entry.failures = Some(failures);
        }
        results.push(entry);
    }
    let report = Report {
        command: "corpus".into(),
        input: format!("file:{}", args.file.display()),
        version: version(),
        results,
    };
    print_report(&report);
    Ok(if any_failure {
        EXIT_FAILURE
    } else if any_timeout {
        EXIT_BUDGET
    } else {
        0
    })
}

fn corpus_cubic_checks(graph: &Graph, pid: Option<u32>, cap: usize, failures: &mut Vec<String>) {
    if !graph.is_regular(3) || !graph.is_connected() {
        failures.push("not a connected cubic graph".into());
        return;
    }
    let Some(pid) = pid else {
        return; // solver budget ran out; reported through the status field
    };
    let n = graph.n() as u32;
    let lower = (2 * n).div_ceil(5);
    if pid < lower {
        failures.push(format!("pid {pid} below ceil(2n/5) = {lower}"));
    }
    match max_induced_matching(graph, cap) {
        Err(err) => failures.push(format!("im: {err}")),
        Ok(im_res) => {
            let im = im_res.value.expect("matching solver is exact");
            let upper = n - 2 * im;
            if pid > upper {
                failures.push(format!("pid {pid} above n - 2*im = {upper}"));
            }
            if upper > 2 * n / 3 {
                failures.push(format!("n - 2*im = {upper} above floor(2n/3) = {}", 2 * n / 3));
            }
            match cubic_upper_labeling(graph, cap) {
                Err(err) => failures.push(format!("upper labeling: {err}")),
                Ok(f) => {
                    let valid = check_pid(graph, &f).map(|v| v.ok()).unwrap_or(false);
                    if !valid || f.weight() != upper {
                        failures.push("constructive upper labeling failed to validate".into());
                    }
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Verify(args) => run_verify(args),
        Command::Generate(args) => run_generate(args),
        Command::Characterize(args) => run_characterize(args),
        Command::Reduce(args) => run_reduce(args),
        Command::Corpus(args) => run_corpus(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
