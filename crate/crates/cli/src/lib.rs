//! The `tdc` command line. [`run`] takes the arguments and output streams and
//! returns the process exit status: 0 when every check passed, 1 when a
//! violation was found, 2 for usage, parse and input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tdc_core::central::central;
use tdc_core::coloring::{is_tdc, Verdict};
use tdc_core::constructions::construct_tdc_central;
use tdc_core::enumerate::connected_graphs;
use tdc_core::family::FamilySpec;
use tdc_core::formulas::{formula_complement_central, formula_gamma_t_central_complete, formula_value};
use tdc_core::graph::Graph;
use tdc_core::io::{
    decode_graph6_stream, encode_graph6, parse_coloring, parse_graph, write_central_edge_list, write_coloring,
    write_edge_list, GraphFormat,
};
use tdc_core::report::{serialize_report, theorem_report, ReportOptions, SolveCache, TheoremReport};
use tdc_core::solve::{
    gamma_t_bruteforce, solve, tdc_number_bruteforce, total_domination_number, tdc_number, Invariant, SolveOptions,
    Witness,
};
use tdc_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_SWEEP_BUDGET_SECS: u64 = 60;

#[derive(Parser, Debug)]
#[command(name = "tdc", version, about = "Total dominator colorings of central graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family graph, optionally its central graph and a constructed coloring.
    Construct {
        #[command(flatten)]
        input: Input,
        /// Write the constructed coloring of the central graph here (needs --central).
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// Emit the central graph with each vertex's role as a comment.
    Central {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Compute chi, gamma_t or chi_d^t exactly.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "tdc")]
        invariant: String,
        /// Write the witness coloring here (tdc and chi only).
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        out: Output,
    },
    /// Check that a coloring file is a total dominator coloring of the graph.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        coloring: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Print the closed-form value for a family.
    Formula {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "tdc")]
        invariant: String,
        #[command(flatten)]
        out: Output,
    },
    /// Evaluate every applicable theorem on one graph.
    Report {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        out: Output,
    },
    /// Report on every graph of a graph6 stream, one JSON line each, in input order.
    Sweep {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the exact solvers with the brute-force oracles on all connected graphs in a range.
    OracleCheck {
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Also compare on the central graph of each enumerated graph.
        #[arg(long)]
        central: bool,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// Family spec such as path:8, bipartite:3,5, multipartite:1,2,2.
    #[arg(long, conflicts_with = "graph")]
    family: Option<String>,
    /// Graph file, or - for standard input.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Format of --graph. Defaults to graph6 for .g6/.graph6 files, else edgelist.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Replace the graph by its central graph.
    #[arg(long)]
    central: bool,
    /// Replace the graph by its complement (after --central).
    #[arg(long)]
    complement: bool,
}

#[derive(Args, Debug)]
struct Limits {
    /// Time limit per exact solve.
    #[arg(long)]
    budget_secs: Option<u64>,
    /// Largest order the exact solvers accept.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
    cap: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long)]
    json: bool,
    /// Graph output format for construct and central.
    #[arg(long, value_enum, default_value = "edgelist")]
    to: Format,
    /// Write the main output here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

impl From<Format> for GraphFormat {
    fn from(f: Format) -> GraphFormat {
        match f {
            Format::Graph6 => GraphFormat::Graph6,
            Format::Edgelist => GraphFormat::EdgeList,
        }
    }
}

#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn fail<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure(msg.into()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn read_input(path: &Path) -> CliResult<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        fs::read(path).map_err(|e| Failure(format!("reading {}: {e}", path.display())))
    }
}

fn input_format(input: &Input, path: &Path) -> GraphFormat {
    match input.format {
        Some(f) => f.into(),
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        },
    }
}

fn parse_family(s: &str) -> CliResult<FamilySpec> {
    s.parse().map_err(|e: Error| Failure(format!("--family {s:?}: {e}")))
}

/// The base graph named by `--family` or `--graph`, before transforms.
fn base_graph(input: &Input) -> CliResult<Graph> {
    match (&input.family, &input.graph) {
        (Some(f), None) => Ok(parse_family(f)?.build()?),
        (None, Some(path)) => {
            let bytes = read_input(path)?;
            parse_graph(&bytes, input_format(input, path))
                .map_err(|e| Failure(format!("{}: {e}", path.display())))
        }
        _ => fail("exactly one of --family or --graph is required"),
    }
}

fn transform(input: &Input, g: Graph) -> Graph {
    let g = if input.central { central(&g).into_result() } else { g };
    if input.complement {
        g.complement()
    } else {
        g
    }
}

fn load_graph(input: &Input) -> CliResult<Graph> {
    Ok(transform(input, base_graph(input)?))
}

fn emit(out: &Output, stdout: &mut dyn Write, text: &str) -> CliResult<()> {
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("writing {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure(format!("writing output: {e}"))),
    }
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure(format!("writing {}: {e}", path.display())))
}

fn solve_options(limits: &Limits, default_budget: Option<u64>) -> SolveOptions {
    SolveOptions {
        cap: limits.cap.map(|c| c as usize),
        budget: limits.budget_secs.or(default_budget).map(Duration::from_secs),
        node_limit: None,
    }
}

fn report_options(limits: &Limits, default_budget: Option<u64>) -> ReportOptions {
    let s = solve_options(limits, default_budget);
    ReportOptions {
        budget: s.budget,
        cap: s.cap,
        ..ReportOptions::default()
    }
}

fn graph_text(g: &Graph, to: Format) -> String {
    match to {
        Format::Graph6 => format!("{}\n", encode_graph6(g)),
        Format::Edgelist => write_edge_list(g),
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Construct { input, coloring, out } => construct(&input, coloring.as_deref(), &out, stdout),
        Command::Central { input, out } => {
            if input.central {
                return fail("central already applies the central transform; drop --central");
            }
            let base = base_graph(&input)?;
            let cg = central(&base);
            let text = match (out.to, input.complement) {
                (Format::Edgelist, false) => write_central_edge_list(&cg),
                (to, _) => graph_text(&transform(&input, cg.into_result()), to),
            };
            emit(&out, stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Solve {
            input,
            invariant,
            coloring,
            limits,
            out,
        } => solve_command(&input, &invariant, coloring.as_deref(), &limits, &out, stdout),
        Command::Verify { input, coloring, out } => verify(&input, &coloring, &out, stdout),
        Command::Formula { input, invariant, out } => formula(&input, &invariant, &out, stdout),
        Command::Report { input, limits, out } => {
            let g = load_graph(&input)?;
            let cache = SolveCache::new();
            let opts = report_options(&limits, None);
            let report = match &input.family {
                Some(f) if !input.central && !input.complement => {
                    tdc_core::report::theorem_report_for_family(&parse_family(f)?, &opts, &cache)?
                }
                _ => theorem_report(&g, &opts, &cache),
            };
            let text = if out.json {
                format!("{}\n", serialize_report(&report))
            } else {
                report_table(&report)
            };
            emit(&out, stdout, &text)?;
            Ok(if report.violations().next().is_some() {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            })
        }
        Command::Sweep { input, limits, out } => sweep(&input, &limits, &out, stdout, stderr),
        Command::OracleCheck {
            min_n,
            max_n,
            central: on_central,
            limits,
            out,
        } => oracle_check(min_n, max_n, on_central, &limits, &out, stdout),
    }
}

fn construct(input: &Input, coloring: Option<&Path>, out: &Output, stdout: &mut dyn Write) -> CliResult<i32> {
    let Some(family) = &input.family else {
        return fail("construct needs --family");
    };
    let spec = parse_family(family)?;
    if input.complement {
        return fail("construct does not take --complement");
    }
    if !input.central {
        if coloring.is_some() {
            return fail("--coloring needs --central: constructions color the central graph");
        }
        emit(out, stdout, &graph_text(&spec.build()?, out.to))?;
        return Ok(EXIT_OK);
    }
    let (cg, c) = construct_tdc_central(&spec)?;
    if let Some(path) = coloring {
        write_file(path, &format!("{}\n", write_coloring(&c)))?;
    }
    let text = match out.to {
        Format::Edgelist => format!("# classes: {}\n{}", c.class_count(), write_central_edge_list(&cg)),
        Format::Graph6 => graph_text(cg.result(), Format::Graph6),
    };
    emit(out, stdout, &text)?;
    Ok(EXIT_OK)
}

fn solve_command(
    input: &Input,
    invariant: &str,
    coloring: Option<&Path>,
    limits: &Limits,
    out: &Output,
    stdout: &mut dyn Write,
) -> CliResult<i32> {
    let inv: Invariant = invariant.parse()?;
    let g = load_graph(input)?;
    let r = match solve(&g, inv, &solve_options(limits, None)) {
        Ok(r) => r,
        Err(Error::Budget { lower, upper }) => {
            return fail(format!("budget exhausted; {} lies in [{lower}, {upper}]", inv.name()))
        }
        Err(e) => return Err(e.into()),
    };
    if let (Some(path), Some(c)) = (coloring, r.coloring()) {
        write_file(path, &format!("{}\n", write_coloring(c)))?;
    }
    let elapsed_ms = r.stats.elapsed.as_millis() as u64;
    let text = if out.json {
        let mut v = json!({
            "invariant": inv.name(),
            "n": g.order(),
            "value": r.value,
        });
        match &r.witness {
            Witness::Coloring(c) => v["assignment"] = json!(c.assignment()),
            Witness::Set(s) => v["set"] = json!(s),
        }
        v["nodes"] = json!(r.stats.nodes);
        v["elapsed_ms"] = json!(elapsed_ms);
        format!("{v}\n")
    } else {
        let witness = match &r.witness {
            Witness::Coloring(c) => format!("classes: {:?}", c.classes()),
            Witness::Set(s) => format!("set: {s:?}"),
        };
        format!(
            "{} = {}\n{witness}\nnodes: {}, elapsed: {elapsed_ms} ms\n",
            inv.name(),
            r.value,
            r.stats.nodes
        )
    };
    emit(out, stdout, &text)?;
    Ok(EXIT_OK)
}

fn verify(input: &Input, coloring: &Path, out: &Output, stdout: &mut dyn Write) -> CliResult<i32> {
    let g = load_graph(input)?;
    let text = fs::read_to_string(coloring).map_err(|e| Failure(format!("reading {}: {e}", coloring.display())))?;
    let c = parse_coloring(&text).map_err(|e| Failure(format!("{}: {e}", coloring.display())))?;
    let verdict = is_tdc(&g, &c)?;
    let (status, detail) = match verdict {
        Verdict::Pass => ("pass", format!("total dominator coloring with {} classes", c.class_count())),
        Verdict::MonochromaticEdge(u, v) => ("fail", format!("not proper: edge {u} {v} is monochromatic")),
        Verdict::Undominated(v) => ("fail", format!("vertex {v} totally dominates no class")),
    };
    let text = if out.json {
        let mut v = json!({ "status": status, "classes": c.class_count() });
        match verdict {
            Verdict::MonochromaticEdge(a, b) => v["edge"] = json!([a, b]),
            Verdict::Undominated(x) => v["vertex"] = json!(x),
            Verdict::Pass => {}
        }
        format!("{v}\n")
    } else {
        format!("{status}: {detail}\n")
    };
    emit(out, stdout, &text)?;
    Ok(if verdict.holds() { EXIT_OK } else { EXIT_VIOLATION })
}

fn formula(input: &Input, invariant: &str, out: &Output, stdout: &mut dyn Write) -> CliResult<i32> {
    let Some(family) = &input.family else {
        return fail("formula needs --family");
    };
    let spec = parse_family(family)?;
    let inv: Invariant = invariant.parse()?;
    let (what, value) = match (inv, input.complement) {
        (Invariant::Tdc, false) => ("chi_d^t(C(G))", formula_value(&spec)?),
        (Invariant::Tdc, true) => ("chi_d^t(complement of C(G))", formula_complement_central(&spec.build()?)?),
        (Invariant::GammaT, false) => match spec {
            FamilySpec::Complete(n) => ("gamma_t(C(G))", formula_gamma_t_central_complete(n)?),
            _ => return fail(format!("no closed form for gamma_t of the central graph of {spec}")),
        },
        _ => return fail(format!("no closed form for {} here", inv.name())),
    };
    let text = if out.json {
        format!("{}\n", json!({ "family": spec.to_string(), "quantity": what, "value": value }))
    } else {
        format!("{what} = {value} for G = {spec}\n")
    };
    emit(out, stdout, &text)?;
    Ok(EXIT_OK)
}

fn report_table(r: &TheoremReport) -> String {
    let mut s = format!("graph n={} m={} graph6={}\n", r.graph.n, r.graph.m, r.graph.graph6);
    for e in &r.entries {
        let status = match (e.applicable, e.skipped, e.holds) {
            (false, _, _) => "n/a",
            (true, true, _) => "SKIP",
            (true, false, true) => "ok",
            (true, false, false) => "FAIL",
        };
        s.push_str(&format!(
            "{:<26} {:<5} lhs={:?} rhs={:?}  {}\n",
            e.theorem, status, e.lhs, e.rhs, e.note
        ));
    }
    s
}

/// Applies `f` to every item on `threads` workers and returns the results in
/// input order.
fn parallel_map<T: Sync, R: Send>(items: &[T], threads: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..threads.max(1).min(items.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(item) = items.get(i) else { break };
                let r = f(item);
                slots.lock().expect("slots lock")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("slots lock")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

fn thread_count(limits: &Limits) -> usize {
    limits
        .threads
        .map(|t| t as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn sweep(
    input: &Input,
    limits: &Limits,
    out: &Output,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<i32> {
    let Some(path) = &input.graph else {
        return fail("sweep needs --graph with a graph6 stream");
    };
    if matches!(input.format, Some(Format::Edgelist)) {
        return fail("sweep reads graph6 streams only");
    }
    let bytes = read_input(path)?;
    let graphs = decode_graph6_stream(&bytes).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let graphs: Vec<Graph> = graphs.into_iter().map(|g| transform(input, g)).collect();
    let opts = report_options(limits, Some(DEFAULT_SWEEP_BUDGET_SECS));
    let cache = SolveCache::new();
    let reports = parallel_map(&graphs, thread_count(limits), |g| theorem_report(g, &opts, &cache));
    let mut text = String::new();
    let mut violations = 0;
    for r in &reports {
        text.push_str(&serialize_report(r));
        text.push('\n');
        violations += r.violations().count();
    }
    emit(out, stdout, &text)?;
    let _ = writeln!(stderr, "{} graphs, {violations} violations", reports.len());
    Ok(if violations > 0 { EXIT_VIOLATION } else { EXIT_OK })
}

fn oracle_check(
    min_n: usize,
    max_n: usize,
    on_central: bool,
    limits: &Limits,
    out: &Output,
    stdout: &mut dyn Write,
) -> CliResult<i32> {
    if min_n < 2 || min_n > max_n || max_n > 8 {
        return fail("oracle-check needs 2 <= --min-n <= --max-n <= 8");
    }
    let mut graphs = Vec::new();
    for n in min_n..=max_n {
        for g in connected_graphs(n) {
            if on_central {
                let c = central(&g).into_result();
                if c.order() <= tdc_core::solve::BRUTEFORCE_TDC_CAP {
                    graphs.push(c);
                }
            }
            graphs.push(g);
        }
    }
    let opts = solve_options(limits, None);
    let results = parallel_map(&graphs, thread_count(limits), |g| -> Result<Option<String>, Error> {
        let tdc = tdc_number(g, &opts)?.value;
        let gamma = total_domination_number(g, &opts)?.value;
        let mut msgs = Vec::new();
        if g.order() <= tdc_core::solve::BRUTEFORCE_TDC_CAP {
            let oracle = tdc_number_bruteforce(g)?;
            if oracle != tdc {
                msgs.push(format!("chi_d^t solver {tdc} vs oracle {oracle}"));
            }
        }
        let oracle = gamma_t_bruteforce(g)?;
        if oracle != gamma {
            msgs.push(format!("gamma_t solver {gamma} vs oracle {oracle}"));
        }
        Ok((!msgs.is_empty()).then(|| format!("{}: {}", encode_graph6(g), msgs.join("; "))))
    });
    let mut mismatches = Vec::new();
    for r in results {
        if let Some(m) = r? {
            mismatches.push(m);
        }
    }
    let text = if out.json {
        format!(
            "{}\n",
            json!({ "graphs": graphs.len(), "mismatches": mismatches })
        )
    } else {
        let mut s = format!("checked {} graphs, {} mismatches\n", graphs.len(), mismatches.len());
        for m in &mismatches {
            s.push_str(m);
            s.push('\n');
        }
        s
    };
    emit(out, stdout, &text)?;
    Ok(if mismatches.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
}

