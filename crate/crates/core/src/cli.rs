//! Command-line front end.
//!
//! Exit status: 0 on success, 2 when a `verify` or `sweep` run records
//! violations, 1 on usage or budget errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerate::enumerate_connected;
use crate::error::{Error, Result};
use crate::family::{family_graphs, make_family, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{encode, parse_graph6};
use crate::harness::{
    conjecture_sweep, run_check, CheckKind, CheckParams, CheckReport, GraphSource,
};
use crate::rules::{initial_closure, ForbiddenFamily};
use crate::solver::{Mover, Solver, SolverConfig, DEFAULT_MEMO_CAP};

pub const MEMO_CAP_ENV: &str = "ISOGAME_MEMO_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATIONS: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "isogame",
    version,
    about = "Exact solver for the F-isolation game on graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for verify and sweep (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Omit wall-clock fields so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub reproducible: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one game.
    Solve(SolveArgs),
    /// Run a named check.
    Verify(VerifyArgs),
    /// Sweep ig and ig' against ceil(3n/7) on all connected graphs.
    Sweep(SweepArgs),
    /// Print the graph(s) of a family spec as graph6.
    Family(FamilyArgs),
    /// Print every connected graph of order n as graph6.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
pub struct GraphInput {
    /// A graph6 record.
    #[arg(long, group = "source")]
    pub graph6: Option<String>,
    /// A file of graph6 records, one per line.
    #[arg(long, group = "source")]
    pub graph_file: Option<PathBuf>,
    /// A family spec such as `cycle:6`, `hgraph` or `gstar:complete:2`.
    #[arg(long, group = "source")]
    pub family: Option<String>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Forbidden family: K1, K2, P3, none, or custom:<n>:<u-v,...>, joined by ';'.
    #[arg(long, default_value = "K2")]
    pub forbidden: String,
    /// Who moves first: D or S.
    #[arg(long, default_value = "D")]
    pub start: String,
    /// Pre-marked vertices, comma separated (`v1`..`v12` for hgraph).
    #[arg(long, value_delimiter = ',')]
    pub marks: Vec<String>,
    #[arg(long, env = MEMO_CAP_ENV, default_value_t = DEFAULT_MEMO_CAP)]
    pub memo_cap: usize,
    /// Enable bound-based move cutoffs (values are unchanged).
    #[arg(long)]
    pub prune: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check name, e.g. diff-at-most-one, path-exact, conjecture-sweep.
    #[arg(long)]
    pub check: String,
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Random instances per order.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Family to test (repeatable); defaults depend on the check.
    #[arg(long)]
    pub forbidden: Vec<String>,
    /// Use the graph6 records in this file instead of the check's own set.
    #[arg(long)]
    pub graph_file: Option<PathBuf>,
    /// Use all connected graphs up to this order instead of the default set.
    #[arg(long, conflicts_with = "graph_file")]
    pub max_order: Option<usize>,
    #[arg(long, env = MEMO_CAP_ENV, default_value_t = DEFAULT_MEMO_CAP)]
    pub memo_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
}

/// Serialized form of one solved game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct SolveRecord {
    pub graph: String,
    pub family: String,
    pub start: String,
    pub initial_marks: Vec<usize>,
    pub value: usize,
    pub best_move: Option<usize>,
    pub principal_line: Vec<usize>,
}

/// Runs a parsed command line, writing artifacts to `stdout` (or the
/// `--output` file) and diagnostics to `stderr`. Returns the exit status.
pub fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut notes = Vec::new();
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut notes)),
            Err(e) => Err(Error::Usage(format!("--jobs {jobs}: {e}"))),
        },
        None => dispatch(&cli, &mut notes),
    };
    let _ = stderr.write_all(&notes);
    let (text, code) = match result {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, text.as_bytes()).map_err(Error::from),
        None => stdout.write_all(text.as_bytes()).map_err(Error::from),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_ERROR;
    }
    code
}

fn dispatch(cli: &Cli, stderr: &mut Vec<u8>) -> Result<(String, i32)> {
    match &cli.command {
        Command::Solve(args) => solve_cmd(args, stderr).map(|t| (t, EXIT_OK)),
        Command::Verify(args) => verify_cmd(args, cli.reproducible),
        Command::Sweep(args) => {
            let started = std::time::Instant::now();
            let mut report = conjecture_sweep(args.n_max)?;
            if !cli.reproducible {
                report.wall_time_ms = Some(started.elapsed().as_millis() as u64);
            }
            render_report(&report, args.format)
        }
        Command::Family(args) => family_cmd(args).map(|t| (t, EXIT_OK)),
        Command::Enumerate(args) => {
            let mut out = String::new();
            for g in enumerate_connected(args.n)? {
                out.push_str(&encode(&g));
                out.push('\n');
            }
            Ok((out, EXIT_OK))
        }
    }
}

fn read_graph6_file(path: &PathBuf) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

fn load_graphs(input: &GraphInput) -> Result<(Vec<Graph>, Option<FamilySpec>)> {
    if let Some(g6) = &input.graph6 {
        return Ok((vec![parse_graph6(g6)?], None));
    }
    if let Some(path) = &input.graph_file {
        let graphs = read_graph6_file(path)?;
        if graphs.is_empty() {
            return Err(Error::Usage(format!(
                "--graph-file {}: no records",
                path.display()
            )));
        }
        return Ok((graphs, None));
    }
    let spec: FamilySpec = input
        .family
        .as_deref()
        .ok_or_else(|| Error::Usage("one of --graph6, --graph-file, --family is required".into()))?
        .parse()?;
    Ok((family_graphs(&spec)?, Some(spec)))
}

fn parse_marks(names: &[String], spec: Option<&FamilySpec>, n: usize) -> Result<VertexSet> {
    let mut marks = VertexSet::EMPTY;
    for name in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let v = match spec {
            Some(spec) => spec.parse_vertex(name)?,
            None => name
                .parse()
                .map_err(|_| Error::Usage(format!("--marks: bad vertex {name:?}")))?,
        };
        if v >= n {
            return Err(Error::Usage(format!(
                "--marks: vertex {name} is out of range for order {n}"
            )));
        }
        marks.insert(v);
    }
    Ok(marks)
}

fn solve_cmd(args: &SolveArgs, stderr: &mut Vec<u8>) -> Result<String> {
    let fam: ForbiddenFamily = args.forbidden.parse()?;
    let start: Mover = args.start.parse()?;
    let (graphs, spec) = load_graphs(&args.input)?;
    if matches!(spec, Some(FamilySpec::GH(_))) {
        let _ = writeln!(stderr, "note: gh:n uses the path P_n as its base graph");
    }
    let config = SolverConfig {
        memo_cap: args.memo_cap,
        prune: args.prune,
    };
    let mut out = String::new();
    for g in &graphs {
        let marks = parse_marks(&args.marks, spec.as_ref(), g.order())?;
        let state = initial_closure(g, &fam, marks);
        if !state.absorbed().is_empty() {
            let _ = writeln!(
                stderr,
                "note: initial marks closed over F-forbidden components; also marked {:?}",
                state.absorbed().to_vec()
            );
        }
        let result = Solver::with_config(g, &fam, config)
            .game_value(&state, start)
            .map_err(|e| match e {
                Error::StateSpaceBudgetExceeded { cap } => Error::BudgetExceeded(format!(
                    "memo cap {cap} exceeded while solving {} (raise --memo-cap or {MEMO_CAP_ENV})",
                    encode(g)
                )),
                other => other,
            })?;
        let record = SolveRecord {
            graph: encode(g),
            family: fam.tag().to_string(),
            start: start.letter().to_string(),
            initial_marks: marks.to_vec(),
            value: result.value,
            best_move: result.best_move,
            principal_line: result.principal_line,
        };
        match args.format {
            Format::Json => {
                out.push_str(&serde_json::to_string(&record).expect("record serializes"));
                out.push('\n');
            }
            Format::Plain => {
                if graphs.len() > 1 {
                    out.push_str(&format!("graph={}\n", record.graph));
                }
                out.push_str(&format!("value={}\n", record.value));
                match record.best_move {
                    Some(x) => out.push_str(&format!("best_move={x}\n")),
                    None => out.push_str("best_move=none\n"),
                }
                let line: Vec<String> = record
                    .principal_line
                    .iter()
                    .map(|v| v.to_string())
                    .collect();
                out.push_str(&format!("principal_line={}\n", line.join(" ")));
            }
            Format::Csv => {
                return Err(Error::Usage("solve supports --format plain or json".into()));
            }
        }
    }
    Ok(out)
}

fn verify_cmd(args: &VerifyArgs, reproducible: bool) -> Result<(String, i32)> {
    let kind: CheckKind = args.check.parse()?;
    let families = args
        .forbidden
        .iter()
        .map(|f| f.parse())
        .collect::<Result<Vec<ForbiddenFamily>>>()?;
    let source = match (&args.graph_file, args.max_order) {
        (Some(path), _) => GraphSource::Graphs(read_graph6_file(path)?),
        (None, Some(max_order)) => GraphSource::Connected { max_order },
        (None, None) => GraphSource::Default,
    };
    let params = CheckParams {
        seed: args.seed,
        trials: args.trials,
        n_min: args.n_min,
        n_max: args.n_max,
        families,
        memo_cap: args.memo_cap,
        timed: !reproducible,
    };
    let report = run_check(kind, &source, &params)?;
    render_report(&report, args.format)
}

fn render_report(report: &CheckReport, format: Format) -> Result<(String, i32)> {
    let text = match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => {
            let mut buf = Vec::new();
            report.write_csv(&mut buf)?;
            String::from_utf8(buf).expect("csv is UTF-8")
        }
        Format::Plain => {
            let mut s = report.summary_line() + "\n";
            for note in &report.notes {
                s.push_str(&format!("note: {note}\n"));
            }
            for e in &report.extremal {
                s.push_str(&format!(
                    "extremal: {} {} {}\n",
                    e.description, e.graph6, e.observed
                ));
            }
            for v in &report.violations {
                s.push_str(&format!(
                    "violation: {} {:?} observed {} expected {}\n",
                    v.graph6, v.parameters, v.observed, v.expected
                ));
            }
            s
        }
    };
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATIONS
    };
    Ok((text, code))
}

fn family_cmd(args: &FamilyArgs) -> Result<String> {
    let spec: FamilySpec = args.family.parse()?;
    let graphs = match spec {
        FamilySpec::AllTrees(_) => family_graphs(&spec)?,
        _ => vec![make_family(&spec)?],
    };
    let mut out = String::new();
    for g in graphs {
        match args.format {
            Format::Plain => {
                out.push_str(&encode(&g));
                out.push('\n');
            }
            Format::Json => {
                let v = serde_json::json!({
                    "spec": spec.to_string(),
                    "graph6": encode(&g),
                    "order": g.order(),
                    "edges": g.edges(),
                });
                out.push_str(&v.to_string());
                out.push('\n');
            }
            Format::Csv => {
                return Err(Error::Usage(
                    "family supports --format plain or json".into(),
                ))
            }
        }
    }
    Ok(out)
}
