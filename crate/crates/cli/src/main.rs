//! `schubert`: command-line access to permutations, Schubert polynomials,
//! rc-graphs and the Pieri row insertion.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on malformed
//! input.

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use schubert_core::par::Execution;
use schubert_core::pieri::{self, admissible_expansion, format_trace, AbSequence, RunOptions};
use schubert_core::rcgraph::{self, compositions, enumerate_rc};
use schubert_core::verify::{self, Report, VerifyConfig};
use schubert_core::{schubert_ddiff, schubert_rc, Composition, Error, Permutation, RcGraph};

#[derive(Parser)]
#[command(
    name = "schubert",
    version,
    about = "Schubert polynomials, rc-graphs and Pieri insertion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Length, Lehmer code and inverse of a permutation.
    Perm { w: Permutation },
    /// The Schubert polynomial of a permutation.
    Schubert {
        w: Permutation,
        #[arg(long, value_enum, default_value_t = Backend::Rc)]
        backend: Backend,
    },
    /// rc-graph enumeration.
    #[command(subcommand)]
    Rc(RcCommand),
    /// Row insertion, its inverse, the expansion it realises, and sweeps.
    #[command(subcommand)]
    Pieri(PieriCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Rc,
    Ddiff,
    Both,
}

#[derive(Subcommand)]
enum RcCommand {
    /// Every rc-graph of `w`, one JSON object per line.
    List {
        w: Permutation,
        #[arg(long)]
        render: bool,
    },
    /// The bottom graph of `w`.
    Bottom {
        w: Permutation,
        #[arg(long)]
        render: bool,
    },
}

#[derive(Subcommand)]
enum PieriCommand {
    /// Insert σ[r,m] graphs into an rc-graph.
    Insert(InsertArgs),
    /// Split an rc-graph of `w'` into an rc-graph of `w` and a composition.
    Invert(InvertArgs),
    /// The permutations `w'` of the expansion of `P_w · h_m(x_1..x_r)`.
    Expand {
        w: Permutation,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// Oracle checks for one `w` or for all of `S_n`.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InsertArgs {
    /// Inline JSON, or `@path` to read it from a file.
    graph: String,
    #[arg(long)]
    r: usize,
    /// Row counts of the σ[r,m] graph, e.g. `0,1`.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    comp: Option<Composition>,
    /// Insert every composition of `--m` into `--r` parts.
    #[arg(long, requires = "m")]
    all: bool,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    trace: bool,
    /// Assert the per-step invariants while running.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct InvertArgs {
    graph: String,
    #[arg(long)]
    w: Permutation,
    #[arg(long)]
    r: usize,
    #[arg(long, required_unless_present = "m", conflicts_with = "m")]
    ledger: Option<AbSequence>,
    /// Recover the ledger from the expansion with this `m`.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    trace: bool,
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Sweep all of `S_n`.
    #[arg(long, required_unless_present = "w", conflicts_with = "w")]
    n: Option<usize>,
    /// Check a single permutation.
    #[arg(long)]
    w: Option<Permutation>,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    m: usize,
    /// Per-step invariant assertions inside every run.
    #[arg(long)]
    lemmas: bool,
    /// One JSON report per line instead of text.
    #[arg(long)]
    json: bool,
    /// Run on the current thread only.
    #[arg(long)]
    sequential: bool,
    /// Print passing reports too (text mode).
    #[arg(long)]
    all_reports: bool,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Violated(_) | Error::Infeasible { .. } | Error::Ambiguous { .. } => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Perm { w } => Ok(perm(&w)),
        Command::Schubert { w, backend } => schubert(&w, backend),
        Command::Rc(cmd) => Ok(rc(cmd)),
        Command::Pieri(PieriCommand::Insert(args)) => insert(args),
        Command::Pieri(PieriCommand::Invert(args)) => invert(args),
        Command::Pieri(PieriCommand::Expand { w, r, m }) => expand(&w, r, m),
        Command::Pieri(PieriCommand::Verify(args)) => verify(args),
    };
    let mut stdout = io::stdout().lock();
    match outcome {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn perm(w: &Permutation) -> String {
    format!(
        "length: {}\ncode: {}\ninverse: {}\n",
        w.length(),
        w.lehmer_code().iter().join(","),
        w.inverse()
    )
}

fn schubert(w: &Permutation, backend: Backend) -> Outcome {
    let n = w.support().max(1);
    match backend {
        Backend::Rc => Ok(format!("{}\n", schubert_rc(w)?)),
        Backend::Ddiff => Ok(format!("{}\n", schubert_ddiff(w, n)?)),
        Backend::Both => {
            let (a, b) = (schubert_rc(w)?, schubert_ddiff(w, n)?);
            if a == b {
                Ok(format!("{a}\n"))
            } else {
                Err(Failure::Verification(format!("rc: {a}\nddiff: {b}\n")))
            }
        }
    }
}

/// One-line notation without trailing fixed points.
fn one_line(w: &Permutation) -> String {
    match w.trimmed() {
        [] => "1".to_string(),
        values => values.iter().join(","),
    }
}

fn show_graphs(graphs: &[RcGraph], render: bool) -> String {
    if render {
        graphs.iter().map(RcGraph::render).join("\n")
    } else {
        graphs
            .iter()
            .map(|g| format!("{}\n", g.serialize()))
            .collect()
    }
}

fn rc(cmd: RcCommand) -> String {
    match cmd {
        RcCommand::List { w, render } => show_graphs(&enumerate_rc(&w), render),
        RcCommand::Bottom { w, render } => show_graphs(&[rcgraph::bottom(&w)], render),
    }
}

fn read_graph(arg: &str) -> Result<RcGraph, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(PathBuf::from(path))
            .map_err(|e| Failure::Input(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    Ok(RcGraph::parse(text.trim())?)
}

fn options(trace: bool, verify: bool) -> RunOptions {
    RunOptions { verify, trace }
}

fn insert(args: InsertArgs) -> Outcome {
    let graph = read_graph(&args.graph)?;
    let comps = match (args.comp, args.m) {
        (Some(c), _) => vec![c],
        (None, Some(m)) => compositions(m, args.r),
        (None, None) => unreachable!("clap requires --comp or --all --m"),
    };
    let mut out = String::new();
    for (k, comp) in comps.iter().enumerate() {
        if comps.len() > 1 {
            if k > 0 {
                out.push('\n');
            }
            writeln!(out, "comp: {comp}").unwrap();
        }
        let result = pieri::insert(&graph, args.r, comp, options(args.trace, args.verify))?;
        out.push_str(&format_trace(&result.trace));
        writeln!(out, "graph: {}", result.graph.serialize()).unwrap();
        writeln!(out, "ledger: {}", result.ledger).unwrap();
        writeln!(out, "permutation: {}", one_line(&result.permutation())).unwrap();
    }
    Ok(out)
}

fn invert(args: InvertArgs) -> Outcome {
    let graph = read_graph(&args.graph)?;
    let opts = options(args.trace, args.verify);
    let result = match (&args.ledger, args.m) {
        (Some(ledger), _) => pieri::inverse(&graph, &args.w, args.r, ledger, opts)?,
        (None, Some(m)) => pieri::inverse_for(&graph, &args.w, args.r, m, opts)?,
        (None, None) => unreachable!("clap requires --ledger or --m"),
    };
    let mut out = format_trace(&result.trace);
    writeln!(out, "graph: {}", result.graph.serialize()).unwrap();
    writeln!(out, "comp: {}", result.composition).unwrap();
    Ok(out)
}

fn expand(w: &Permutation, r: usize, m: usize) -> Outcome {
    let terms = admissible_expansion(w, r, m)?;
    Ok(format!(
        "{}\n",
        terms
            .iter()
            .map(|t| format!("[{}]", t.permutation))
            .join("; ")
    ))
}

fn verify(args: VerifyArgs) -> Outcome {
    let config = VerifyConfig {
        lemma_checks: args.lemmas,
        execution: if args.sequential {
            Execution::Sequential
        } else {
            Execution::Parallel
        },
    };
    let reports: Vec<Report> = match (args.n, &args.w) {
        (Some(n), _) => verify::sweep(n, args.r, args.m, config),
        (None, Some(w)) => vec![
            verify::check_schubert_backends(w, w.support().max(1)),
            verify::check_pieri_identity(w, args.r, args.m),
            verify::check_bijection(w, args.r, args.m, config),
        ],
        (None, None) => unreachable!("clap requires --n or --w"),
    };
    let summary = verify::summarize(&reports);
    let mut out = String::new();
    if args.json {
        for report in &reports {
            writeln!(out, "{}", report.to_json_line()).unwrap();
        }
    } else {
        for report in reports.iter().filter(|r| args.all_reports || !r.passed()) {
            write!(out, "{report}").unwrap();
        }
        writeln!(
            out,
            "{} reports, {} passed, {} failed ({} checks)",
            summary.reports, summary.passed, summary.failed, summary.checks
        )
        .unwrap();
    }
    if summary.failed > 0 {
        Err(Failure::Verification(out))
    } else {
        Ok(out)
    }
}
