//! Subcommand implementations with stable exit codes:
//! 0 success, 1 usage or I/O error, 2 infeasible, 3 not applicable,
//! 4 internal invariant failure. On any failing path the first line on the
//! error stream is `status=<word>`.

use crate::formats;
use choosable::checking::{solve_exact, verify_coloring, ExactResult, Violation};
use choosable::chooser::list_color;
use choosable::coloring::{ListAssignment, OddCycleWitness, Outcome, PartialColoring};
use choosable::fuzz::{run_fuzz, FuzzConfig};
use choosable::graph::{Graph, VertexSet};
use choosable::instances::{
    gen_lists, gen_named, gen_random_connected, gen_random_regular, NamedKind,
};
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// The chooser's special-case recursion removes at least four vertices per
/// level, so its depth is bounded by n/4; a quarter-gigabyte stack leaves
/// room for graphs far beyond the supported scale.
const WORKER_STACK_BYTES: usize = 256 * 1024 * 1024;

fn fail_usage(message: impl std::fmt::Display) -> i32 {
    eprintln!("status=error");
    eprintln!("{message}");
    EXIT_USAGE
}

fn read_file(path: &Path) -> Result<String, i32> {
    std::fs::read_to_string(path)
        .map_err(|e| fail_usage(format_args!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, i32> {
    let text = read_file(path)?;
    formats::parse_graph(&text)
        .map_err(|e| fail_usage(format_args!("{}: {e}", path.display())))
}

fn load_lists(path: &Path, n: usize) -> Result<ListAssignment, i32> {
    let text = read_file(path)?;
    formats::parse_lists(&text, n)
        .map_err(|e| fail_usage(format_args!("{}: {e}", path.display())))
}

fn load_coloring(path: &Path, n: usize) -> Result<PartialColoring, i32> {
    let text = read_file(path)?;
    formats::parse_coloring(&text, n)
        .map_err(|e| fail_usage(format_args!("{}: {e}", path.display())))
}

/// Runs `f` on a worker thread with a deep stack and a silenced panic hook;
/// a panic comes back as its message.
fn run_worker<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> Result<T, String> {
    let prev_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    let result = std::thread::Builder::new()
        .name("chooser-worker".into())
        .stack_size(WORKER_STACK_BYTES)
        .spawn(f)
        .expect("worker thread spawn")
        .join();
    std::panic::set_hook(prev_hook);
    result.map_err(|payload| panic_message(&*payload))
}

fn panic_message(payload: &(dyn std::any::Any + Send)) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "non-string panic payload".to_string()
    }
}

// Diagnostics use the file convention: vertex ids are 1-based.

fn one_based_set(s: &VertexSet) -> String {
    let ids: Vec<String> = s.ids().iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", ids.join(", "))
}

fn one_based_witness(w: &OddCycleWitness) -> String {
    let ids: Vec<String> = w.cycle.iter().map(|v| (v + 1).to_string()).collect();
    format!(
        "odd cycle ({}) with identical 2-color lists {{{}, {}}} has no proper coloring",
        ids.join(", "),
        w.colors[0],
        w.colors[1]
    )
}

fn one_based_violation(v: &Violation) -> String {
    match v {
        Violation::UncoloredVertex { v } => format!("uncolored-vertex {}", v + 1),
        Violation::ColorNotInList { v, color } => {
            format!("color-not-in-list {} {}", v + 1, color)
        }
        Violation::EdgeConflict { u, v, color } => {
            format!("edge-conflict {} {} {}", u + 1, v + 1, color)
        }
    }
}

pub fn cmd_color(graph_path: &Path, lists_path: &Path, trace: bool) -> i32 {
    let graph = match load_graph(graph_path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let lists = match load_lists(lists_path, graph.vertex_count()) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let result = run_worker(move || list_color(&graph, &lists));
    let (outcome, counters) = match result {
        Ok(pair) => pair,
        Err(message) => {
            eprintln!("status=internal-failure");
            eprintln!("{message}");
            return EXIT_INTERNAL;
        }
    };
    match outcome {
        Outcome::Success(f) => {
            if trace {
                for line in counters.lines() {
                    eprintln!("{line}");
                }
            }
            print!("{}", formats::emit_coloring(&f));
            EXIT_OK
        }
        Outcome::Infeasible { witness } => {
            eprintln!("status=infeasible");
            if trace {
                for line in counters.lines() {
                    eprintln!("{line}");
                }
            }
            eprintln!("{}", one_based_witness(&witness));
            EXIT_INFEASIBLE
        }
        Outcome::NotApplicable { reason, component } => {
            eprintln!("status=not-applicable");
            if trace {
                for line in counters.lines() {
                    eprintln!("{line}");
                }
            }
            eprintln!("reason={reason} component={}", one_based_set(&component));
            EXIT_NOT_APPLICABLE
        }
    }
}

pub fn cmd_verify(graph_path: &Path, lists_path: &Path, coloring_path: &Path) -> i32 {
    let graph = match load_graph(graph_path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let lists = match load_lists(lists_path, graph.vertex_count()) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let coloring = match load_coloring(coloring_path, graph.vertex_count()) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let violations = verify_coloring(&graph, &lists, &coloring);
    if violations.is_empty() {
        EXIT_OK
    } else {
        eprintln!("status=violations");
        for v in &violations {
            println!("{}", one_based_violation(v));
        }
        EXIT_INFEASIBLE
    }
}

pub fn cmd_oracle(graph_path: &Path, lists_path: &Path, node_limit: u64) -> i32 {
    let graph = match load_graph(graph_path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let lists = match load_lists(lists_path, graph.vertex_count()) {
        Ok(l) => l,
        Err(code) => return code,
    };
    let result = run_worker(move || solve_exact(&graph, &lists, node_limit));
    match result {
        Ok(ExactResult::Solved(f)) => {
            print!("{}", formats::emit_coloring(&f));
            EXIT_OK
        }
        Ok(ExactResult::Unsatisfiable) => {
            eprintln!("status=infeasible");
            eprintln!("exhaustive search proves no list coloring exists");
            EXIT_INFEASIBLE
        }
        Ok(ExactResult::LimitExceeded) => {
            eprintln!("status=limit-exceeded");
            eprintln!("node budget {node_limit} exhausted before the search finished");
            EXIT_NOT_APPLICABLE
        }
        Err(message) => {
            eprintln!("status=internal-failure");
            eprintln!("{message}");
            EXIT_INTERNAL
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphKind {
    Cycle,
    Path,
    Complete,
    Petersen,
    Prism,
    Regular,
    Connected,
}

pub fn cmd_gen_graph(
    kind: GraphKind,
    n: Option<usize>,
    d: Option<usize>,
    dmax: Option<usize>,
    seed: u64,
) -> i32 {
    let need_n = |n: Option<usize>| n.ok_or_else(|| fail_usage("this kind requires --n"));
    let result = match kind {
        GraphKind::Cycle => need_n(n).and_then(|n| {
            gen_named(NamedKind::Cycle(n)).map_err(fail_usage)
        }),
        GraphKind::Path => need_n(n).and_then(|n| {
            gen_named(NamedKind::Path(n)).map_err(fail_usage)
        }),
        GraphKind::Complete => need_n(n).and_then(|n| {
            gen_named(NamedKind::Complete(n)).map_err(fail_usage)
        }),
        GraphKind::Petersen => gen_named(NamedKind::Petersen).map_err(fail_usage),
        GraphKind::Prism => gen_named(NamedKind::Prism).map_err(fail_usage),
        GraphKind::Regular => need_n(n).and_then(|n| {
            let d = d.ok_or_else(|| fail_usage("kind regular requires --d"))?;
            gen_random_regular(n, d, seed).map_err(fail_usage)
        }),
        GraphKind::Connected => need_n(n).and_then(|n| {
            let dmax = dmax.ok_or_else(|| fail_usage("kind connected requires --dmax"))?;
            gen_random_connected(n, dmax, seed).map_err(fail_usage)
        }),
    };
    match result {
        Ok(g) => {
            print!("{}", formats::emit_graph(&g));
            EXIT_OK
        }
        Err(code) => code,
    }
}

pub fn cmd_gen_lists(graph_path: &Path, size: usize, palette: usize, seed: u64) -> i32 {
    let graph = match load_graph(graph_path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match gen_lists(&graph, size, palette, seed) {
        Ok(lists) => {
            print!("{}", formats::emit_lists(&lists));
            EXIT_OK
        }
        Err(e) => fail_usage(e),
    }
}

pub fn cmd_fuzz(trials: u64, seed: u64, nmax: usize, oracle_nmax: usize) -> i32 {
    let config = FuzzConfig {
        trials,
        seed,
        nmax,
        oracle_nmax,
        ..FuzzConfig::new(trials, seed)
    };
    let report = match run_worker(move || run_fuzz(&config)) {
        Ok(r) => r,
        Err(message) => {
            eprintln!("status=internal-failure");
            eprintln!("{message}");
            return EXIT_INTERNAL;
        }
    };
    for line in report.summary_lines() {
        println!("{line}");
    }
    if let Some(failure) = &report.failure {
        eprintln!("status=internal-failure");
        eprintln!(
            "failing trial={} seed={}: {}",
            failure.trial, failure.seed, failure.description
        );
        return EXIT_INTERNAL;
    }
    let missing = report.counters.missing_branches();
    if !missing.is_empty() {
        eprintln!("status=internal-failure");
        eprintln!("coverage gap: branches never hit: {}", missing.join(", "));
        return EXIT_INTERNAL;
    }
    EXIT_OK
}
