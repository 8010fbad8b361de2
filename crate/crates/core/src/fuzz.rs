//! Randomized conformance harness: generates graph/list instances, runs the
//! chooser on each, verifies every claimed coloring, and cross-checks small
//! instances against the exhaustive oracle.
//!
//! All draws come from one ChaCha8 stream seeded with the configured seed,
//! in a fixed order, so a report is reproducible from `(seed, trials)` and a
//! failure is reproducible from `(seed, trial index)`.
//!
//! Instance mix per trial: a coin picks the d-regular regime (d drawn from
//! 3..=6, configuration model) or the bounded-degree connected regime (dmax
//! drawn from 1..=6). Lists have size max(2, component max degree); 80% of
//! trials draw uniform random lists over a palette of size between d and 2d,
//! the rest draw two-block lists over {1..2d} (each vertex gets {1..d} or
//! {d+1..2d}), which keeps the disjoint- and equal-list anchor cases
//! reachable. When the configuration model exhausts its resampling budget
//! (likely at d = 6), the trial falls back to the connected regime with
//! dmax = d, keeping the run deterministic.

use crate::checking::{solve_exact, verify_coloring, ExactResult, DEFAULT_NODE_LIMIT};
use crate::chooser::{list_color_with, Mutation, TraceCounters};
use crate::coloring::{Color, ListAssignment, Outcome};
use crate::graph::Graph;
use crate::instances::{gen_random_connected, gen_random_regular, random_subset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Parameters of a fuzz run.
#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub trials: u64,
    pub seed: u64,
    /// Largest instance size generated.
    pub nmax: usize,
    /// Instances up to this size are cross-checked against the oracle.
    pub oracle_nmax: usize,
    pub oracle_node_limit: u64,
    /// Deliberately broken chooser rule for sensitivity runs.
    pub mutation: Option<Mutation>,
}

impl FuzzConfig {
    pub fn new(trials: u64, seed: u64) -> FuzzConfig {
        FuzzConfig {
            trials,
            seed,
            nmax: 60,
            oracle_nmax: 9,
            oracle_node_limit: DEFAULT_NODE_LIMIT,
            mutation: None,
        }
    }
}

/// The first failing trial, with everything needed to reproduce it.
#[derive(Debug, Clone)]
pub struct FuzzFailure {
    pub trial: u64,
    pub seed: u64,
    pub description: String,
}

/// Aggregate result of a fuzz run; the run stops at the first failure.
#[derive(Debug, Clone)]
pub struct FuzzReport {
    pub trials_run: u64,
    pub successes: u64,
    pub infeasible: u64,
    pub not_applicable: u64,
    /// Instances whose chooser answer the oracle confirmed.
    pub oracle_checked: u64,
    /// Instances the oracle gave up on (node budget).
    pub oracle_limited: u64,
    pub counters: TraceCounters,
    pub failure: Option<FuzzFailure>,
}

impl FuzzReport {
    /// Zero failures and every branch counter positive.
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.counters.missing_branches().is_empty()
    }

    /// Stable `key=value` summary followed by the counter lines.
    pub fn summary_lines(&self) -> Vec<String> {
        let mut lines = vec![
            format!("trials={}", self.trials_run),
            format!("successes={}", self.successes),
            format!("infeasible={}", self.infeasible),
            format!("not_applicable={}", self.not_applicable),
            format!("oracle_checked={}", self.oracle_checked),
            format!("oracle_limited={}", self.oracle_limited),
        ];
        lines.extend(self.counters.lines());
        lines
    }
}

/// Runs the harness. Panics raised by the chooser are caught and reported
/// as failures; the default panic hook is suspended for the duration so the
/// report stays the only output channel.
pub fn run_fuzz(config: &FuzzConfig) -> FuzzReport {
    let mut report = FuzzReport {
        trials_run: 0,
        successes: 0,
        infeasible: 0,
        not_applicable: 0,
        oracle_checked: 0,
        oracle_limited: 0,
        counters: TraceCounters::default(),
        failure: None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let prev_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(|_| {}));
    for trial in 0..config.trials {
        report.trials_run = trial + 1;
        let (graph, lists) = generate_instance(&mut rng, config.nmax);
        if let Some(description) = run_trial(config, &graph, &lists, &mut report) {
            report.failure = Some(FuzzFailure {
                trial,
                seed: config.seed,
                description,
            });
            break;
        }
    }
    std::panic::set_hook(prev_hook);
    report
}

fn generate_instance(rng: &mut ChaCha8Rng, nmax: usize) -> (Graph, ListAssignment) {
    let regular_mode = rng.gen_bool(0.5);
    let graph = if regular_mode {
        let d = rng.gen_range(3..=6usize);
        match draw_regular_size(rng, d, nmax) {
            Some(n) => {
                let gen_seed = rng.gen::<u64>();
                match gen_random_regular(n, d, gen_seed) {
                    Ok(g) => g,
                    // the configuration model gave up; fall back deterministically
                    Err(_) => gen_random_connected(n, d, gen_seed)
                        .expect("fallback parameters are feasible"),
                }
            }
            None => draw_connected(rng, d.min(6), nmax),
        }
    } else {
        let dmax = rng.gen_range(1..=6usize);
        draw_connected(rng, dmax, nmax)
    };
    let lists = draw_lists(rng, &graph);
    (graph, lists)
}

/// Picks n for a d-regular instance within nmax, keeping n*d even; None if
/// nmax leaves no room.
fn draw_regular_size(rng: &mut ChaCha8Rng, d: usize, nmax: usize) -> Option<usize> {
    if d.is_multiple_of(2) {
        if nmax < d + 1 {
            return None;
        }
        Some(rng.gen_range(d + 1..=nmax))
    } else {
        let lo = (d + 2) / 2;
        let hi = nmax / 2;
        if hi < lo {
            return None;
        }
        Some(2 * rng.gen_range(lo..=hi))
    }
}

fn draw_connected(rng: &mut ChaCha8Rng, dmax: usize, nmax: usize) -> Graph {
    let n = if dmax == 1 {
        rng.gen_range(1..=2usize)
    } else {
        rng.gen_range(1..=nmax.max(1))
    };
    let gen_seed = rng.gen::<u64>();
    gen_random_connected(n, dmax, gen_seed).expect("guarded parameters are feasible")
}

/// Lists of size max(2, component max degree), drawn per component either
/// uniformly over a random palette in [size, 2*size] or from two disjoint
/// blocks of {1..2*size}.
fn draw_lists(rng: &mut ChaCha8Rng, g: &Graph) -> ListAssignment {
    let n = g.vertex_count();
    let mut lists: Vec<Vec<Color>> = vec![Vec::new(); n];
    for comp in g.connected_components() {
        let maxdeg = comp.ids().iter().map(|&v| g.degree(v)).max().unwrap_or(0);
        let size = maxdeg.max(2);
        let block_mode = rng.gen_range(0..5u32) == 4;
        if block_mode {
            for &v in comp.ids() {
                let base = if rng.gen_bool(0.5) { 0 } else { size as Color };
                lists[v] = (1..=size as Color).map(|c| base + c).collect();
            }
        } else {
            let palette = rng.gen_range(size..=2 * size);
            for &v in comp.ids() {
                lists[v] = random_subset(rng, size, palette);
            }
        }
    }
    ListAssignment::new(lists).expect("generated lists are nonempty")
}

/// Runs the chooser on one instance and checks everything checkable.
/// Returns a failure description, or None if the trial is clean.
fn run_trial(
    config: &FuzzConfig,
    graph: &Graph,
    lists: &ListAssignment,
    report: &mut FuzzReport,
) -> Option<String> {
    let n = graph.vertex_count();
    let result = catch_unwind(AssertUnwindSafe(|| {
        list_color_with(graph, lists, config.mutation)
    }));
    let (outcome, counters) = match result {
        Ok(pair) => pair,
        Err(payload) => {
            return Some(format!("chooser panicked: {}", panic_message(&*payload)));
        }
    };
    report.counters.merge(&counters);
    match outcome {
        Outcome::Success(f) => {
            report.successes += 1;
            let violations = verify_coloring(graph, lists, &f);
            if let Some(first) = violations.first() {
                return Some(format!(
                    "verifier rejected a claimed coloring: {first} ({} violations total)",
                    violations.len()
                ));
            }
            if n <= config.oracle_nmax {
                match solve_exact(graph, lists, config.oracle_node_limit) {
                    ExactResult::Solved(_) => report.oracle_checked += 1,
                    ExactResult::Unsatisfiable => {
                        return Some(
                            "oracle proves infeasibility but the chooser succeeded".to_string(),
                        );
                    }
                    ExactResult::LimitExceeded => report.oracle_limited += 1,
                }
            }
        }
        Outcome::Infeasible { witness } => {
            report.infeasible += 1;
            if n <= config.oracle_nmax {
                match solve_exact(graph, lists, config.oracle_node_limit) {
                    ExactResult::Solved(_) => {
                        return Some(format!(
                            "chooser claims infeasible ({witness}) but the oracle found a coloring"
                        ));
                    }
                    ExactResult::Unsatisfiable => report.oracle_checked += 1,
                    ExactResult::LimitExceeded => report.oracle_limited += 1,
                }
            }
        }
        Outcome::NotApplicable { .. } => {
            report.not_applicable += 1;
        }
    }
    None
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
