//! Ground truth: a proper-coloring verifier applied to every output, and an
//! exhaustive backtracking list-coloring oracle for small instances.

use crate::coloring::{Color, ListAssignment, PartialColoring};
use crate::graph::Graph;

/// A single re-checkable defect in a coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UncoloredVertex { v: usize },
    ColorNotInList { v: usize, color: Color },
    EdgeConflict { u: usize, v: usize, color: Color },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::UncoloredVertex { v } => write!(f, "uncolored-vertex {v}"),
            Violation::ColorNotInList { v, color } => {
                write!(f, "color-not-in-list {v} {color}")
            }
            Violation::EdgeConflict { u, v, color } => {
                write!(f, "edge-conflict {u} {v} {color}")
            }
        }
    }
}

/// Checks that `f` is total, list-respecting and proper. Returns every
/// violation: uncolored vertices first (ascending), then colors outside
/// their list (ascending by vertex), then monochromatic edges (ascending by
/// `(u, v)` with `u < v`).
pub fn verify_coloring(g: &Graph, lists: &ListAssignment, f: &PartialColoring) -> Vec<Violation> {
    let n = g.vertex_count();
    assert_eq!(lists.vertex_count(), n, "lists must cover every vertex");
    assert_eq!(f.vertex_count(), n, "coloring must cover every vertex");
    let mut out = Vec::new();
    for v in 0..n {
        if f.get(v).is_none() {
            out.push(Violation::UncoloredVertex { v });
        }
    }
    for v in 0..n {
        if let Some(c) = f.get(v) {
            if !lists.contains(v, c) {
                out.push(Violation::ColorNotInList { v, color: c });
            }
        }
    }
    for (u, v) in g.edges() {
        if let (Some(cu), Some(cv)) = (f.get(u), f.get(v)) {
            if cu == cv {
                out.push(Violation::EdgeConflict { u, v, color: cu });
            }
        }
    }
    out
}

/// Default search budget for [`solve_exact`].
pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

/// Answer of the exhaustive oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactResult {
    /// A coloring was found (verifier-clean by construction).
    Solved(PartialColoring),
    /// The whole search space was exhausted: no list coloring exists.
    Unsatisfiable,
    /// The node budget ran out before the search finished.
    LimitExceeded,
}

/// Complete backtracking over vertices ordered by ascending list size, ties
/// by id; colors are tried ascending. Each attempted assignment counts as
/// one node against `node_limit`. Intended for n up to about 20.
pub fn solve_exact(g: &Graph, lists: &ListAssignment, node_limit: u64) -> ExactResult {
    let n = g.vertex_count();
    assert_eq!(lists.vertex_count(), n, "lists must cover every vertex");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (lists.list(v).len(), v));

    let mut f = PartialColoring::new(n);
    let mut nodes = 0u64;
    match search(g, lists, &order, 0, &mut f, &mut nodes, node_limit) {
        Search::Found => ExactResult::Solved(f),
        Search::Exhausted => ExactResult::Unsatisfiable,
        Search::OutOfBudget => ExactResult::LimitExceeded,
    }
}

enum Search {
    Found,
    Exhausted,
    OutOfBudget,
}

fn search(
    g: &Graph,
    lists: &ListAssignment,
    order: &[usize],
    depth: usize,
    f: &mut PartialColoring,
    nodes: &mut u64,
    node_limit: u64,
) -> Search {
    if depth == order.len() {
        return Search::Found;
    }
    let v = order[depth];
    'colors: for &c in lists.list(v) {
        *nodes += 1;
        if *nodes > node_limit {
            return Search::OutOfBudget;
        }
        for &w in g.neighbors(v) {
            if f.get(w) == Some(c) {
                continue 'colors;
            }
        }
        f.set(v, c);
        match search(g, lists, order, depth + 1, f, nodes, node_limit) {
            Search::Exhausted => f.clear(v),
            done => return done,
        }
    }
    Search::Exhausted
}
