//! Constructive list coloring for graphs under the choosability version of
//! Brooks' theorem: every connected graph with maximum degree Δ >= 3 that is
//! not the complete graph K_{Δ+1} can be properly colored from any
//! assignment of Δ-color lists. This crate turns that guarantee into a
//! deterministic polynomial-time procedure, together with the ground truth
//! needed to check it at desk scale: a violation-reporting verifier, an
//! exhaustive backtracking oracle for small instances, seeded instance
//! generators, and a randomized conformance harness.

pub mod checking;
pub mod chooser;
pub mod coloring;
pub mod fuzz;
pub mod graph;
pub mod instances;

pub use checking::{solve_exact, verify_coloring, ExactResult, Violation, DEFAULT_NODE_LIMIT};
pub use chooser::{list_color, list_color_with, Mutation, TraceCounters};
pub use coloring::{Color, ListAssignment, NaReason, Outcome, PartialColoring};
pub use graph::{Graph, GraphError, SubMap, VertexSet};
pub use instances::{
    gen_lists, gen_named, gen_random_connected, gen_random_regular, InstanceError, NamedKind, Seed,
};
