//! List assignments, partial colorings and the chooser's return contract.

use crate::graph::VertexSet;
use thiserror::Error;

/// Colors are opaque non-negative integers; no palette normalization is
/// ever performed.
pub type Color = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ListError {
    #[error("vertex {0} has an empty color list")]
    EmptyList(usize),
}

/// One color list per vertex; each list is sorted ascending, duplicate-free
/// and nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    /// Normalizes (sorts, dedups) the given lists; every list must be
    /// nonempty.
    pub fn new(mut lists: Vec<Vec<Color>>) -> Result<ListAssignment, ListError> {
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if list.is_empty() {
                return Err(ListError::EmptyList(v));
            }
        }
        Ok(ListAssignment { lists })
    }

    /// Gives every one of `n` vertices the same list.
    pub fn uniform(n: usize, colors: &[Color]) -> ListAssignment {
        ListAssignment::new(vec![colors.to_vec(); n]).expect("nonempty uniform list")
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    /// The list of vertex `v`, ascending.
    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn contains(&self, v: usize, color: Color) -> bool {
        self.lists[v].binary_search(&color).is_ok()
    }

    /// Restriction to a sub-id space: sub vertex `i` gets the list of
    /// `orig_ids[i]`.
    pub fn restrict(&self, orig_ids: &[usize]) -> ListAssignment {
        ListAssignment {
            lists: orig_ids.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    pub(crate) fn set_list(&mut self, v: usize, list: Vec<Color>) {
        debug_assert!(!list.is_empty());
        self.lists[v] = list;
    }
}

/// Vertex-indexed optional colors; the chooser fills this in as it works.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    colors: Vec<Option<Color>>,
}

impl PartialColoring {
    pub fn new(n: usize) -> PartialColoring {
        PartialColoring {
            colors: vec![None; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, color: Color) {
        debug_assert!(self.colors[v].is_none(), "vertex {v} colored twice");
        self.colors[v] = Some(color);
    }

    /// Removes the color of `v` again (backtracking support).
    pub(crate) fn clear(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|c| c.is_some())
    }

    pub fn assigned_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }
}

/// Why a component falls outside the chooser's guarantee.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NaReason {
    /// The component is complete on d+1 vertices and some list has only d
    /// colors.
    CompleteComponent,
    /// Some list has fewer colors than the component's maximum degree.
    ListTooShort,
}

impl std::fmt::Display for NaReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NaReason::CompleteComponent => write!(f, "complete-component"),
            NaReason::ListTooShort => write!(f, "list-too-short"),
        }
    }
}

/// Proof-grade infeasibility evidence: an odd cycle whose lists all equal
/// the same two colors (the one exactly-infeasible shape the chooser can
/// meet). Re-checkable against the instance in linear time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycleWitness {
    /// The cycle in traversal order.
    pub cycle: Vec<usize>,
    /// The shared 2-color list.
    pub colors: [Color; 2],
}

impl std::fmt::Display for OddCycleWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ids: Vec<String> = self.cycle.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "odd cycle ({}) with identical 2-color lists {{{}, {}}} has no proper coloring",
            ids.join(", "),
            self.colors[0],
            self.colors[1]
        )
    }
}

/// Result of a chooser run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Total proper list coloring.
    Success(PartialColoring),
    /// A proof-grade "no coloring exists" answer (only ever produced by the
    /// exact max-degree-2 routine).
    Infeasible { witness: OddCycleWitness },
    /// The instance falls outside the guarantee on the named component.
    NotApplicable {
        reason: NaReason,
        component: VertexSet,
    },
}

impl Outcome {
    pub fn is_success(&self) -> bool {
        matches!(self, Outcome::Success(_))
    }
}
