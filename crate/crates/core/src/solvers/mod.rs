//! Exact solvers on both sides of the reduction, plus the planar shortcuts.

mod mis;
mod planar;
mod project;
mod search;

pub use mis::{max_independent_set, TangencyGraph};
pub use planar::{es_fpt_decide, es_threshold, is_convex_position_2d, planar_largest_convex_subset};
pub use project::{approx_convex_subset_3d, project_points, Projection};
pub use search::{decide_es, decide_lecs, largest_convex_subset, largest_empty_convex_subset};

/// Optimum of a maximisation, its witness and the number of search nodes
/// visited. The witness holds indices into the solver's input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub explored: u64,
}
