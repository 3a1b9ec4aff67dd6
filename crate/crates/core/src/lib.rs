//! Shortest closed walks that touch every customer edge of a graph.
//!
//! An instance is a connected graph `G` plus a set `X` of customer edges. A
//! feasible solution is a closed walk in `G` that visits at least one
//! endpoint of every customer edge; its cost is its number of edges.
//!
//! The main solver picks a vertex cover of `G[X]` with the maximal-matching
//! 2-approximation, solves TSP over the cover in the shortest-path metric
//! of `G`, and expands the tour back into a walk. There are also an exact
//! solver for small instances, a dedicated walk for dense grid instances,
//! and the two hardness reductions as instance builders.

pub mod budget;
pub mod cover;
pub mod dense_grid;
pub mod error;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod io;
pub mod metric;
pub mod reductions;
pub mod solver;
pub mod tsp;

pub use budget::Budget;
pub use cover::{enumerate_minimal_covers, vc_exact, vc_matching_approx, VertexCover};
pub use dense_grid::{solve_dense_grid, space_filling_cycle};
pub use error::{Error, Result};
pub use generate::{ExperimentConfig, GraphParams};
pub use graph::{Edge, Graph, GraphKind, Vertex};
pub use instance::{verify_feasible, ClosedWalk, Instance, Violation};
pub use metric::{metric_closure, Metric, MetricClosure};
pub use reductions::{reduce_rect_tsp_to_grid_star, vc_via_star, GridReduction, RectTspInstance};
pub use solver::{
    lower_bound_tau, solve_star_approx, solve_star_exact, Algorithm, AlgorithmTag, SolveReport,
    StarSolver,
};
pub use tsp::{Tour, TspAlgorithm, TspBackend};
