//! Solver for n x n x 1 puzzles in O(n^2 / log n) moves.
//!
//! Boundary clusters are solved first in O(n) moves. Inner clusters sit in
//! one of six configurations and are solved in bulk: clusters sharing a
//! configuration across a set of rows and columns are fixed together by
//! expanding each cluster-relative move over the whole set.

pub mod boundary;
pub mod bulk;
pub mod cluster;
pub mod error;
pub mod solve;

pub use boundary::{boundary_solved, solve_boundary};
pub use cluster::{
    classify_cluster, cluster_solution, instantiate, ClusterKind, GenMove, N1Cluster, N1ClusterState,
};
pub use bulk::{bulk_moves, bulk_solve_grouped, bulk_solve_uniform, chunk_size, group_plan};
pub use error::N1Error;
pub use solve::{lower_bound_n1, naive_solve_n1, solve_n1};
