//! Exact optimal solving of c1 x c2 x n boxes, where n differs from both
//! c1 and c2.

pub mod error;
pub mod long;
pub mod model;
pub mod oracle;
pub mod pack;
pub mod plan;
pub mod search;

pub use error::OptError;
pub use long::{eulerian_tour, long_config_graph, LongConfig, LongGraph};
pub use model::{check_dims, is_long, long_moves, solved_states, ZCluster};
pub use oracle::{bfs_oracle, Oracle, DEFAULT_ORACLE_CAP};
pub use plan::{cluster_short_plan, interleave, ShortPlan};
pub use search::{length_guard, optimal_solve, solver_for, Limits, OptimalSolver};
