//! Solver for n x n x n cubes working one 24-position cluster at a time.
//!
//! Corners and edges are solved first, then every inner cluster with
//! 3-cycles built from a ten-move commutator. Off-diagonal clusters that
//! share a coloring are solved together.

pub mod boundary;
pub mod bulk;
pub mod cluster;
pub mod cms;
pub mod conj;
pub mod error;
pub mod facecoord;
pub mod frame;
pub mod orbit;
pub mod perm;
pub mod solve;

pub use boundary::{fix_parity, solve_wings, target_colors};
pub use bulk::{bulk_solve_grouped_n3, bulk_solve_uniform_n3};
pub use cluster::{cluster_positions, cluster_solution, express_three_cycle, Chirality, ClusterColoring, GenRef};
pub use cms::ClusterMoveSequence;
pub use error::N3Error;
pub use facecoord::FaceCoord;
pub use frame::{all_frames, Frame};
pub use perm::{Perm, Perm24};
pub use solve::{lower_bound_n3, naive_solve_n3, solve_n3};
