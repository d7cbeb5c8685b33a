use thiserror::Error;

use crate::cluster::N1ClusterState;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum N1Error {
    #[error("expected an n x n x 1 state, got {0}")]
    WrongShape(String),
    #[error("cluster ({x}, {y}) shows an unreachable pattern")]
    UnrecognizedClusterPattern { x: usize, y: usize },
    #[error("boundary clusters cannot be solved: {0}")]
    UnsolvableBoundary(String),
    #[error("cluster ({x}, {y}) is {found:?}, expected {expected:?}")]
    PreconditionViolation {
        x: usize,
        y: usize,
        expected: N1ClusterState,
        found: N1ClusterState,
    },
}
