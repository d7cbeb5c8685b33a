use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum N3Error {
    #[error("expected an n x n x n state, got {0}")]
    WrongShape(String),
    #[error("cluster ({x}, {y}) is not an inner cluster of an n = {n} cube")]
    OutOfRange { x: usize, y: usize, n: usize },
    #[error("no even permutation matches the coloring")]
    OddParity,
    #[error("state cannot be solved: {0}")]
    Unsolvable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
}
