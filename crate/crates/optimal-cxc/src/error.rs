use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OptError {
    #[error("expected c1 x c2 x n with c1 != n != c2 and c1 * c2 <= 6, got {0}")]
    WrongShape(String),
    #[error("limit exceeded: {0}")]
    CapExceeded(String),
    #[error("state cannot be solved: {0}")]
    Unsolvable(String),
}
