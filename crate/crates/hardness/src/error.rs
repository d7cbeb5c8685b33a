use cube_core::CubeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("label collision: {0}")]
    LabelCollision(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("limit exceeded: {0}")]
    CapExceeded(String),
    #[error(transparent)]
    Cube(#[from] CubeError),
}
