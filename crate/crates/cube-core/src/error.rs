use thiserror::Error;

use crate::moves::Move;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    /// A move that cannot be applied to the given dimensions. `index` is the
    /// position inside a sequence when the move came from one.
    #[error("illegal move {mv}{}: {reason}", .index.map(|i| format!(" at position {i}")).unwrap_or_default())]
    IllegalMove {
        mv: Move,
        index: Option<usize>,
        reason: &'static str,
    },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid state: {0}")]
    InvalidState(String),
}

impl CubeError {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        CubeError::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
