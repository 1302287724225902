use thiserror::Error;

use crate::poly::MultiPoly;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Text input that does not parse as the requested object.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("not a fixed-point-free involution: {0:?}")]
    InvalidInvolution(Vec<usize>),

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: &'static str },

    /// An operation was called outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Iterated bottom-degree extraction did not reach zero.
    #[error("expansion exceeded max_deg = {max_deg}; residual has {} terms", residual.len())]
    ExpansionExceeded {
        max_deg: i64,
        residual: Box<MultiPoly>,
    },

    /// Triangular elimination left terms inside the window.
    #[error("nonzero remainder inside the window ({} terms)", remainder.len())]
    NonzeroRemainder { remainder: Box<MultiPoly> },
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
