use thiserror::Error;

use crate::invertibility::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6 encoding: {0}")]
    MalformedGraph6(String),

    #[error("graph order {n} outside supported range {min}..={max}")]
    UnsupportedOrder { n: usize, min: usize, max: usize },

    #[error("graph order {n} exceeds the limit of {limit} for this operation")]
    SizeLimit { n: usize, limit: usize },

    #[error("order mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not square or has inconsistent rows")]
    NotSquare,

    #[error("singular matrix")]
    Singular,

    #[error("not a perfect matching of the graph: {0}")]
    InvalidMatching(String),

    #[error("graph is not invertible ({0})")]
    NotInvertible(Verdict),
}

pub type Result<T> = std::result::Result<T, Error>;
