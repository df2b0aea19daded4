use thiserror::Error;

use crate::multiindex::MultiIndex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts do not sum to {target}")]
    PartsMismatch { target: MultiIndex },

    #[error("the zero multi-index has no partitions")]
    ZeroIndex,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("no value available for {0}")]
    MissingValue(String),

    #[error("predicted {predicted} terms exceeds the cap of {cap}")]
    TermCapExceeded { predicted: u128, cap: u128 },

    #[error("truncation order {order} in {vars} variables exceeds the series size guard")]
    TruncationTooLarge { order: u32, vars: usize },

    #[error("matrix is singular (pivot {pivot} at column {column})")]
    SingularSigma { column: usize, pivot: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
