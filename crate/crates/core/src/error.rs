use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("size mismatch: expected n = {expected}, found n = {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("{what} needs {needed} entries, which exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("rank {rank} is out of range for {count} tabloids")]
    RankOutOfRange { rank: u128, count: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} does not lie in the sum-zero subspace")]
    NotSumZero(String),

    #[error("weighting vectors are linearly dependent")]
    DependentWeights,

    #[error("infeasible request: {0}")]
    Infeasible(String),

    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    pub(crate) fn shape(expected: impl ToString, found: impl ToString) -> Self {
        Error::ShapeMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn parse(field: impl Into<String>, message: impl ToString) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.to_string(),
        }
    }
}
