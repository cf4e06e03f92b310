use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("budget exceeded: {what} exceeds the limit of {limit}")]
    BudgetExceeded { what: String, limit: u64 },

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("singular matrix: zero diagonal entry at index {0}")]
    SingularMatrix(usize),

    #[error("matrix is not lower triangular: nonzero entry at ({0}, {1})")]
    NotTriangular(usize, usize),

    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("check failed: {check}: {detail}")]
    CheckFailed { check: String, detail: String },

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn budget(what: impl Into<String>, limit: impl TryInto<u64>) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            limit: limit.try_into().unwrap_or(u64::MAX),
        }
    }
}
