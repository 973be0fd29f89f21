use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field GF({p}^{k}) is larger than the supported 65536 elements")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("group order exceeds the materialization bound of {bound} elements")]
    BoundExceeded { bound: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("field is not a splitting field: {0}")]
    NotSplitting(String),
    #[error("theorem violation (artifact bug): {0}")]
    TheoremViolation(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Malformed(_) | Error::Json(_) | Error::Io(_) | Error::NonPrime(_) => 2,
            Error::BoundExceeded { .. } => 3,
            Error::TheoremViolation(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
