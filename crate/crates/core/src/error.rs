use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("ring mismatch: operands live in rings with different variable counts")]
    RingMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("validation failed: {0}")]
    Validation(String),

    /// The computation needs eigenvalues outside the rationals.
    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    /// The Buchberger engine hit its configured pair budget.
    #[error("pair cap exceeded: more than {cap} critical pairs generated")]
    PairCapExceeded { cap: usize },

    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    #[error("insufficient sample: {0}")]
    InsufficientSample(String),

    #[error("inconsistent data: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
