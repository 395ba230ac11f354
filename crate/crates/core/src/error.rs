use thiserror::Error;

/// Errors raised by the library. Verification suites never return these for
/// a failed identity; those land in a [`crate::Report`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("box ({row},{col}) lies outside the diagram of {shape}")]
    OutsideShape { row: u32, col: u32, shape: String },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("singular linear system: {0}")]
    Singular(String),
    #[error("integrality violated: {0}")]
    Integrality(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("json: {0}")]
    Json(String),
    #[error("cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
