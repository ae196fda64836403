//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,

    #[error("non-integral series coefficient at degree {degree}")]
    NonIntegralCoefficient { degree: usize },

    #[error("precision mismatch: {left} vs {right}")]
    PrecisionMismatch { left: usize, right: usize },

    #[error("degree sequence entries must be positive")]
    ZeroDegree,

    #[error("{0} is not prime (need a prime 2 <= p < 2^31)")]
    NotPrime(u64),

    #[error("generator spec does not fit algebra kind: {0}")]
    SpecKindMismatch(String),

    #[error("degenerate random draw persisted after {retries} retries")]
    DegenerateDraw { retries: u32 },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("engine invariant violated: {0}")]
    EngineInvariant(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
