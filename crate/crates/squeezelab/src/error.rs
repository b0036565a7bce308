use thiserror::Error;

/// Errors produced by squeezelab operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spin quantum number {0}: must be a non-negative half-integer")]
    InvalidSpin(f64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian within tolerance {0:e}")]
    NotHermitian(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("meter variance degenerate for pulse {0}")]
    DegenerateMeter(usize),

    #[error("pulse {0} already consumed")]
    PulseConsumed(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
