use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {n} is below the minimum {min} for this operation")]
    DegreeTooSmall { n: usize, min: usize },

    #[error("degree {n} is above the maximum {max} for this operation")]
    DegreeTooLarge { n: usize, max: usize },

    #[error("point {i} is out of range for degree {n}")]
    PointOutOfRange { i: usize, n: usize },

    #[error("rank {rank} is out of range for degree {n}")]
    RankOutOfRange { rank: u64, n: usize },

    #[error("not a valid one-line permutation of 1..={n}: {reason}")]
    InvalidOneLine { n: usize, reason: String },

    #[error("not a valid partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("not a valid standard tableau: {reason}")]
    InvalidTableau { reason: String },

    #[error("distribution step mode mismatch: expected {expected}, got {got}")]
    ModeMismatch { expected: &'static str, got: &'static str },

    #[error("action table cache is invalid: {reason}")]
    BadCache { reason: String },

    #[error("unsupported parameters: {reason}")]
    Unsupported { reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
