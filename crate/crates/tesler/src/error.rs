use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("hook-sum vector must be non-empty")]
    EmptyAlpha,

    #[error("matrix is not square: row {row} has {found} entries, expected {expected}")]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("nonzero entry below the diagonal at row {row}, column {col}")]
    NotUpperTriangular { row: usize, col: usize },

    #[error("row {row} has {found} entries, expected {expected}")]
    BadRowLength {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("hook sum {index} is {found}, declared value is {declared}")]
    HookSumMismatch {
        index: usize,
        found: i64,
        declared: i64,
    },

    #[error("hook-sum vectors differ: {left} vs {right}")]
    AlphaMismatch { left: String, right: String },

    #[error("matrix sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("net flow does not close: last coordinate is {found}, expected {expected}")]
    BadNetFlow { found: i64, expected: i64 },

    #[error("net flow coordinate {index} is negative ({value}); hook sums must be non-negative")]
    NegativeNetFlow { index: usize, value: i64 },

    #[error("enumeration ceiling of {limit} matrices exceeded")]
    CeilingExceeded { limit: u64 },

    #[error("poset with {size} elements exceeds the isomorphism-search limit of {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("could not parse hook-sum vector: {0}")]
    ParseAlpha(String),
}

pub type Result<T> = std::result::Result<T, Error>;
