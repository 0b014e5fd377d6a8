//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("unsupported dimension {0} (built-ins cover d = 2, 3, 4)")]
    UnsupportedDimension(usize),

    #[error("invalid form: {0}")]
    InvalidForm(String),

    #[error("form is not positive definite in both real embeddings")]
    NotPositiveDefinite,

    #[error("sum-of-squares decomposition does not match the form")]
    InvalidDecomposition,

    #[error("no enumeration step bounds variable {0}")]
    UnboundedVariable(String),

    #[error("enumeration would visit {required} points, above the cap of {cap}")]
    EnumerationCapExceeded { required: u128, cap: u64 },

    #[error("group closure exceeded the cap of {cap} elements")]
    GroupCapExceeded { cap: usize },

    #[error("pair ({a2}, {b3}) is not an admissible candidate")]
    InvalidPair { a2: i64, b3: i64 },

    #[error("reflection root must satisfy f(root) = 1, got {got}")]
    ReflectionRootNotUnit { got: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
