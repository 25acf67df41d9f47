use thiserror::Error;

/// Errors raised by oracles, constraint builders and algorithms.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("element {id} is outside the ground set of size {n}")]
    ElementOutOfRange { id: usize, n: usize },

    #[error("ground set is empty")]
    EmptyGroundSet,

    #[error("objective returned negative value {value} on set {set:?}")]
    NegativeValue { set: Vec<usize>, value: f64 },

    #[error("objective returned a non-finite value on set {set:?}")]
    NonFiniteValue { set: Vec<usize> },

    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("unknown group label {0:?}")]
    UnknownLabel(String),

    #[error("intersection of zero independence systems")]
    EmptyIntersection,

    #[error("vector {0} has zero norm")]
    ZeroVector(usize),

    #[error("vector {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("exhaustive check on {n} elements exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    #[error("unknown instance kind {0:?}")]
    UnknownKind(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
