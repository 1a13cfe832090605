use thiserror::Error;

/// Errors raised by the algebra, curve and certificate layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1")]
    ZeroDegree,

    #[error("field order {p}^{l} does not fit in 64 bits")]
    FieldTooLarge { p: u64, l: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("operands live in different fields")]
    FieldMismatch,

    #[error("value {0} is not an element of the field")]
    NotAnElement(u64),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("point is not on the curve")]
    OffCurve,

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("enumeration of size {size} exceeds the cap {cap} (set ISOTWIST_MAX_Q to raise it)")]
    TooLarge { size: u64, cap: u64 },

    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
