use thiserror::Error;

/// Errors raised by field construction, arithmetic, polynomial operations and
/// text parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {order} exceeds the configured bound {bound}")]
    FieldTooLarge { order: u64, bound: u64 },
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: u32 },
    #[error("modulus {0} is reducible")]
    ReducibleModulus(String),
    #[error("element {0} is not a primitive element")]
    NotPrimitive(String),
    #[error("value {value} is not an element of a field of order {order}")]
    NotAnElement { value: u64, order: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no discrete logarithm")]
    ZeroLog,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
