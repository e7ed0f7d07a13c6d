use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("Pfaffian of odd order {0}")]
    OddOrder(usize),
    #[error("negative power of a non-monomial")]
    NotAUnit,
    #[error("substituting 0 into x{0}, which has a negative exponent")]
    ZeroSubstitution(usize),
    #[error("half-integer power of x{0} is not representable")]
    HalfPower(usize),
    #[error("{0} is not a Laurent polynomial")]
    NotLaurent(String),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a count: {0}")]
    NotACount(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
