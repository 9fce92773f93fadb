use alloc::string::String;

/// Errors raised by the algebra, combinatorics and matrix layers.
///
/// Point indices carried by variants are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("point {index} duplicates point {duplicate_of}")]
    DuplicatePoint { index: usize, duplicate_of: usize },
    #[error("term set is not an order ideal")]
    NotOrderIdeal,
    #[error("bar code is not admissible")]
    NotAdmissible,
    #[error("invalid bar position")]
    InvalidPosition,
    #[error("no sibling label meets the candidate set")]
    NoAntecedent,
    #[error("a Lagrange factor needs two distinct points")]
    SamePoint,
    #[error("zero pivot while bordering the inverse of the evaluation matrix")]
    SingularPivot,
    #[error("inconsistent state: {0}")]
    InconsistentState(String),
}

pub type Result<T> = core::result::Result<T, Error>;
