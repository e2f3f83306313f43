//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("schema error: {0}")]
    SchemaError(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("not a prime: {0}")]
    NotPrime(u32),
    #[error("algebra is not graded")]
    NotGraded,
    #[error("kind mismatch: {0}")]
    KindMismatch(String),
    #[error("endomorphism sets are required for this kind")]
    MissingEndoSets,
    #[error("representation maps g are required for this kind")]
    MissingG,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("induced product is not well defined: {0}")]
    NotWellDefined(String),
    #[error("computed span violates its closure property: {0}")]
    InternalClosureFailure(String),
    #[error("bounds exceeded: {0}")]
    BoundsExceeded(String),
    #[error("base bracket is not admissible: {0}")]
    BaseNotAdmissible(String),
    #[error("mismatched operands: {0}")]
    Mismatch(String),
    #[error("io error: {0}")]
    Io(String),
}
