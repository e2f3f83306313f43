//! Exact-arithmetic kernel for finite-dimensional multi-bracket Lie-like
//! algebras and superalgebras.
//!
//! An algebra here is a vector space over an exact field (arbitrary-precision
//! rationals or a prime field) carrying one bilinear product per label of a
//! finite index set. Six structure kinds are supported: three ungraded and
//! their Z2-graded counterparts. The kernel verifies every defining identity
//! with counterexample witnesses, computes annihilator ideals and factor
//! algebras, classifies simplicity and module irreducibility by exhaustive
//! subspace enumeration over small prime fields, decides (non-)triviality of
//! a bracket family, and runs certified exhaustive censuses over small
//! candidate spaces.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod algebra;
pub mod axioms;
pub mod error;
pub mod field;
pub mod ideals;
pub mod instances;
pub mod io;
pub mod linear;
pub mod modules;
pub mod search;

pub use algebra::{BracketTensor, Element, EndoSets, Grading, Kind, LabelSet, MultiAlgebra, Parity};
pub use axioms::{verify, CheckResult, VerificationReport, VerifyOptions, Witness};
pub use error::Error;
pub use field::{FieldSpec, Scalar};
pub use linear::{Matrix, QuotientMap, Subspace};

/// Shorthand for the crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
