//! Exact computations with valuated Δ-matroids.
//!
//! A tropical Wick vector assigns a value in `Q ∪ {∞}` to every subset of
//! `[n]`; its support is an even Δ-matroid. This crate checks the tropical
//! Wick and Plücker relations, builds circuits, cocircuits and cocycle spaces,
//! certifies regular subdivisions of Δ-matroid polytopes, realizes Wick
//! vectors from isotropic row spaces over a Puiseux scalar type, and decides
//! whether a tropical linear space on `J = {1..n, 1*..n*}` is isotropical.
//!
//! All arithmetic is exact. `∞` is a tagged value, never a sentinel number.

pub mod delta_matroid;
pub mod format;
pub mod linalg;
pub mod linear_spaces;
pub mod lp;
pub mod realization;
pub mod sets;
pub mod subdivision;
pub mod trop;
pub mod wick;

pub use delta_matroid::EvenDeltaMatroid;
pub use linear_spaces::{GroundSet, PluckerCircuit, TropicalPluckerVector};
pub use realization::{PuiseuxScalar, ScalarMatrix};
pub use sets::{SignedIndex, SignedSet, Subset};
pub use subdivision::SubdivisionCell;
pub use trop::{Rational, SignedVector, TropicalValue};
pub use wick::{CircuitKind, TropicalWickVector, WickCircuit};

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{scalars} coefficients supplied for {vectors} vectors")]
    LengthMismatch { scalars: usize, vectors: usize },
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("vector has empty support")]
    EmptySupport,
    #[error("{0} is not admissible")]
    NotAdmissible(String),
    #[error("{what}: size {n} exceeds the supported maximum {max}")]
    ScaleGuard { what: &'static str, n: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    InvalidInput(String),
    #[error("vector is not a cocycle of the Wick vector")]
    NotACocycle,
    #[error("matrix rank is below {0}")]
    RankDeficient(usize),
    #[error("row space is not isotropic")]
    NotIsotropic,
    #[error("reduced chart block is not skew-symmetric")]
    NotSkew,
    #[error("not implemented: {0}")]
    Unimplemented(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn scale_guard(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::ScaleGuard { what, n, max })
    } else {
        Ok(())
    }
}
