//! Exact-arithmetic cohomological decompositions for invariant
//! generalized-complex, complex, and symplectic structures on nilpotent
//! Lie algebras.
//!
//! Everything is computed over the field Q(i) with arbitrary-precision
//! rationals; all verdicts are exact dimension counts and subspace
//! equalities, never floating point.

pub mod cohomology;
pub mod error;
pub mod exterior;
pub mod gcs;
pub mod grading;
pub mod lie;
pub mod linalg;
pub mod manifest;
pub mod parse;
pub mod scalar;

pub use error::Error;
pub use gcs::GenStructure;
pub use grading::{DiffSplit, Grading};
pub use exterior::{mukai, Bivector, Form, GVector};
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Quotient, Subspace};
pub use scalar::{CirclePoint, HalfTangent, Rational, Scalar};
