//! Exact computational models for the symplectic reduction of
//! `W = (V + V*)^m` by `GL(V)`, `O(V)` and `Sp(V)`.
//!
//! * [`partitions`]: nilpotent orbits in `gl_m`, `sp_2m`, `so_2m` indexed by partitions.
//! * [`momentmap`]: points of `W`, the moment maps, zero-fiber components and their sampling.
//! * [`repthy`]: characters, branching and invariant dimensions (the Hilbert functions `h0`).
//! * [`geometry`]: quotient descriptions, Springer resolutions, bundle models and verdicts.
//!
//! Linear algebra is generic over [`Scalar`]; the aliases below fix the exact
//! rational instantiation used throughout.

pub mod geometry;
pub mod linalg;
pub mod momentmap;
pub mod partitions;
pub mod repthy;
pub mod rng;
pub mod scalar;

pub use linalg::{LinalgError, Matrix};
pub use scalar::{ExactScalar, Scalar};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Exact rational matrix; every rank in this crate is computed on these.
pub type ExactMatrix = Matrix<Rational>;
/// Small-rational matrix, for callers that know their entries stay bounded.
pub type SmallRationalMatrix = Matrix<num_rational::Rational64>;
/// Floating-point matrix for numeric cross-checks.
pub type FloatMatrix = Matrix<f64>;

pub use geometry::{BaseVariety, BundleModel, QuotientDescription, Verdict, VerdictCase};
pub use momentmap::{ComponentDescriptor, ComponentIndex, MatrixPair, SpPoint};
pub use partitions::{GroupKind, GroupType, OrbitLabel, OrbitTag, Partition};
pub use repthy::{DominantWeight, LaurentPolynomial, MonomialXY};
