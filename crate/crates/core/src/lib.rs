//! Exact-arithmetic engine for finite-dimensional real Lie algebras given by
//! rational structure constants.
//!
//! The crate verifies structural claims about solvable real Lie algebras:
//! Jacobi validity, Chevalley-Eilenberg cohomology (algebraic rigidity is
//! `dim H^2(g, g) = 0`), derivation algebras, exterior tori with real
//! non-conjugacy certificates, nilradicals, semidirect constructions, and
//! isomorphism-invariant fingerprints separating real forms.
//!
//! All mathematics is generic over the [`Scalar`] type; the canonical
//! instantiation is arbitrary-precision rationals, for which every result is
//! a proof rather than an estimate (ranks over the rationals equal ranks over
//! the reals and the complexes).

pub mod catalog;
pub mod cohomology;
pub mod derivations;
pub mod dsl;
pub mod error;
pub mod lie;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod structure;

pub use error::{LieError, TorusDefect};
pub use lie::{CompleteSolvability, StructureConstants, Subspace};
pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::Scalar;

/// Exact rational scalar: arbitrary-precision, always reduced, positive
/// denominator. The engine's default field.
pub type Rational = num_rational::BigRational;

/// Matrix over [`Rational`].
pub type RatMatrix = Matrix<Rational>;

/// Polynomial over [`Rational`].
pub type RatPoly = Poly<Rational>;

/// Lie algebra over [`Rational`] structure constants.
pub type Algebra = StructureConstants<Rational>;

/// Subspace of a rational coordinate space.
pub type RatSubspace = Subspace<Rational>;
