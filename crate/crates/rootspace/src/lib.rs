//! Exact root-space decompositions of the compact classical Lie algebras.
//!
//! Everything here runs over exact arithmetic: scalars are quaternions with
//! arbitrary-precision rational coefficients, and every decomposition,
//! bracket identity, and root-system statement is an exact equality, never
//! an approximation. The pipeline is
//!
//! 1. [`algebra`]: build su(n), so(2n), so(2n+1), or sp(n) with its named
//!    basis (torus elements first, then the basis pairs spanning each
//!    root space).
//! 2. [`decompose`]: pick a strongly regular torus element X, split the
//!    orthogonal complement of the torus into the 2-dimensional eigenspaces
//!    of ad_X squared, and extract an oriented basis (E, F) plus the dual
//!    root [E,F]/|E|^2 for each.
//! 3. [`rootsystem`]: the dual roots form a root system in the torus;
//!    verify the axioms, enumerate the Weyl group, and find a base.
//! 4. [`dynkin`]: build the Dynkin diagram of a base, test diagram
//!    isomorphism, and classify against the A/B/C/D/E/F/G templates.
//! 5. [`complexify`]: re-derive the bracket relations between root spaces
//!    through the complexified algebra and check both routes agree.

pub mod algebra;
pub mod complexify;
pub mod decompose;
pub mod dynkin;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod rootsystem;
pub mod scalar;

/// Exact rational scalar used throughout: arbitrary-precision, always reduced.
pub type Rational = num_rational::BigRational;

/// The universal matrix entry: a quaternion with rational coefficients.
pub type Quat = scalar::Quaternion<Rational>;

/// Vector of exact rationals (kernel vectors, root coordinates, functionals).
pub type RationalVector = Vec<Rational>;

pub use error::Error;

/// Convenience constructor: the rational p/q.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Convenience constructor: the rational n/1.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
