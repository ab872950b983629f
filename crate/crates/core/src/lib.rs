//! Exact equivariant classes of orbit closures of plane curves and of point
//! configurations on the projective line.
//!
//! Layers, bottom up:
//!
//! * [`poly`]: sparse multivariate polynomials with exact coefficients;
//! * [`chern`]: formal vector bundles and their Chern classes;
//! * [`tower`]: Chow rings of iterated projective bundles and pushforward;
//! * [`localization`]: torus localization and Grassmannian Chern numbers;
//! * [`orbits`]: the orbit-class computations themselves;
//! * [`verify`]: consistency checks between independent computations.

pub mod chern;
pub mod error;
pub mod localization;
pub mod orbits;
pub mod poly;
pub mod tower;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Coeff, Monomial, SparsePoly, SymbolTable, Symbols};

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

/// Polynomial over [`Rational`], the value type of every class in the crate.
pub type Poly = SparsePoly<Rational>;
