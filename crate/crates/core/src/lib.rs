//! Exact computations for toric interpolants of projective toric varieties.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`] holds the scalar-generic machinery: dense matrices, fraction-free
//!   elimination, Hermite/Smith normal forms, kernel lattices, and sparse
//!   bivariate polynomials and rational functions.
//! * [`toric`] validates lattice configurations and evaluates their monomial maps.
//! * [`osculation`] builds the interpolant matrices, transition matrices and
//!   Hasse-derivative jet matrices, and checks the interpolation property.
//! * [`binomials`] turns kernel lattices into binomial equations.
//! * [`polygon`] is exact planar lattice geometry, including canonical forms.
//! * [`invariants`] assembles the surface invariants (degrees, dual degrees).
//!
//! Everything in [`exact`] is generic over the scalar type through `num-traits`;
//! the aliases below fix the arbitrary-precision instantiation used by the
//! higher-level modules.

pub mod binomials;
pub mod error;
pub mod exact;
pub mod invariants;
pub mod osculation;
pub mod polygon;
pub mod toric;

pub use error::{Error, Result};
pub use exact::lattice::{LatticeBasis, LatticeIndex};
pub use exact::matrix::Matrix;
pub use exact::poly::BivariatePoly;
pub use exact::ratfn::RationalFunction;
pub use exact::scalar::{Field, IntegerRing, Ring};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational in lowest terms.
pub type Rat = num_rational::BigRational;
/// Dense integer matrix.
pub type IntMatrix = Matrix<Int>;
/// Dense rational matrix.
pub type RatMatrix = Matrix<Rat>;
/// Integer lattice basis.
pub type IntLattice = LatticeBasis<Int>;
/// Sparse bivariate polynomial over the rationals.
pub type Poly2 = BivariatePoly<Rat>;
/// Bivariate rational function over the rationals.
pub type RatFn2 = RationalFunction<Rat>;
