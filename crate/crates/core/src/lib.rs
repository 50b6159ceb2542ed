//! Exact computations with higher-order Kähler modules.
//!
//! The crate builds finite presentations of the modules of `q`-th order
//! Kähler differentials `Ω^(q)(R/k)`, jet modules `J_q(M)` and symmetric
//! squares over affine algebras `R = ℚ[x_1..x_s]/I`, the canonical maps
//! between them, and decides exactness, splitting, ranks and projective
//! dimensions with a built-in Gröbner basis and syzygy engine.
//!
//! The algebra core ([`poly`], [`groebner`]) is generic over the coefficient
//! field; everything above it works over [`Rational`].

pub mod diffmod;
pub mod error;
pub mod groebner;
pub mod label;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod resolution;
pub mod ring;
pub mod scalar;
pub mod structured;
pub mod suite;
pub mod symderiv;

pub use error::{Error, ParseError, PolyError, Result};
pub use monomial::{Monomial, MonomialOrder};
pub use label::GeneratorLabel;
pub use poly::{ArithOp, PolyRing};
pub use presentation::{ModuleMap, Presentation};
pub use ring::RingSpec;
pub use scalar::Field;

/// Arbitrary-precision rational numbers, the coefficient field.
pub type Rational = num_rational::BigRational;

/// Polynomials with rational coefficients.
pub type Poly = poly::Polynomial<Rational>;

/// Elements of a free module over the rational polynomial ring.
pub type Vector = groebner::FreeElement<Rational>;

/// Matrices with rational polynomial entries.
pub type Matrix = groebner::Matrix<Rational>;
