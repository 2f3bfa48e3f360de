//! Exact generalized ladder operators for classical orthogonal polynomials.
//!
//! A first-order operator `a(x) D + b(x)` is rewritten as `f1 D g2 + h` for an
//! arbitrary drift `h`, with `f1 g2 = a`. The crate builds these
//! factorizations exactly, generates polynomial families by iterating the
//! operators and by Rodrigues-type chains, and checks the resulting
//! identities against independent three-term recurrences.
//!
//! The algebra layer ([`Polynomial`], [`RationalFunction`]) is generic over
//! the scalar type; everything that relies on canonical forms is fixed to
//! exact [`Rational`] coefficients through the aliases below.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod families;
pub mod ladder;
pub mod rational;
pub mod weighted;


pub use algebra::{IntegrationResult, PartialFractions, Polynomial, RationalFunction, SimplePole};
pub use error::{Error, Result};
pub use ladder::{Factorization, Form, LadderOperator};

pub use rational::{Rational, Scalar};
pub use weighted::{PowerFactor, WeightedExpression, WeightedSum};

/// Exact polynomial.
pub type Poly = Polynomial<Rational>;
/// Exact rational function.
pub type RatFn = RationalFunction<Rational>;
/// Floating point polynomial, for numeric evaluation.
pub type PolyF64 = Polynomial<f64>;
