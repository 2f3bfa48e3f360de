//! Exact univariate algebra: polynomials, rational functions, partial
//! fractions and antiderivatives with simple rational poles.

mod partial;
mod polynomial;
mod ratfn;

pub use partial::{
    integrate_rational, partial_fractions, rational_roots, IntegrationResult, PartialFractions,
    SimplePole,
};
pub use polynomial::Polynomial;
pub use ratfn::RationalFunction;
