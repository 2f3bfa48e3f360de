use num_traits::One;

use super::{generate_ladder, FamilyKind, FamilySpec};
use crate::error::Result;
use crate::ladder::LadderOperator;
use crate::rational::{factorial, int, rat, Rational};
use crate::weighted::WeightedExpression as W;
use crate::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Scalar `c` with `(x - D)^n e^{-x²/2} = c H_n e^{-x²/2}`, measured with
/// `scalar_equivalent` against the Hermite recurrence for `n <= 10`.
pub const OSCILLATOR_HERMITE_SCALAR: i64 = 1;

/// `H_{2n}` (even) or `H_{2n+1}` (odd) from the ladder-generated Laguerre
/// polynomial with `α = ∓1/2`.
pub fn hermite_from_laguerre(n: u32, parity: Parity) -> Result<Poly> {
    let sign = if n.is_multiple_of(2) { int(1) } else { int(-1) };
    let nfact = Rational::from_integer(factorial(n));
    let (alpha, power, extra) = match parity {
        Parity::Even => (rat(-1, 2), 2 * n, Poly::one()),
        Parity::Odd => (rat(1, 2), 2 * n + 1, Poly::x()),
    };
    let lag = generate_ladder(&FamilySpec::new(FamilyKind::Laguerre { alpha }, n)?)?;
    let scale = sign * int(2).pow(power as i32) * nfact;
    Ok((&extra * &lag.compose(&Poly::monomial(int(1), 2))).scale(&scale))
}

/// Applies `a⁺ = x - D` to the ground state `e^{-x²/2}` `n` times and
/// strips the Gaussian, divided by [`OSCILLATOR_HERMITE_SCALAR`].
pub fn hermite_via_oscillator(n: u32) -> Result<Poly> {
    let ground = W::exponential(Poly::monomial(rat(-1, 2), 2));
    let up = LadderOperator::raising(Poly::constant(int(-1)), Poly::x())?;
    let mut psi = ground.clone();
    for _ in 0..n {
        psi = up.apply(&psi)?;
    }
    let poly = psi.div(&ground)?.as_polynomial()?;
    Ok(poly.scale(&(Rational::one() / int(OSCILLATOR_HERMITE_SCALAR))))
}
