//! The remainder `F[h]` of the generalized Legendre Rodrigues formula
//!
//! `n! P_n = (x²-1)^{1-n/2} e^k D[(x²-1)^{3/2} D]^{n-1} (x²-1)^{1/2} / e + F[h]`,
//! with `e = exp ∫ h/(x²-1)`, and measurements of its structure.

use std::fmt;

use num_traits::One;

use super::{generate_ladder, make_operator, Direction, FamilyKind, FamilySpec};
use crate::error::{Error, Result};
use crate::ladder::{apply_chain, factorize, ChainStep};
use crate::rational::{factorial, int, rat, Rational};
use crate::weighted::{WeightedExpression as W, WeightedSum};
use crate::{Poly, RatFn};

/// Which power of `e` multiplies the chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyFormReading {
    /// `e^{n-1}`, as displayed.
    Printed,
    /// `e^1`, which is what iterating `R_k = f1 D g2 + h` with `k = 1..n`
    /// produces once the inner `g2(k) f1(k-1) = (x²-1)^{3/2}` telescope.
    Iterated,
}

/// `e = exp ∫ h/(x²-1)`, recovered from the factorization of `R_n` as
/// `(x²-1)^{n/2} / g2`.
fn drift_weight(n: u32, h: &Poly) -> Result<W> {
    let op = make_operator(&FamilySpec::new(FamilyKind::Legendre, n)?, Direction::Raising)?;
    let x2m1 = Poly::from_coeffs(vec![int(-1), int(0), int(1)]);
    let t = RatFn::new(h.clone(), x2m1)?;
    let fac = factorize(&op, &t)?;
    W::x2_minus_1_pow(rat(n as i64, 2)).div(&fac.g2)
}

fn chain_term(n: u32, e: &W, e_power: u32) -> Result<W> {
    let e_k = (0..e_power).fold(W::one(), |acc, _| acc.mul(e));
    let mut steps = vec![
        ChainStep::Multiply(W::x2_minus_1_pow(int(1) - rat(n as i64, 2)).mul(&e_k)),
        ChainStep::Differentiate,
    ];
    for _ in 1..n {
        steps.push(ChainStep::Multiply(W::x2_minus_1_pow(rat(3, 2))));
        steps.push(ChainStep::Differentiate);
    }
    let seed = W::x2_minus_1_pow(rat(1, 2)).div(e)?;
    Ok(apply_chain(&steps, &seed))
}

/// `F[h] = n! P_n - chain`, for `n >= 2` and polynomial `h`.
///
/// The printed reading leaves a factor `e^{n-2}` on the chain, so the
/// result is in general a sum of differently weighted terms.
pub fn remainder_f(n: u32, h: &Poly, reading: FamilyFormReading) -> Result<WeightedSum> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("remainder needs n >= 2, got {n}")));
    }
    let p = generate_ladder(&FamilySpec::new(FamilyKind::Legendre, n)?)?;
    let lhs = W::from_poly(p.scale(&Rational::from_integer(factorial(n))));
    let e = drift_weight(n, h)?;
    let k = match reading {
        FamilyFormReading::Printed => n - 1,
        FamilyFormReading::Iterated => 1,
    };
    let chain = chain_term(n, &e, k)?;
    Ok(WeightedSum::from(lhs).sub(&WeightedSum::from(chain)))
}

fn iterated_polynomial(n: u32, h: &Poly) -> Result<Poly> {
    let f = remainder_f(n, h, FamilyFormReading::Iterated)?;
    f.as_single()
        .ok_or_else(|| Error::NotPolynomial(format!("F[{h}] = {f}")))?
        .as_polynomial()
}

/// Coefficients `c_k` of `F[ε h] = Σ c_k ε^k` under the iterated reading,
/// by exact interpolation at `ε = 0..=n+1` and a check at `ε = n+2`.
pub fn epsilon_expansion(n: u32, h: &Poly) -> Result<Vec<Poly>> {
    let nodes: Vec<i64> = (0..=n as i64 + 1).collect();
    let values = nodes
        .iter()
        .map(|&eps| iterated_polynomial(n, &h.scale(&int(eps))))
        .collect::<Result<Vec<_>>>()?;
    let mut coeffs = vec![Poly::zero(); nodes.len()];
    for (k, value) in values.iter().enumerate() {
        let mut basis = Poly::one();
        let mut denom = Rational::one();
        for (j, &node) in nodes.iter().enumerate() {
            if j != k {
                basis = &basis * &Poly::linear(int(node));
                denom *= int(nodes[k] - node);
            }
        }
        let basis = basis.scale(&(Rational::one() / denom));
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = &*c + &value.scale(&basis.coeff(i));
        }
    }

    let probe = int(n as i64 + 2);
    let predicted = coeffs
        .iter()
        .rev()
        .fold(Poly::zero(), |acc, c| &acc.scale(&probe) + c);
    let actual = iterated_polynomial(n, &h.scale(&probe))?;
    if predicted != actual {
        return Err(Error::InvalidParameters(format!(
            "F[εh] is not a polynomial of degree <= {} in ε for n={n}, h={h}",
            n + 1
        )));
    }
    while coeffs.last().is_some_and(Poly::is_zero) {
        coeffs.pop();
    }
    Ok(coeffs)
}

/// `c_j` with `(part of F linear in h) = Σ c_j h^{(j)}`, fitted on the
/// monomials `h = x^k`, `k = 0..=n+1`.
pub fn linear_part_operator(n: u32) -> Result<Vec<Poly>> {
    let mut ops: Vec<Poly> = Vec::new();
    for k in 0..=n + 1 {
        let linear = epsilon_expansion(n, &Poly::monomial(int(1), k as usize))?
            .get(1)
            .cloned()
            .unwrap_or_else(Poly::zero);
        // L[x^k] = Σ_j c_j k!/(k-j)! x^{k-j}
        let known = ops.iter().enumerate().fold(Poly::zero(), |acc, (j, c)| {
            let falling = Rational::from_integer(factorial(k) / factorial(k - j as u32));
            &acc + &(c * &Poly::monomial(falling, k as usize - j))
        });
        let kfact = Rational::from_integer(factorial(k));
        ops.push((&linear - &known).scale(&(Rational::one() / kfact)));
    }
    while ops.last().is_some_and(Poly::is_zero) {
        ops.pop();
    }
    Ok(ops)
}

/// Highest power of `h` in `F[h]` for one `h`, against the stated
/// `(-1)^n (n-1)! x h^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerTermFinding {
    pub n: u32,
    pub h: Poly,
    /// `F[0] = 0` under both readings.
    pub vanishes_at_zero: bool,
    /// Whether the printed reading yields a polynomial for this `h`.
    pub printed_is_polynomial: bool,
    pub top_power: Option<usize>,
    pub top_coefficient: Poly,
    pub claimed: Poly,
    pub holds: bool,
}

/// Highest derivative order in the part of `F` linear in `h`, against the
/// stated `x (x²-1)^{n-2} h^{(n-2)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeTermFinding {
    pub n: u32,
    pub top_order: Option<usize>,
    pub top_coefficient: Poly,
    pub claimed: Poly,
    pub holds: bool,
}

fn sign(n: u32) -> Rational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

pub fn power_term_finding(n: u32, h: &Poly) -> Result<PowerTermFinding> {
    let zero_iter = remainder_f(n, &Poly::zero(), FamilyFormReading::Iterated)?.is_zero();
    let zero_printed = remainder_f(n, &Poly::zero(), FamilyFormReading::Printed)?.is_zero();
    let printed_is_polynomial = remainder_f(n, h, FamilyFormReading::Printed)?
        .as_single()
        .is_some_and(|w| w.as_polynomial().is_ok());

    let coeffs = epsilon_expansion(n, h)?;
    let top_power = coeffs.len().checked_sub(1);
    let top_coefficient = coeffs.last().cloned().unwrap_or_else(Poly::zero);
    let scale = sign(n) * Rational::from_integer(factorial(n - 1));
    let claimed = &Poly::monomial(scale, 1) * &h.pow(n - 1);
    let holds = top_power == Some(n as usize - 1) && top_coefficient == claimed;
    Ok(PowerTermFinding {
        n,
        h: h.clone(),
        vanishes_at_zero: zero_iter && zero_printed,
        printed_is_polynomial,
        top_power,
        top_coefficient,
        claimed,
        holds,
    })
}

pub fn derivative_term_finding(n: u32) -> Result<DerivativeTermFinding> {
    let ops = linear_part_operator(n)?;
    let top_order = ops.len().checked_sub(1);
    let top_coefficient = ops.last().cloned().unwrap_or_else(Poly::zero);
    let x2m1 = Poly::from_coeffs(vec![int(-1), int(0), int(1)]);
    let claimed = &Poly::x() * &x2m1.pow(n - 2);
    let holds = top_order == Some(n as usize - 2) && top_coefficient == claimed;
    Ok(DerivativeTermFinding {
        n,
        top_order,
        top_coefficient,
        claimed,
        holds,
    })
}

impl fmt::Display for PowerTermFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.top_power.map_or("none".to_string(), |p| p.to_string());
        write!(
            f,
            "highest power of h = {top} with coefficient {}; stated h^{} with {}: {}",
            self.top_coefficient,
            self.n - 1,
            self.claimed,
            if self.holds { "confirmed" } else { "not confirmed" }
        )?;
        if !self.printed_is_polynomial {
            f.write_str("; e^(n-1) reading leaves e(x) in F")?;
        }
        Ok(())
    }
}

impl fmt::Display for DerivativeTermFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.top_order.map_or("none".to_string(), |p| p.to_string());
        write!(
            f,
            "highest derivative of h = order {top} with coefficient {}; stated order {} with {}: {}",
            self.top_coefficient,
            self.n - 2,
            self.claimed,
            if self.holds { "confirmed" } else { "not confirmed" }
        )
    }
}
