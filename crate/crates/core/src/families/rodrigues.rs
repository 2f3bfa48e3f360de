//! Rodrigues formulas and the operator chains obtained by iterating the
//! factorized raising operators with zero drift.

use num_traits::One;

use super::{FamilyKind, FamilySpec};
use crate::error::{Error, Result};
use crate::ladder::{apply_chain, ChainStep};
use crate::rational::{double_factorial, factorial, int, pochhammer, rat, Rational};
use crate::weighted::WeightedExpression as W;
use crate::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainVariant {
    /// The full iteration with `h = 0`, e.g. `D[(x²-1)^{3/2} D]^{n-1}`.
    H0Chain,
    /// One raising step applied to the standard Rodrigues formula.
    OneStepSplit,
}

fn x2m1(e: Rational) -> W {
    W::x2_minus_1_pow(e)
}

fn omx2(e: Rational) -> W {
    W::one_minus_x2_pow(e)
}

fn exp_sq(c: i64) -> W {
    W::exponential(Poly::monomial(int(c), 2))
}

fn exp_lin(c: i64) -> W {
    W::exponential(Poly::monomial(int(c), 1))
}

fn inv_factorial(n: u32) -> Rational {
    Rational::one() / Rational::from_integer(factorial(n))
}

fn double_fact(k: i64) -> Rational {
    Rational::from_integer(double_factorial(k))
}

fn sign(n: u32) -> Rational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn pow2(n: u32) -> Rational {
    int(2).pow(n as i32)
}

/// Chain written left to right: a scalar, then the remaining steps.
struct Chain(Vec<ChainStep>);

impl Chain {
    fn new(c: Rational) -> Self {
        Self(vec![ChainStep::scale(c)])
    }

    fn mul(mut self, w: W) -> Self {
        self.0.push(ChainStep::Multiply(w));
        self
    }

    fn d(mut self, times: u32) -> Self {
        self.0.extend((0..times).map(|_| ChainStep::Differentiate));
        self
    }

    /// `[w D]^times`.
    fn weighted_d(mut self, w: &W, times: u32) -> Self {
        for _ in 0..times {
            self.0.push(ChainStep::Multiply(w.clone()));
            self.0.push(ChainStep::Differentiate);
        }
        self
    }

    fn run(self, seed: W) -> Result<Poly> {
        apply_chain(&self.0, &seed).as_polynomial()
    }
}

fn unsupported(spec: &FamilySpec, what: &str) -> Error {
    Error::InvalidParameters(format!("{} has no {what}", spec.kind.name()))
}

/// Evaluates the standard n-fold derivative formula and extracts the
/// polynomial once the weight cancels.
pub fn rodrigues_standard(spec: &FamilySpec) -> Result<Poly> {
    let n = spec.n;
    let nq = int(n as i64);
    let half = rat(1, 2);
    match &spec.kind {
        FamilyKind::Legendre => {
            let c = inv_factorial(n) / pow2(n);
            Chain::new(c).d(n).run(x2m1(nq))
        }
        FamilyKind::Gegenbauer { lambda } => {
            let c = sign(n) * pow2(n) * inv_factorial(n) * pochhammer(lambda, n)
                / pochhammer(&(&nq + lambda * int(2)), n);
            Chain::new(c)
                .mul(omx2(&half - lambda))
                .d(n)
                .run(omx2(&nq + lambda - &half))
        }
        FamilyKind::ChebyshevU => {
            let c = sign(n) * (&nq + int(1)) / double_fact(2 * n as i64 + 1);
            Chain::new(c).mul(omx2(-half.clone())).d(n).run(omx2(&nq + &half))
        }
        FamilyKind::ChebyshevT => {
            let c = sign(n) / double_fact(2 * n as i64 - 1);
            Chain::new(c).mul(omx2(half.clone())).d(n).run(omx2(&nq - &half))
        }
        FamilyKind::Laguerre { alpha } => Chain::new(inv_factorial(n))
            .mul(exp_lin(1).mul(&W::x_pow(-alpha.clone())))
            .d(n)
            .run(exp_lin(-1).mul(&W::x_pow(&nq + alpha))),
        FamilyKind::Hermite => Chain::new(sign(n)).mul(exp_sq(1)).d(n).run(exp_sq(-1)),
        _ => Err(unsupported(spec, "standard Rodrigues formula")),
    }
}

/// Smallest index a chain variant is written for, or `None` when the
/// family has no such chain.
pub fn chain_min_index(kind: &FamilyKind, variant: ChainVariant) -> Option<u32> {
    use ChainVariant::*;
    match (kind, variant) {
        (FamilyKind::ChebyshevT, _) => Some(2),
        (FamilyKind::Legendre | FamilyKind::ChebyshevU | FamilyKind::Gegenbauer { .. }, _) => Some(1),
        (FamilyKind::Laguerre { .. } | FamilyKind::LaguerreRadial { .. }, H0Chain) => Some(1),
        (FamilyKind::Hermite, H0Chain) => Some(2),
        _ => None,
    }
}

/// Evaluates an operator chain and extracts the polynomial (in `r` for the
/// radial variants).
///
/// For Hermite the h0 chain is the radial form of degree `n`, split by
/// parity. The even form uses the prefactor `r^{-2k+2}` for `H_{2k}`;
/// see [`hermite_radial_printed_even`] for the variant with `r^{-2k}`.
pub fn rodrigues_chain(spec: &FamilySpec, variant: ChainVariant) -> Result<Poly> {
    let n = spec.n;
    match chain_min_index(&spec.kind, variant) {
        None => return Err(unsupported(spec, "Rodrigues chain of this variant")),
        Some(min) if n < min => {
            return Err(Error::InvalidParameters(format!(
                "{} chain needs n >= {min}, got {n}",
                spec.kind.name()
            )))
        }
        Some(_) => {}
    }
    let nq = int(n as i64);
    let half = rat(1, 2);
    let three_halves = rat(3, 2);
    match (&spec.kind, variant) {
        (FamilyKind::Legendre, ChainVariant::H0Chain) => Chain::new(inv_factorial(n))
            .mul(x2m1(int(1) - &nq / int(2)))
            .d(1)
            .weighted_d(&x2m1(three_halves), n - 1)
            .run(x2m1(half)),
        (FamilyKind::Legendre, ChainVariant::OneStepSplit) => Chain::new(inv_factorial(n) / pow2(n - 1))
            .mul(x2m1(int(1) - &nq / int(2)))
            .d(1)
            .mul(x2m1(&nq / int(2)))
            .d(n - 1)
            .run(x2m1(&nq - int(1))),
        (FamilyKind::ChebyshevU, ChainVariant::H0Chain) => Chain::new(inv_factorial(n))
            .mul(x2m1((int(1) - &nq) / int(2)))
            .d(1)
            .weighted_d(&x2m1(three_halves), n - 1)
            .run(x2m1(int(1))),
        (FamilyKind::ChebyshevU, ChainVariant::OneStepSplit) => {
            Chain::new(sign(n) / double_fact(2 * n as i64 - 1))
                .mul(omx2((int(1) - &nq) / int(2)))
                .d(1)
                .mul(omx2(&nq / int(2)))
                .d(n - 1)
                .run(omx2(&nq - &half))
        }
        (FamilyKind::ChebyshevT, ChainVariant::H0Chain) => Chain::new(sign(n - 1) * inv_factorial(n - 1))
            .mul(omx2((int(3) - &nq) / int(2)))
            .d(1)
            .weighted_d(&omx2(three_halves), n - 2)
            .run(W::from_poly(Poly::x()).mul(&omx2(half))),
        (FamilyKind::ChebyshevT, ChainVariant::OneStepSplit) => {
            let c = sign(n) / (double_fact(2 * n as i64 - 3) * (&nq - int(1)));
            Chain::new(c)
                .mul(omx2((int(3) - &nq) / int(2)))
                .d(1)
                .mul(omx2(&nq / int(2)))
                .d(n - 1)
                .run(omx2(&nq - three_halves))
        }
        (FamilyKind::Gegenbauer { lambda }, ChainVariant::H0Chain) => Chain::new(sign(n) * inv_factorial(n))
            .mul(omx2((int(3) - &nq) / int(2) - lambda))
            .d(1)
            .weighted_d(&omx2(three_halves), n - 1)
            .run(omx2(lambda.clone())),
        (FamilyKind::Gegenbauer { lambda }, ChainVariant::OneStepSplit) => {
            let c = -sign(n - 1) * pow2(n - 1) * inv_factorial(n) * pochhammer(lambda, n - 1)
                / pochhammer(&(&nq + lambda * int(2) - int(1)), n - 1);
            Chain::new(c)
                .mul(omx2((int(3) - &nq) / int(2) - lambda))
                .d(1)
                .mul(omx2(&nq / int(2)))
                .d(n - 1)
                .run(omx2(&nq + lambda - three_halves))
        }
        (FamilyKind::Laguerre { alpha }, _) => Chain::new(inv_factorial(n))
            .mul(W::x_pow(int(1) - alpha - &nq).mul(&exp_lin(1)))
            .d(1)
            .weighted_d(&W::x_pow(int(2)), n - 1)
            .run(W::x_pow(alpha + int(1)).mul(&exp_lin(-1))),
        (FamilyKind::LaguerreRadial { alpha }, _) => Chain::new(inv_factorial(n) / pow2(n))
            .mul(W::x_pow(int(1) - (&nq + alpha) * int(2)).mul(&exp_sq(1)))
            .d(1)
            .weighted_d(&W::x_pow(int(3)), n - 1)
            .run(exp_sq(-1).mul(&W::x_pow((alpha + int(1)) * int(2)))),
        (FamilyKind::Hermite, _) => {
            let k = n / 2;
            let kq = int(k as i64);
            let (c, prefactor, seed) = if n.is_multiple_of(2) {
                (sign(k) * pow2(k), int(2) - &kq * int(2), int(1))
            } else {
                (sign(k) * pow2(k + 1), int(1) - &kq * int(2), int(3))
            };
            Chain::new(c)
                .mul(W::x_pow(prefactor).mul(&exp_sq(1)))
                .d(1)
                .weighted_d(&W::x_pow(int(3)), k - 1)
                .run(exp_sq(-1).mul(&W::x_pow(seed)))
        }
        _ => unreachable!("filtered by chain_min_index"),
    }
}

/// The even radial Hermite chain with the prefactor `r^{-2n}` as printed,
/// for `n >= 1`. It equals `r^{-2} H_{2n}(r)`, so it is not a polynomial.
pub fn hermite_radial_printed_even(n: u32) -> Result<W> {
    if n == 0 {
        return Err(Error::InvalidParameters("radial chain needs n >= 1".into()));
    }
    let nq = int(n as i64);
    let chain = Chain::new(sign(n) * pow2(n))
        .mul(W::x_pow(-nq * int(2)).mul(&exp_sq(1)))
        .d(1)
        .weighted_d(&W::x_pow(int(3)), n - 1);
    Ok(apply_chain(&chain.0, &exp_sq(-1).mul(&W::x_pow(int(1)))))
}
