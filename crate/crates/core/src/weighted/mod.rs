//! The function class `e^{iπθ} R(x) Π (x - r)^α exp(p(x))`.
//!
//! `R` is a rational function, the roots `r` and exponents `α` are rational,
//! and `p` is a polynomial. The class is closed under differentiation,
//! products and quotients, which is all the ladder operators and Rodrigues
//! chains need.
//!
//! Powers are taken on the base `(x - r)`. A reflected base `(r - x)^α` is
//! stored as `e^{-iπα} (x - r)^α`, which is exact for `x < r` with the
//! principal branch, so chains that mix `(1 - x²)` and `(x² - 1)` keep their
//! signs.
//!
//! Canonical form:
//! - phase `θ` in `[0, 1)`; whole turns are folded into the sign of `R`,
//! - exponents in `(0, 1)`; integer parts are folded into `R`,
//! - roots distinct and sorted,
//! - `p(0) = 0`; a constant factor `e^{c}` is not representable over the
//!   rationals and is dropped,
//! - zero is `R = 0` with no powers, `p = 0` and `θ = 0`.

mod sum;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::IntegrationResult;
use crate::error::{Error, Result};
use crate::rational::{is_integer, Rational};
use crate::{Poly, RatFn};

pub use sum::WeightedSum;

/// `(x - root)^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerFactor {
    pub root: Rational,
    pub exponent: Rational,
}

impl PowerFactor {
    pub fn new(root: Rational, exponent: Rational) -> Self {
        Self { root, exponent }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedExpression {
    phase: Rational,
    coeff: RatFn,
    powers: Vec<PowerFactor>,
    exp_arg: Poly,
}

impl WeightedExpression {
    /// Builds and canonicalizes. Repeated roots in `powers` are merged.
    pub fn from_parts(phase: Rational, coeff: RatFn, powers: Vec<PowerFactor>, exp_arg: Poly) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        let mut merged: BTreeMap<Rational, Rational> = BTreeMap::new();
        for pf in powers {
            *merged.entry(pf.root).or_insert_with(Rational::zero) += pf.exponent;
        }

        let mut coeff = coeff;
        let mut kept = Vec::new();
        for (root, exponent) in merged {
            let whole = exponent.floor();
            let frac = &exponent - &whole;
            if !whole.is_zero() {
                let k: i64 = whole.to_integer().try_into().expect("exponent fits in i64");
                let base = RatFn::from_poly(Poly::linear(root.clone()));
                coeff = coeff.mul(&base.powi(k).expect("nonzero base"));
            }
            if !frac.is_zero() {
                kept.push(PowerFactor::new(root, frac));
            }
        }

        let turns = phase.floor();
        let phase = &phase - &turns;
        if !turns.to_integer().is_even() {
            coeff = coeff.neg();
        }

        let mut exp_coeffs = exp_arg.into_coeffs();
        if let Some(c0) = exp_coeffs.first_mut() {
            *c0 = Rational::zero();
        }

        Self {
            phase,
            coeff,
            powers: kept,
            exp_arg: Poly::from_coeffs(exp_coeffs),
        }
    }

    pub fn zero() -> Self {
        Self {
            phase: Rational::zero(),
            coeff: RatFn::zero(),
            powers: Vec::new(),
            exp_arg: Poly::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_ratfn(RatFn::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_ratfn(RatFn::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::from_ratfn(RatFn::from_poly(p))
    }

    pub fn from_ratfn(r: RatFn) -> Self {
        Self::from_parts(Rational::zero(), r, Vec::new(), Poly::zero())
    }

    /// `(x - root)^exponent`.
    pub fn x_minus_pow(root: Rational, exponent: Rational) -> Self {
        Self::from_parts(
            Rational::zero(),
            RatFn::one(),
            vec![PowerFactor::new(root, exponent)],
            Poly::zero(),
        )
    }

    /// `(root - x)^exponent`, stored as `e^{-iπ exponent} (x - root)^exponent`.
    pub fn root_minus_x_pow(root: Rational, exponent: Rational) -> Self {
        Self::from_parts(
            -exponent.clone(),
            RatFn::one(),
            vec![PowerFactor::new(root, exponent)],
            Poly::zero(),
        )
    }

    /// `exp(p(x))`, up to the dropped constant `e^{p(0)}`.
    pub fn exponential(p: Poly) -> Self {
        Self::from_parts(Rational::zero(), RatFn::one(), Vec::new(), p)
    }

    /// `x^e`, i.e. a power at root zero.
    pub fn x_pow(exponent: Rational) -> Self {
        Self::x_minus_pow(Rational::zero(), exponent)
    }

    /// `(x² - 1)^e = (x - 1)^e (x + 1)^e`.
    pub fn x2_minus_1_pow(exponent: Rational) -> Self {
        Self::x_minus_pow(Rational::one(), exponent.clone())
            .mul(&Self::x_minus_pow(-Rational::one(), exponent))
    }

    /// `(1 - x²)^e = (1 - x)^e (x + 1)^e`.
    pub fn one_minus_x2_pow(exponent: Rational) -> Self {
        Self::root_minus_x_pow(Rational::one(), exponent.clone())
            .mul(&Self::x_minus_pow(-Rational::one(), exponent))
    }

    pub fn phase(&self) -> &Rational {
        &self.phase
    }

    pub fn coeff(&self) -> &RatFn {
        &self.coeff
    }

    pub fn powers(&self) -> &[PowerFactor] {
        &self.powers
    }

    pub fn exp_arg(&self) -> &Poly {
        &self.exp_arg
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Same phase, power factors and exponential; such terms can be summed.
    pub fn same_weight(&self, other: &Self) -> bool {
        self.phase == other.phase && self.powers == other.powers && self.exp_arg == other.exp_arg
    }

    fn with_coeff(&self, coeff: RatFn) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            phase: self.phase.clone(),
            coeff,
            powers: self.powers.clone(),
            exp_arg: self.exp_arg.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.with_coeff(self.coeff.scale(c))
    }

    pub fn neg(&self) -> Self {
        self.with_coeff(self.coeff.neg())
    }

    pub fn mul_ratfn(&self, r: &RatFn) -> Self {
        self.with_coeff(self.coeff.mul(r))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let powers = self.powers.iter().chain(&other.powers).cloned().collect();
        Self::from_parts(
            &self.phase + &other.phase,
            self.coeff.mul(&other.coeff),
            powers,
            &self.exp_arg + &other.exp_arg,
        )
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let powers = self
            .powers
            .iter()
            .cloned()
            .chain(other.powers.iter().map(|pf| PowerFactor::new(pf.root.clone(), -pf.exponent.clone())))
            .collect();
        Ok(Self::from_parts(
            &self.phase - &other.phase,
            self.coeff.div(&other.coeff)?,
            powers,
            &self.exp_arg - &other.exp_arg,
        ))
    }

    /// `Σ α/(x - r) + p'`, the logarithmic derivative of the weight.
    fn weight_log_derivative(&self) -> RatFn {
        self.powers.iter().fold(RatFn::from_poly(self.exp_arg.derivative()), |acc, pf| {
            let term = RatFn::new(Poly::constant(pf.exponent.clone()), Poly::linear(pf.root.clone()))
                .expect("linear denominator");
            acc.add(&term)
        })
    }

    pub fn differentiate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let coeff = self
            .coeff
            .derivative()
            .add(&self.coeff.mul(&self.weight_log_derivative()));
        self.with_coeff(coeff)
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |w, _| w.differentiate())
    }

    /// `w' / w`, always rational for this class.
    pub fn log_derivative(&self) -> Result<RatFn> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self
            .coeff
            .derivative()
            .div(&self.coeff)?
            .add(&self.weight_log_derivative()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if !self.same_weight(other) {
            return Err(Error::IncompatibleTerms(format!("{self}  +  {other}")));
        }
        Ok(self.with_coeff(self.coeff.add(&other.coeff)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// The rational coefficient when the weight is trivial.
    pub fn as_ratfn(&self) -> Option<&RatFn> {
        let trivial = self.phase.is_zero() && self.powers.is_empty() && self.exp_arg.is_zero();
        trivial.then_some(&self.coeff)
    }

    /// Extracts the polynomial once every weight has cancelled.
    pub fn as_polynomial(&self) -> Result<Poly> {
        let mut surviving = Vec::new();
        if !self.phase.is_zero() {
            surviving.push(format!("phase e^(iπ·{})", self.phase));
        }
        if !self.powers.is_empty() {
            surviving.push(format!("power factors {}", self.weight_string("x")));
        }
        if !self.exp_arg.is_zero() {
            surviving.push(format!("exp({})", self.exp_arg));
        }
        if !self.coeff.is_polynomial() {
            surviving.push(format!("denominator {}", self.coeff.den()));
        }
        if surviving.is_empty() {
            Ok(self.coeff.num().clone())
        } else {
            Err(Error::NotPolynomial(format!("{self}: surviving {}", surviving.join(", "))))
        }
    }

    /// `c` with `self = c * other`, if such a rational exists.
    pub fn scalar_equivalent(&self, other: &Self) -> Option<Rational> {
        match self.constant_ratio(other)? {
            (c, phase) if phase.is_zero() => Some(c),
            _ => None,
        }
    }

    /// `(c, θ)` with `self = c e^{iπθ} other`, `θ` in `[0, 1)`.
    ///
    /// This is equality up to a constant factor, which is how the
    /// factorization functions compare against forms written with the
    /// opposite orientation of a base.
    pub fn constant_ratio(&self, other: &Self) -> Option<(Rational, Rational)> {
        if other.is_zero() {
            return self.is_zero().then(|| (Rational::one(), Rational::zero()));
        }
        if self.is_zero() {
            return Some((Rational::zero(), Rational::zero()));
        }
        if self.powers != other.powers || self.exp_arg != other.exp_arg {
            return None;
        }
        let c = self.coeff.div(&other.coeff).ok()?.as_constant()?;
        let phase = &self.phase - &other.phase;
        let turns = phase.floor();
        let phase = &phase - &turns;
        let c = if turns.to_integer().is_even() { c } else { -c };
        Some((c, phase))
    }

    /// `exp(±(poly_part + Σ c ln(x - r))) = exp(±poly_part) Π (x - r)^{±c}`.
    pub fn exp_integral(integral: &IntegrationResult, sign: Sign) -> Self {
        let flip = |q: &Rational| match sign {
            Sign::Plus => q.clone(),
            Sign::Minus => -q.clone(),
        };
        let powers = integral
            .log_terms
            .iter()
            .map(|t| PowerFactor::new(t.root.clone(), flip(&t.residue)))
            .collect();
        let exp_arg = match sign {
            Sign::Plus => integral.poly_part.clone(),
            Sign::Minus => -&integral.poly_part,
        };
        Self::from_parts(Rational::zero(), RatFn::one(), powers, exp_arg)
    }

    fn weight_string(&self, var: &str) -> String {
        self.powers
            .iter()
            .map(|pf| format!("({})^({})", linear_string(&pf.root, var), pf.exponent))
            .collect::<Vec<_>>()
            .join(" * ")
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        if !self.phase.is_zero() {
            parts.push(format!("e^(iπ·{})", self.phase));
        }
        parts.push(format!("({})", self.coeff.display_in(var)));
        if !self.powers.is_empty() {
            parts.push(self.weight_string(var));
        }
        if !self.exp_arg.is_zero() {
            parts.push(format!("exp({})", self.exp_arg.display_in(var)));
        }
        parts.join(" * ")
    }
}

fn linear_string(root: &Rational, var: &str) -> String {
    if root.is_zero() {
        var.to_string()
    } else if root > &Rational::zero() {
        format!("{var} - {root}")
    } else {
        format!("{var} + {}", -root.clone())
    }
}

impl fmt::Display for WeightedExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl From<Poly> for WeightedExpression {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl From<RatFn> for WeightedExpression {
    fn from(r: RatFn) -> Self {
        Self::from_ratfn(r)
    }
}

/// `true` when every exponent of the canonical form is fractional; exposed
/// for property tests of the canonicalization.
pub fn exponents_are_fractional(w: &WeightedExpression) -> bool {
    w.powers
        .iter()
        .all(|pf| !is_integer(&pf.exponent) && pf.exponent > Rational::zero() && pf.exponent < Rational::one())
}

#[cfg(test)]
mod tests;
