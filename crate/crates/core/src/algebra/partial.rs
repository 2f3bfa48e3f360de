//! Partial fractions and antiderivatives for rational functions whose
//! denominators split into distinct rational linear factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::{Poly, RatFn};

/// Trial divisions allowed while enumerating candidate roots.
const DIVISOR_BUDGET: u64 = 2_000_000;

/// `r = poly_part + sum residue / (x - root)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub poly_part: Poly,
    /// Sorted by root, roots distinct, residues nonzero.
    pub terms: Vec<SimplePole>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePole {
    pub root: Rational,
    pub residue: Rational,
}

/// `poly_part + sum residue * ln(x - root)`, integration constant zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrationResult {
    pub poly_part: Poly,
    pub log_terms: Vec<SimplePole>,
}

impl PartialFractions {
    /// Sums the decomposition back over a common denominator.
    pub fn recombine(&self) -> RatFn {
        self.terms.iter().fold(RatFn::from_poly(self.poly_part.clone()), |acc, t| {
            let pole = RatFn::new(Poly::constant(t.residue.clone()), Poly::linear(t.root.clone()))
                .expect("linear denominator");
            acc.add(&pole)
        })
    }
}

impl IntegrationResult {
    pub fn zero() -> Self {
        Self {
            poly_part: Poly::zero(),
            log_terms: Vec::new(),
        }
    }

    /// Derivative of the antiderivative, i.e. the original integrand.
    pub fn derivative(&self) -> RatFn {
        PartialFractions {
            poly_part: self.poly_part.derivative(),
            terms: self.log_terms.clone(),
        }
        .recombine()
    }
}

pub fn partial_fractions(r: &RatFn) -> Result<PartialFractions> {
    let den = r.den();
    let (quot, _) = r.num().div_rem(den)?;
    if den.is_constant() {
        return Ok(PartialFractions {
            poly_part: quot,
            terms: Vec::new(),
        });
    }
    let g = den.gcd(&den.derivative());
    if !g.is_constant() {
        return Err(Error::RepeatedPole(g.to_string()));
    }
    let (roots, leftover) = rational_roots(den)?;
    if !leftover.is_constant() {
        return Err(Error::IrreducibleFactor(leftover.to_string()));
    }
    let dden = den.derivative();
    let mut terms: Vec<SimplePole> = roots
        .into_iter()
        .map(|(root, _)| {
            let residue = r.num().eval(&root) / dden.eval(&root);
            SimplePole { root, residue }
        })
        .collect();
    terms.sort_by(|a, b| a.root.cmp(&b.root));
    Ok(PartialFractions {
        poly_part: quot,
        terms,
    })
}

pub fn integrate_rational(r: &RatFn) -> Result<IntegrationResult> {
    let pf = partial_fractions(r)?;
    Ok(IntegrationResult {
        poly_part: pf.poly_part.antiderivative(),
        log_terms: pf.terms,
    })
}

/// Rational roots with multiplicities, plus the cofactor that has no
/// rational roots.
pub fn rational_roots(p: &Poly) -> Result<(Vec<(Rational, usize)>, Poly)> {
    if p.is_zero() {
        return Err(Error::InvalidParameters("roots of the zero polynomial".into()));
    }
    let mut rest = p.monic();
    let mut roots = Vec::new();

    let mut zero_mult = 0;
    while rest.coeff(0).is_zero() && !rest.is_constant() {
        rest = Poly::from_coeffs(rest.coeffs()[1..].to_vec());
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if rest.is_constant() {
        return Ok((roots, rest));
    }

    let ints = integer_coefficients(&rest);
    let head = ints.last().expect("nonconstant").abs();
    let tail = ints[0].abs();
    let budget_err = || Error::RootSearchLimit(p.to_string());
    let ps = divisors(&tail).ok_or_else(budget_err)?;
    let qs = divisors(&head).ok_or_else(budget_err)?;

    let mut candidates: Vec<Rational> = Vec::new();
    for pn in &ps {
        for qd in &qs {
            let c = Rational::new(pn.clone(), qd.clone());
            if !candidates.contains(&c) {
                candidates.push(c.clone());
                candidates.push(-c);
            }
        }
    }

    for c in candidates {
        let mut mult = 0;
        while !rest.is_constant() && rest.eval(&c).is_zero() {
            let (q, _) = rest.div_rem(&Poly::linear(c.clone()))?;
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((c, mult));
        }
        if rest.is_constant() {
            break;
        }
    }
    Ok((roots, rest))
}

/// Scales by the lcm of the coefficient denominators.
fn integer_coefficients(p: &Poly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect()
}

/// Positive divisors by trial division; `None` when the budget runs out.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return Some(Vec::new());
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    let mut steps = 0u64;
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let other = &n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
        steps += 1;
        if steps > DIVISOR_BUDGET {
            return None;
        }
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    fn pole(root: Rational, residue: Rational) -> SimplePole {
        SimplePole { root, residue }
    }

    #[test]
    fn symmetric_drift_residues() {
        // m x / (1 - x^2) with m = 3/2
        let m = rat(3, 2);
        let r = RatFn::new(Poly::monomial(m.clone(), 1), p(&[1, 0, -1])).unwrap();
        let pf = partial_fractions(&r).unwrap();
        assert!(pf.poly_part.is_zero());
        let half = -m / int(2);
        assert_eq!(pf.terms, vec![pole(int(-1), half.clone()), pole(int(1), half)]);
        assert_eq!(pf.recombine(), r);
    }

    #[test]
    fn quadratic_over_x2_minus_1() {
        // (a x^2 + b x + c)/(x^2 - 1) for a=2, b=3, c=5
        let (a, b, c) = (int(2), int(3), int(5));
        let num = Poly::from_coeffs(vec![c.clone(), b.clone(), a.clone()]);
        let r = RatFn::new(num, p(&[-1, 0, 1])).unwrap();
        let pf = partial_fractions(&r).unwrap();
        assert_eq!(pf.poly_part, Poly::constant(a.clone()));
        let at_minus = (&b - &a - &c) / int(2);
        let at_plus = (&a + &b + &c) / int(2);
        assert_eq!(pf.terms, vec![pole(int(-1), at_minus), pole(int(1), at_plus)]);
        assert_eq!(pf.recombine(), r);

        let integral = integrate_rational(&r).unwrap();
        assert_eq!(integral.poly_part, Poly::monomial(a, 1));
        assert_eq!(integral.derivative(), r);
    }

    #[test]
    fn polynomial_input_has_no_poles() {
        let r = RatFn::from_poly(p(&[0, 1]));
        let pf = partial_fractions(&r).unwrap();
        assert_eq!(pf.poly_part, p(&[0, 1]));
        assert!(pf.terms.is_empty());
        let i = integrate_rational(&r).unwrap();
        assert_eq!(i.poly_part, Poly::monomial(rat(1, 2), 2));
    }

    #[test]
    fn single_pole_at_origin() {
        let r = RatFn::new(p(&[1]), p(&[0, 1])).unwrap();
        let i = integrate_rational(&r).unwrap();
        assert!(i.poly_part.is_zero());
        assert_eq!(i.log_terms, vec![pole(int(0), int(1))]);
    }

    #[test]
    fn rejects_repeated_and_irreducible() {
        let sq = RatFn::new(p(&[1]), p(&[1, -2, 1])).unwrap();
        assert!(matches!(partial_fractions(&sq), Err(Error::RepeatedPole(_))));
        let irr = RatFn::new(p(&[1]), p(&[1, 0, 1])).unwrap();
        assert!(matches!(partial_fractions(&irr), Err(Error::IrreducibleFactor(_))));
    }

    #[test]
    fn roots_with_fractional_values() {
        // (2x - 1)(3x + 2) x
        let q = &(&p(&[-1, 2]) * &p(&[2, 3])) * &p(&[0, 1]);
        let (mut roots, rest) = rational_roots(&q).unwrap();
        roots.sort();
        assert!(rest.is_constant());
        assert_eq!(roots, vec![(rat(-2, 3), 1), (int(0), 1), (rat(1, 2), 1)]);
    }
}
