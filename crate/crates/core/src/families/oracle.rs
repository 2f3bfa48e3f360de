//! Classical three-term recurrences. Nothing here touches the ladder path.

use num_traits::One;

use super::{FamilyKind, FamilySpec};
use crate::error::{Error, Result};
use crate::rational::{double_factorial, int, rat, Rational};
use crate::weighted::WeightedExpression;
use crate::Poly;

fn x_times(c: Rational, p: &Poly) -> Poly {
    &Poly::monomial(c, 1) * p
}

/// Runs `p_{k+1} = step(k, p_k, p_{k-1})` from `p0, p1` up to index `n`.
fn three_term(n: u32, p0: Poly, p1: Poly, step: impl Fn(u32, &Poly, &Poly) -> Poly) -> Poly {
    if n == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, p1);
    for k in 1..n {
        let next = step(k, &cur, &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn legendre(n: u32) -> Poly {
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    three_term(n, Poly::one(), Poly::x(), |k, cur, prev| {
        let k = int(k as i64);
        let top = &x_times(int(2) * &k + int(1), cur) - &prev.scale(&k);
        top.scale(&(Rational::one() / (k + int(1))))
    })
}

fn gegenbauer(n: u32, lambda: &Rational) -> Poly {
    // (k+1) C_{k+1} = 2(k+λ) x C_k - (k+2λ-1) C_{k-1}
    let c1 = Poly::monomial(lambda * int(2), 1);
    three_term(n, Poly::one(), c1, |k, cur, prev| {
        let k = int(k as i64);
        let top = &x_times((&k + lambda) * int(2), cur) - &prev.scale(&(&k + lambda * int(2) - int(1)));
        top.scale(&(Rational::one() / (k + int(1))))
    })
}

fn chebyshev(n: u32, p1: Poly) -> Poly {
    three_term(n, Poly::one(), p1, |_, cur, prev| &x_times(int(2), cur) - prev)
}

fn laguerre(n: u32, alpha: &Rational) -> Poly {
    // (k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}
    let l1 = Poly::from_coeffs(vec![alpha + int(1), int(-1)]);
    three_term(n, Poly::one(), l1, |k, cur, prev| {
        let k = int(k as i64);
        let lin = Poly::from_coeffs(vec![int(2) * &k + int(1) + alpha, int(-1)]);
        let top = &(&lin * cur) - &prev.scale(&(&k + alpha));
        top.scale(&(Rational::one() / (k + int(1))))
    })
}

fn hermite(n: u32) -> Poly {
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    three_term(n, Poly::one(), Poly::monomial(int(2), 1), |k, cur, prev| {
        &x_times(int(2), cur) - &prev.scale(&int(2 * k as i64))
    })
}

/// The polynomial factor of `P_n^m`, i.e. `P_n^m / (1 - x²)^{m/2}`, from
/// `(k-m+1) Q_{k+1} = (2k+1) x Q_k - (k+m) Q_{k-1}` seeded with
/// `Q_m = (2m-1)!!`. No Condon–Shortley phase.
pub(super) fn assoc_legendre_factor(n: u32, m: u32) -> Poly {
    let seed = Poly::constant(Rational::from_integer(double_factorial(2 * m as i64 - 1)));
    if n == m {
        return seed;
    }
    let mut prev = Poly::zero();
    let mut cur = seed;
    for k in m..n {
        let kq = int(k as i64);
        let top = &x_times(int(2) * &kq + int(1), &cur) - &prev.scale(&(&kq + int(m as i64)));
        let next = top.scale(&(Rational::one() / (kq - int(m as i64) + int(1))));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `P_n^m` with its weight, from the associated recurrence.
pub fn oracle_assoc_legendre(n: u32, m: u32) -> WeightedExpression {
    let weight = WeightedExpression::one_minus_x2_pow(rat(m as i64, 2));
    weight.mul(&WeightedExpression::from_poly(assoc_legendre_factor(n, m)))
}

/// The family member from its classical three-term recurrence.
///
/// Fails only for kinds that are not polynomial families: the radial
/// Coulomb and oscillator operators, and `P_n^m` with odd `m`.
pub fn oracle_recurrence(spec: &FamilySpec) -> Result<Poly> {
    let n = spec.n;
    Ok(match &spec.kind {
        FamilyKind::Legendre => legendre(n),
        FamilyKind::Gegenbauer { lambda } => gegenbauer(n, lambda),
        FamilyKind::ChebyshevT => chebyshev(n, Poly::x()),
        FamilyKind::ChebyshevU => chebyshev(n, Poly::monomial(int(2), 1)),
        FamilyKind::Laguerre { alpha } => laguerre(n, alpha),
        FamilyKind::LaguerreRadial { alpha } => laguerre(n, alpha).compose(&Poly::monomial(int(1), 2)),
        FamilyKind::Hermite => hermite(n),
        FamilyKind::AssocLegendre { m } => oracle_assoc_legendre(n, *m).as_polynomial()?,
        FamilyKind::CoulombRadial { .. } | FamilyKind::Oscillator3d { .. } => {
            return Err(Error::InvalidParameters(format!("{} has no polynomial family", spec.kind.name())))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[Rational]) -> Poly {
        Poly::from_coeffs(cs.to_vec())
    }

    #[test]
    fn base_cases_and_small_members() {
        assert_eq!(legendre(1), Poly::x());
        assert_eq!(legendre(2), p(&[rat(-1, 2), int(0), rat(3, 2)]));
        assert_eq!(chebyshev(3, Poly::x()), p(&[int(0), int(-3), int(0), int(4)]));
        assert_eq!(laguerre(2, &int(0)), p(&[int(1), int(-2), rat(1, 2)]));
        assert_eq!(hermite(2), p(&[int(-2), int(0), int(4)]));
    }

    #[test]
    fn gegenbauer_half_is_legendre() {
        for n in 0..8 {
            assert_eq!(gegenbauer(n, &rat(1, 2)), legendre(n));
        }
    }

    #[test]
    fn assoc_factor_matches_derivative() {
        for n in 0..7 {
            for m in 0..=n {
                assert_eq!(assoc_legendre_factor(n, m), legendre(n).nth_derivative(m as usize));
            }
        }
    }
}
