use super::*;
use crate::rational::{factorial, int, rat, Rational};
use crate::weighted::WeightedExpression as W;
use crate::Poly;

fn p(cs: &[i64]) -> Poly {
    Poly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
}

fn w(cs: &[i64]) -> W {
    W::from_poly(p(cs))
}

fn legendre_raising(n: i64) -> LadderOperator {
    LadderOperator::raising(p(&[-1, 0, 1]), p(&[0, n])).unwrap()
}

/// Bonnet recurrence, kept local so these tests share nothing with the
/// ladder path.
fn legendre_oracle(n: usize) -> Poly {
    let mut prev = Poly::zero();
    let mut cur = Poly::one();
    for k in 0..n {
        let k = k as i64;
        let next = (&(&Poly::x() * &cur).scale(&int(2 * k + 1)) - &prev.scale(&int(k))).scale(&rat(1, k + 1));
        prev = cur;
        cur = next;
    }
    cur
}

#[test]
fn zero_coefficient_rejected() {
    assert!(LadderOperator::raising(Poly::zero(), p(&[1])).is_err());
}

#[test]
fn legendre_raising_on_low_orders() {
    assert_eq!(legendre_raising(1).apply(&w(&[1])).unwrap(), w(&[0, 1]));
    let r2x = legendre_raising(2).apply(&w(&[0, 1])).unwrap();
    assert_eq!(r2x, W::from_poly(legendre_oracle(2).scale(&int(2))));
    assert_eq!(r2x, w(&[-1, 0, 3]));
}

#[test]
fn laguerre_raising_on_ground_state() {
    let alpha = rat(2, 5);
    // x D - x + alpha + 1
    let op = LadderOperator::raising(p(&[0, 1]), &Poly::constant(&alpha + int(1)) - &p(&[0, 1])).unwrap();
    let expected = &Poly::constant(&alpha + int(1)) - &p(&[0, 1]);
    assert_eq!(op.apply(&w(&[1])).unwrap().as_polynomial().unwrap(), expected);
}

#[test]
fn lowering_form_differentiates_after_multiplying() {
    // -D (x^2 - 1) + 3x applied to x: -(3x^2 - 1) + 3x^2 = 1
    let op = LadderOperator::lowering(p(&[-1, 0, 1]), p(&[0, 3])).unwrap();
    assert_eq!(op.apply(&w(&[0, 1])).unwrap(), w(&[1]));
}

#[test]
fn legendre_factorization_without_drift() {
    let n = 3;
    let fac = factorize(&legendre_raising(n), &RatFn::zero()).unwrap();
    assert_eq!(fac.g2, W::x2_minus_1_pow(rat(n, 2)));
    assert_eq!(fac.f1, W::x2_minus_1_pow(int(1) - rat(n, 2)));
    assert!(fac.h.is_zero());
}

#[test]
fn oscillator_factorization() {
    let op = LadderOperator::raising(p(&[-1]), p(&[0, 1])).unwrap();
    let fac = factorize(&op, &RatFn::zero()).unwrap();
    assert_eq!(fac.g2, W::exponential(Poly::monomial(rat(-1, 2), 2)));
    assert_eq!(fac.f1, W::exponential(Poly::monomial(rat(1, 2), 2)).neg());
}

#[test]
fn associated_legendre_m_raising_factorization() {
    let m = int(3);
    let a = W::one_minus_x2_pow(rat(1, 2));
    let b = W::from_poly(Poly::monomial(m.clone(), 1)).mul(&W::one_minus_x2_pow(rat(-1, 2)));
    let op = LadderOperator::raising(a, b).unwrap();
    let fac = factorize(&op, &RatFn::zero()).unwrap();
    let expected = W::one_minus_x2_pow(-m / int(2));
    assert!(fac.g2.constant_ratio(&expected).is_some());
    let report = verify_factorization(&op, &fac, &[w(&[1]), w(&[0, 1]), W::x2_minus_1_pow(rat(1, 2))]);
    assert!(report.passed(), "{:?}", report.first_failure());
}

#[test]
fn laguerre_factorization_with_drift() {
    let (alpha, n) = (rat(-1, 2), int(2));
    let op = LadderOperator::raising(p(&[0, 1]), &Poly::constant(&alpha + &n) - &p(&[0, 1])).unwrap();
    let t = RatFn::from_poly(p(&[1, 2]));
    let fac = factorize(&op, &t).unwrap();
    // x^{alpha+n} e^{-x} exp(-∫t) with ∫t = x + x^2
    let expected = W::x_pow(&alpha + &n)
        .mul(&W::exponential(p(&[0, -1])))
        .mul(&W::exponential(p(&[0, -1, -1])));
    assert_eq!(fac.g2.scalar_equivalent(&expected), Some(int(1)));
    assert_eq!(fac.f1.mul(&fac.g2), *op.a());
}

#[test]
fn verification_passes_with_and_without_drift() {
    let op = legendre_raising(4);
    let fac = factorize(&op, &RatFn::zero()).unwrap();
    assert!(verify_factorization(&op, &fac, &[w(&[0, 0, 0, 1])]).passed());

    let t = RatFn::from_poly(p(&[1, 0, 1]));
    let fac = factorize(&op, &t).unwrap();
    let testers = [w(&[1]), w(&[0, 1]), w(&[-1, 0, 1])];
    let report = verify_factorization(&op, &fac, &testers);
    assert!(report.passed(), "{:?}", report.first_failure());
}

#[test]
fn corrupted_factor_is_reported() {
    let op = legendre_raising(2);
    let mut fac = factorize(&op, &RatFn::zero()).unwrap();
    fac.g2 = fac.g2.mul(&W::x2_minus_1_pow(int(1)));
    let report = verify_factorization(&op, &fac, &[w(&[0, 1])]);
    assert!(!report.passed());
    assert!(report.first_failure().unwrap().discrepancy.is_some());
}

#[test]
fn out_of_class_drift() {
    let op = legendre_raising(2);
    let t = RatFn::new(p(&[1]), p(&[1, 0, 1])).unwrap();
    assert!(matches!(factorize(&op, &t), Err(Error::OutOfClass(_))));
}

#[test]
fn classical_rodrigues_chain() {
    for n in 0..=10u32 {
        let mut steps = vec![ChainStep::scale(Rational::new(1.into(), factorial(n) << n as usize))];
        steps.extend(std::iter::repeat_n(ChainStep::Differentiate, n as usize));
        let out = apply_chain(&steps, &W::from_poly(p(&[-1, 0, 1]).pow(n)));
        assert_eq!(out.as_polynomial().unwrap(), legendre_oracle(n as usize), "n = {n}");
    }
}

#[test]
fn chebyshev_u_chain() {
    // n! U_n = (x^2-1)^{(1-n)/2} D [(x^2-1)^{3/2} D]^{n-1} (x^2-1), checked for n = 3
    let n = 3i64;
    let mut steps = vec![
        ChainStep::scale(rat(1, 6)),
        ChainStep::Multiply(W::x2_minus_1_pow(rat(1 - n, 2))),
        ChainStep::Differentiate,
    ];
    for _ in 1..n {
        steps.push(ChainStep::Multiply(W::x2_minus_1_pow(rat(3, 2))));
        steps.push(ChainStep::Differentiate);
    }
    let out = apply_chain(&steps, &w(&[-1, 0, 1]));
    assert_eq!(out.as_polynomial().unwrap(), p(&[0, -4, 0, 8]));
}

#[test]
fn empty_chain_is_identity() {
    let u = W::x2_minus_1_pow(rat(1, 3));
    assert_eq!(apply_chain(&[], &u), u);
}
