use super::*;
use crate::algebra::integrate_rational;
use crate::rational::{int, rat};

fn p(cs: &[i64]) -> Poly {
    Poly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
}

fn w(cs: &[i64]) -> WeightedExpression {
    WeightedExpression::from_poly(p(cs))
}

fn gaussian() -> WeightedExpression {
    WeightedExpression::exponential(Poly::monomial(rat(-1, 2), 2))
}

#[test]
fn integer_exponent_folds_into_coefficient() {
    let e = WeightedExpression::x_minus_pow(int(1), int(3));
    assert!(e.powers().is_empty());
    assert_eq!(e.as_polynomial().unwrap(), p(&[-1, 1]).pow(3));
}

#[test]
fn split_integer_part() {
    let e = WeightedExpression::x_minus_pow(int(1), rat(5, 2));
    assert_eq!(e.coeff(), &RatFn::from_poly(p(&[-1, 1]).pow(2)));
    assert_eq!(e.powers(), &[PowerFactor::new(int(1), rat(1, 2))]);
}

#[test]
fn distinct_roots_sorted() {
    let e = WeightedExpression::x2_minus_1_pow(rat(1, 2));
    let roots: Vec<_> = e.powers().iter().map(|pf| pf.root.clone()).collect();
    assert_eq!(roots, vec![int(-1), int(1)]);
}

#[test]
fn negative_exponent_uses_floor() {
    let e = WeightedExpression::x_minus_pow(int(0), rat(-1, 2));
    assert_eq!(e.powers(), &[PowerFactor::new(int(0), rat(1, 2))]);
    assert_eq!(e.coeff(), &RatFn::new(p(&[1]), p(&[0, 1])).unwrap());
    assert!(exponents_are_fractional(&e));
}

#[test]
fn derivative_of_gaussian() {
    assert_eq!(gaussian().differentiate(), gaussian().mul(&w(&[0, -1])));
}

#[test]
fn derivative_of_sqrt_x2_minus_1() {
    let s = WeightedExpression::x2_minus_1_pow(rat(1, 2));
    let d = s.differentiate();
    let expected = w(&[0, 1]).mul(&WeightedExpression::x2_minus_1_pow(rat(-1, 2)));
    assert_eq!(d, expected);
    // (d/dx)^2 = x^2 / (x^2 - 1)
    let sq = d.mul(&d);
    assert_eq!(sq.as_ratfn().unwrap(), &RatFn::new(p(&[0, 0, 1]), p(&[-1, 0, 1])).unwrap());
}

#[test]
fn folded_polynomial_derivative() {
    assert_eq!(WeightedExpression::x2_minus_1_pow(int(1)).differentiate(), w(&[0, 2]));
}

#[test]
fn quotient_and_inverse() {
    let q = w(&[-1, 0, 1]).div(&WeightedExpression::x2_minus_1_pow(rat(1, 2))).unwrap();
    assert_eq!(q, WeightedExpression::x2_minus_1_pow(rat(1, 2)));
    let inv = WeightedExpression::exponential(Poly::monomial(rat(1, 2), 2));
    assert_eq!(inv.mul(&gaussian()), WeightedExpression::one());
    assert_eq!(w(&[1]).div(&WeightedExpression::zero()), Err(Error::DivisionByZero));
}

#[test]
fn laguerre_weight_divided_by_x() {
    let alpha = rat(1, 3);
    let n = int(2);
    let e_minus_x = WeightedExpression::exponential(p(&[0, -1]));
    let g = WeightedExpression::x_pow(&alpha + &n).mul(&e_minus_x);
    let expected = WeightedExpression::x_pow(&alpha + &n - int(1)).mul(&e_minus_x);
    assert_eq!(g.div(&w(&[0, 1])).unwrap(), expected);
}

#[test]
fn exp_integral_of_x_is_gaussian() {
    let i = integrate_rational(&RatFn::from_poly(p(&[0, 1]))).unwrap();
    assert_eq!(WeightedExpression::exp_integral(&i, Sign::Minus), gaussian());
    assert_eq!(
        WeightedExpression::exp_integral(&IntegrationResult::zero(), Sign::Plus),
        WeightedExpression::one()
    );
}

#[test]
fn exp_integral_of_quadratic_drift() {
    // h = a x^2 + b x + c over x^2 - 1, with a=1, b=2, c=-4
    let (a, b, c) = (int(1), int(2), int(-4));
    let t = RatFn::new(Poly::from_coeffs(vec![c.clone(), b.clone(), a.clone()]), p(&[-1, 0, 1])).unwrap();
    let e = WeightedExpression::exp_integral(&integrate_rational(&t).unwrap(), Sign::Plus);
    // e^{ax} (x-1)^{(a+b+c)/2} (x+1)^{(b-a-c)/2}
    let expected = WeightedExpression::exponential(Poly::monomial(a.clone(), 1))
        .mul(&WeightedExpression::x_minus_pow(int(1), (&a + &b + &c) / int(2)))
        .mul(&WeightedExpression::x_minus_pow(int(-1), (&b - &a - &c) / int(2)));
    assert_eq!(e, expected);
    // the (1-x)^{...}(1+x)^{...} orientation differs only by a unit constant
    let reflected = WeightedExpression::exponential(Poly::monomial(a.clone(), 1))
        .mul(&WeightedExpression::root_minus_x_pow(int(1), (&a + &b + &c) / int(2)))
        .mul(&WeightedExpression::x_minus_pow(int(-1), (&b - &a - &c) / int(2)));
    assert!(e.constant_ratio(&reflected).is_some());
    assert_eq!(e.log_derivative().unwrap(), t);
}

#[test]
fn log_derivatives() {
    assert_eq!(gaussian().log_derivative().unwrap(), RatFn::from_poly(p(&[0, -1])));
    let n = int(3);
    let e = WeightedExpression::x2_minus_1_pow(&n / int(2));
    let expected = RatFn::new(Poly::monomial(n.clone(), 1), p(&[-1, 0, 1])).unwrap();
    assert_eq!(e.log_derivative().unwrap(), expected);

    let alpha = rat(-1, 2);
    let lag = WeightedExpression::x_pow(&alpha + &n).mul(&WeightedExpression::exponential(p(&[0, -1])));
    // (alpha + n)/x - 1
    let expected = RatFn::new(&Poly::constant(&alpha + &n) - &p(&[0, 1]), p(&[0, 1])).unwrap();
    assert_eq!(lag.log_derivative().unwrap(), expected);
}

#[test]
fn polynomial_extraction() {
    assert_eq!(w(&[-1, 0, 3]).as_polynomial().unwrap(), p(&[-1, 0, 3]));
    let ex = WeightedExpression::exponential(p(&[0, 1])).mul(&w(&[0, 1]));
    assert!(matches!(ex.as_polynomial(), Err(Error::NotPolynomial(_))));
    let s = WeightedExpression::x_minus_pow(int(1), rat(1, 2));
    assert_eq!(s.mul(&s).as_polynomial().unwrap(), p(&[-1, 1]));
}

#[test]
fn scalar_equivalence() {
    assert_eq!(w(&[-2, 0, 2]).scalar_equivalent(&w(&[-1, 0, 1])), Some(int(2)));
    let e1 = WeightedExpression::exponential(p(&[0, 1]));
    let e2 = WeightedExpression::exponential(p(&[1, 1]));
    assert_eq!(e1.scalar_equivalent(&e2), Some(int(1)));
    assert_eq!(w(&[0, 1]).scalar_equivalent(&w(&[0, 0, 1])), None);
}

#[test]
fn reflected_bases_track_sign() {
    // (1 - x)^2 = (x - 1)^2, (1 - x)^1 = -(x - 1)
    let sq = WeightedExpression::root_minus_x_pow(int(1), int(2));
    assert_eq!(sq, w(&[1, -2, 1]));
    let lin = WeightedExpression::root_minus_x_pow(int(1), int(1));
    assert_eq!(lin, w(&[1, -1]));
    // (1 - x^2)^{1/2} squared is 1 - x^2
    let r = WeightedExpression::one_minus_x2_pow(rat(1, 2));
    assert_eq!(r.mul(&r).as_polynomial().unwrap(), p(&[1, 0, -1]));
    // (1 - x^2)^{1/2} and (x^2 - 1)^{1/2} differ by the unit e^{iπ/2}
    let s = WeightedExpression::x2_minus_1_pow(rat(1, 2));
    assert_eq!(r.scalar_equivalent(&s), None);
    let (c, phase) = r.constant_ratio(&s).unwrap();
    // e^{-iπ/2} = -e^{iπ/2}
    assert_eq!((c, phase), (int(-1), rat(1, 2)));
}

#[test]
fn unlike_terms_do_not_add() {
    let g = gaussian();
    assert!(matches!(g.add(&w(&[1])), Err(Error::IncompatibleTerms(_))));
    assert_eq!(g.add(&g.neg()).unwrap(), WeightedExpression::zero());
}

#[test]
fn sum_merges_like_terms() {
    let g = gaussian();
    let s = WeightedSum::from_terms([g.clone(), w(&[1]), g.neg(), w(&[0, 1])]);
    assert_eq!(s.as_single(), Some(w(&[1, 1])));
    let s2 = WeightedSum::from_terms([g.clone(), w(&[1])]);
    assert_eq!(s2.terms().len(), 2);
    assert!(s2.sub(&s2).is_zero());
}
