//! Scalar traits and exact rational helpers.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Zero};

use crate::error::{Error, Result};

/// Coefficient field for [`Polynomial`](crate::Polynomial) and
/// [`RationalFunction`](crate::RationalFunction).
///
/// Canonical forms (gcd cancellation, exact equality) are only meaningful for
/// exact scalars such as [`Rational`]; floating point instantiations are
/// fine for evaluation, differentiation and products.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + PartialEq + fmt::Debug + Num + Neg<Output = T> + FromPrimitive {}

/// Arbitrary-precision fraction, always reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rat: zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q` with integer `p`, `q` and `q != 0`.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let src = src.trim();
    let bad = || Error::InvalidParameters(format!("`{src}` is not a rational p/q"));
    let (num, den) = match src.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (src, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// `(-1)^k` as a rational.
pub fn sign_power(k: &BigInt) -> Rational {
    if k.is_even() {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Odd double factorial `k!! = k (k-2) ... 1`, with `(-1)!! = 1`.
pub fn double_factorial(k: i64) -> BigInt {
    assert!(k >= -1, "double factorial of {k}");
    let mut acc = BigInt::one();
    let mut j = k;
    while j > 1 {
        acc *= BigInt::from(j);
        j -= 2;
    }
    acc
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn pow_rational(q: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces_and_rejects_zero_denominator() {
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert_eq!(parse_rational("1/0"), Err(Error::ZeroDenominator));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn display_is_decimal_free() {
        assert_eq!(rat(-1, 2).to_string(), "-1/2");
        assert_eq!(int(3).to_string(), "3");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn combinatorial_helpers() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(double_factorial(7), BigInt::from(105));
        assert_eq!(double_factorial(-1), BigInt::one());
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(pochhammer(&int(-2), 3), Rational::zero());
    }
}
