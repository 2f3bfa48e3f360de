use std::fmt;

use num_traits::Signed;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::rational::Scalar;

/// Reduced quotient of polynomials with a monic denominator.
///
/// Two rational functions are equal exactly when their canonical forms are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    /// Cancels the gcd and makes the denominator monic.
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_constant() {
            let inv = T::one() / den.coeff(0);
            return Ok(Self::from_poly(num.scale(&inv)));
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lead = den.leading().expect("nonzero denominator").clone();
        let inv = T::one() / lead;
        Ok(Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial<T>> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Returns the constant value when the function is constant.
    pub fn as_constant(&self) -> Option<T> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        Self::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Integer power; negative powers invert (zero base then fails).
    pub fn powi(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { Self::one().div(self)? } else { self.clone() };
        let e = k.unsigned_abs() as u32;
        Ok(Self {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Quotient rule.
    pub fn derivative(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(top, &self.den * &self.den).expect("nonzero denominator")
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &T) -> Option<T> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl<T: Scalar> From<Polynomial<T>> for RationalFunction<T> {
    fn from(p: Polynomial<T>) -> Self {
        Self::from_poly(p)
    }
}

impl<T: Scalar + Signed + fmt::Display> RationalFunction<T> {
    pub fn display_in(&self, var: &str) -> String {
        if self.is_polynomial() {
            return self.num.display_in(var);
        }
        format!("({})/({})", self.num.display_in(var), self.den.display_in(var))
    }
}

impl<T: Scalar + Signed + fmt::Display> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::{Poly, RatFn};

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn common_factor_cancels() {
        let r = RatFn::new(p(&[-2, 0, 2]), p(&[-2, 2])).unwrap();
        assert_eq!(r, RatFn::from_poly(p(&[1, 1])));
    }

    #[test]
    fn already_canonical_is_untouched() {
        let r = RatFn::new(p(&[0, 1]), p(&[-1, 0, 1])).unwrap();
        assert_eq!(r.num(), &p(&[0, 1]));
        assert_eq!(r.den(), &p(&[-1, 0, 1]));
    }

    #[test]
    fn zero_numerator_and_zero_denominator() {
        let r = RatFn::new(Poly::zero(), p(&[-1, 1])).unwrap();
        assert_eq!(r.den(), &Poly::one());
        assert!(r.is_zero());
        assert_eq!(RatFn::new(p(&[1]), Poly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn denominator_made_monic() {
        let r = RatFn::new(p(&[1]), p(&[0, -2])).unwrap();
        assert_eq!(r.den(), &p(&[0, 1]));
        assert_eq!(r.num().coeff(0), crate::rational::rat(-1, 2));
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/x = -1/x^2
        let r = RatFn::new(p(&[1]), p(&[0, 1])).unwrap();
        assert_eq!(r.derivative(), RatFn::new(p(&[-1]), p(&[0, 0, 1])).unwrap());
    }
}
