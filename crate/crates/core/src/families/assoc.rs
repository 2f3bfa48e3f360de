use super::{make_operator, Direction, FamilyKind, FamilySpec};
use crate::error::{Error, Result};
use crate::rational::{int, rat};
use crate::weighted::WeightedExpression as W;

use super::oracle::oracle_recurrence;

/// Constant `c` with `R_{m-1} ⋯ R_0 P_n = c (1 - x²)^{m/2} D^m P_n`,
/// measured with `scalar_equivalent` for `0 <= m <= n <= 10`. No
/// Condon–Shortley phase appears on either side.
pub const ASSOC_ITERATED_OVER_DEFINITIONAL: i64 = 1;

/// `(definitional, iterated)` forms of `P_n^m`.
///
/// The definitional form is `(1 - x²)^{m/2} D^m P_n`; the iterated form
/// applies `R_0, …, R_{m-1}` to `P_n`.
pub fn assoc_legendre_forms(n: u32, m: u32) -> Result<(W, W)> {
    if m > n {
        return Err(Error::InvalidParameters(format!("assoc-legendre needs m <= n, got m={m}, n={n}")));
    }
    let p = oracle_recurrence(&FamilySpec::new(FamilyKind::Legendre, n)?)?;
    let definitional = W::one_minus_x2_pow(rat(m as i64, 2)).mul(&W::from_poly(p.nth_derivative(m as usize)));
    let mut iterated = W::from_poly(p);
    for k in 0..m {
        let op = make_operator(&FamilySpec::new(FamilyKind::AssocLegendre { m: k }, n)?, Direction::Raising)?;
        iterated = op.apply(&iterated)?;
    }
    Ok((definitional, iterated))
}

/// `P_n^m` in definitional form, after checking it against the iterated
/// form under [`ASSOC_ITERATED_OVER_DEFINITIONAL`].
pub fn generate_assoc_legendre(n: u32, m: u32) -> Result<W> {
    let (definitional, iterated) = assoc_legendre_forms(n, m)?;
    match iterated.scalar_equivalent(&definitional) {
        Some(c) if c == int(ASSOC_ITERATED_OVER_DEFINITIONAL) => Ok(definitional),
        Some(c) => Err(Error::InvalidParameters(format!(
            "P_{n}^{m}: iterated form is {c} times the definitional form"
        ))),
        None => Err(Error::InvalidParameters(format!(
            "P_{n}^{m}: iterated form {iterated} is not a multiple of {definitional}"
        ))),
    }
}
