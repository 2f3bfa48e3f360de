//! Operator catalog for the classical families, generation by ladder
//! iteration, recurrence oracles, Rodrigues forms and identity checks.

mod assoc;
mod hermite;
pub mod identities;
mod oracle;
mod remainder;
mod rodrigues;
pub mod suites;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ladder::LadderOperator;
use crate::rational::{int, rat, Rational};
use crate::weighted::WeightedExpression as W;
use crate::Poly;

pub use assoc::{assoc_legendre_forms, generate_assoc_legendre, ASSOC_ITERATED_OVER_DEFINITIONAL};
pub use hermite::{hermite_from_laguerre, hermite_via_oscillator, Parity, OSCILLATOR_HERMITE_SCALAR};
pub use identities::{identity_check, IdentityInstance, IdentityReport};
pub use oracle::{oracle_assoc_legendre, oracle_recurrence};
pub use remainder::{
    derivative_term_finding, epsilon_expansion, linear_part_operator, power_term_finding, remainder_f,
    DerivativeTermFinding, FamilyFormReading, PowerTermFinding,
};
pub use rodrigues::{
    chain_min_index, hermite_radial_printed_even, rodrigues_chain, rodrigues_standard, ChainVariant,
};

/// Index shift for the Legendre lowering relation `L_{n+2} P_n = n P_{n-1}`;
/// confirmed against the candidates `n`, `n+1`, `n+2` by the
/// `legendre-relations` identity.
pub const LEGENDRE_LOWERING_INDEX_OFFSET: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Legendre,
    AssocLegendre { m: u32 },
    Gegenbauer { lambda: Rational },
    ChebyshevT,
    ChebyshevU,
    Laguerre { alpha: Rational },
    Hermite,
    /// Laguerre in the variable `r` with `x = r²`.
    LaguerreRadial { alpha: Rational },
    CoulombRadial { l: u32 },
    Oscillator3d { l: u32 },
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Legendre => "legendre",
            Self::AssocLegendre { .. } => "assoc-legendre",
            Self::Gegenbauer { .. } => "gegenbauer",
            Self::ChebyshevT => "chebyshev-T",
            Self::ChebyshevU => "chebyshev-U",
            Self::Laguerre { .. } => "laguerre",
            Self::Hermite => "hermite",
            Self::LaguerreRadial { .. } => "laguerre-radial",
            Self::CoulombRadial { .. } => "coulomb-radial",
            Self::Oscillator3d { .. } => "oscillator-3d",
        }
    }

    /// Name of the independent variable.
    pub fn variable(&self) -> &'static str {
        match self {
            Self::LaguerreRadial { .. } | Self::CoulombRadial { .. } | Self::Oscillator3d { .. } => "r",
            _ => "x",
        }
    }

    /// Builds a kind from its name and the optional parameters.
    pub fn from_name(
        name: &str,
        alpha: Option<Rational>,
        lambda: Option<Rational>,
        m: Option<u32>,
        l: Option<u32>,
    ) -> Result<Self> {
        let need = |what: &str| Error::InvalidParameters(format!("family `{name}` needs --{what}"));
        Ok(match name.to_ascii_lowercase().as_str() {
            "legendre" => Self::Legendre,
            "assoc-legendre" => Self::AssocLegendre { m: m.ok_or_else(|| need("m"))? },
            "gegenbauer" => Self::Gegenbauer { lambda: lambda.ok_or_else(|| need("lambda"))? },
            "chebyshev-t" => Self::ChebyshevT,
            "chebyshev-u" => Self::ChebyshevU,
            "laguerre" => Self::Laguerre { alpha: alpha.unwrap_or_else(Rational::zero) },
            "hermite" => Self::Hermite,
            "laguerre-radial" => Self::LaguerreRadial { alpha: alpha.unwrap_or_else(Rational::zero) },
            "coulomb-radial" => Self::CoulombRadial { l: l.ok_or_else(|| need("l"))? },
            "oscillator-3d" => Self::Oscillator3d { l: l.ok_or_else(|| need("l"))? },
            _ => return Err(Error::Unknown(name.to_string())),
        })
    }

    /// Parameters as `(name, value)` pairs, in a fixed order.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        match self {
            Self::AssocLegendre { m } => vec![("m", m.to_string())],
            Self::Gegenbauer { lambda } => vec![("lambda", lambda.to_string())],
            Self::Laguerre { alpha } | Self::LaguerreRadial { alpha } => vec![("alpha", alpha.to_string())],
            Self::CoulombRadial { l } | Self::Oscillator3d { l } => vec![("l", l.to_string())],
            _ => Vec::new(),
        }
    }

    /// Smallest index accepted by [`FamilySpec::new`].
    pub fn min_index(&self) -> u32 {
        match self {
            Self::AssocLegendre { m } => *m,
            _ => 0,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for (k, v) in self.params() {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// A family together with its index `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: u32,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: u32) -> Result<Self> {
        match &kind {
            FamilyKind::AssocLegendre { m } if *m > n => {
                return Err(Error::InvalidParameters(format!("assoc-legendre needs m <= n, got m={m}, n={n}")));
            }
            FamilyKind::Gegenbauer { lambda } if lambda.is_zero() => {
                return Err(Error::InvalidParameters("gegenbauer needs lambda != 0".into()));
            }
            FamilyKind::Laguerre { alpha } | FamilyKind::LaguerreRadial { alpha } if *alpha <= -Rational::one() => {
                return Err(Error::InvalidParameters(format!("laguerre needs alpha > -1, got {alpha}")));
            }
            _ => {}
        }
        Ok(Self { kind, n })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Raising,
    Lowering,
}

impl FromStr for Direction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raising" => Ok(Self::Raising),
            "lowering" => Ok(Self::Lowering),
            _ => Err(Error::InvalidParameters(format!("direction must be raising or lowering, got `{s}`"))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Raising => "raising",
            Self::Lowering => "lowering",
        })
    }
}

fn poly(cs: &[Rational]) -> Poly {
    Poly::from_coeffs(cs.to_vec())
}

/// `c x`.
fn cx(c: Rational) -> Poly {
    Poly::monomial(c, 1)
}

/// Returns the operator with the index convention of the family:
///
/// | family | raising | lowering |
/// |---|---|---|
/// | legendre | `R_n P_{n-1} = n P_n` | `L_{n+2} P_n = n P_{n-1}` |
/// | assoc-legendre | `R_m P_n^m = P_n^{m+1}` | `L_m P_n^{m+1} = (n-m)(n+m+1) P_n^m` |
/// | gegenbauer | `C_n^+ C_{n-1} = -n C_n` | maps `C_n` to `(n+2λ-1) C_{n-1}` |
/// | chebyshev-U | `U_n^+ U_n = (n+1) U_{n+1}` | maps `U_n` to `(n+1) U_{n-1}` |
/// | chebyshev-T | `T_m^+ T_m = T_{m+1}` | `T_m^- T_m = T_{m-1}`, `m > 0` |
/// | laguerre | `A_+ L_{n-1} = n L_n` | `A_- L_n = (n+α) L_{n-1}` |
/// | hermite | `a⁺ = x - D` | `a⁻ = x + D` |
/// | laguerre-radial | as laguerre with `x = r²` | as laguerre |
/// | coulomb-radial | `D + (ℓ+1)/r` | none |
/// | oscillator-3d | `D + r/2 + (ℓ+1)/r` | none |
pub fn make_operator(spec: &FamilySpec, direction: Direction) -> Result<LadderOperator> {
    let n = int(spec.n as i64);
    let one = Rational::one();
    let x2_minus_1 = || poly(&[-one.clone(), Rational::zero(), one.clone()]);
    let one_minus_x2 = || poly(&[one.clone(), Rational::zero(), -one.clone()]);
    use Direction::*;
    match (&spec.kind, direction) {
        (FamilyKind::Legendre, Raising) => LadderOperator::raising(x2_minus_1(), cx(n)),
        (FamilyKind::Legendre, Lowering) => LadderOperator::lowering(x2_minus_1(), cx(n)),
        (FamilyKind::AssocLegendre { m }, dir) => {
            let a = W::one_minus_x2_pow(rat(1, 2));
            let b = W::from_poly(cx(int(*m as i64))).mul(&W::one_minus_x2_pow(rat(-1, 2)));
            match dir {
                Raising => LadderOperator::raising(a, b),
                Lowering => LadderOperator::lowering(a, b),
            }
        }
        (FamilyKind::Gegenbauer { lambda }, Raising) => {
            let c = -(&n - &one + lambda * int(2));
            LadderOperator::raising(one_minus_x2(), cx(c))
        }
        (FamilyKind::Gegenbauer { .. }, Lowering) => LadderOperator::raising(one_minus_x2(), cx(n)),
        (FamilyKind::ChebyshevU, Raising) => LadderOperator::raising(x2_minus_1(), cx(&n + int(2))),
        (FamilyKind::ChebyshevU, Lowering) => LadderOperator::raising(one_minus_x2(), cx(n)),
        (FamilyKind::ChebyshevT, dir) => {
            if spec.n == 0 {
                return Err(Error::InvalidParameters("chebyshev-T operators need m > 0".into()));
            }
            let a = one_minus_x2().scale(&(one.clone() / &n));
            let a = match dir {
                Raising => -a,
                Lowering => a,
            };
            LadderOperator::raising(a, Poly::x())
        }
        (FamilyKind::Laguerre { alpha }, Raising) => {
            LadderOperator::raising(Poly::x(), poly(&[alpha + &n, -one.clone()]))
        }
        (FamilyKind::Laguerre { .. }, Lowering) => LadderOperator::raising(-Poly::x(), Poly::constant(n)),
        (FamilyKind::Hermite, Raising) => LadderOperator::raising(Poly::constant(-one), Poly::x()),
        (FamilyKind::Hermite, Lowering) => LadderOperator::lowering(Poly::constant(-one), Poly::x()),
        (FamilyKind::LaguerreRadial { alpha }, Raising) => LadderOperator::raising(
            cx(rat(1, 2)),
            poly(&[alpha + &n, Rational::zero(), -one.clone()]),
        ),
        (FamilyKind::LaguerreRadial { .. }, Lowering) => {
            LadderOperator::raising(cx(rat(-1, 2)), Poly::constant(n))
        }
        (FamilyKind::CoulombRadial { l }, Raising) => {
            LadderOperator::raising(Poly::one(), centrifugal(*l))
        }
        (FamilyKind::Oscillator3d { l }, Raising) => {
            let half_r = W::from_poly(cx(rat(1, 2)));
            let b = W::from_ratfn(centrifugal(*l)).add(&half_r)?;
            LadderOperator::raising(Poly::one(), b)
        }
        (FamilyKind::CoulombRadial { .. } | FamilyKind::Oscillator3d { .. }, Lowering) => Err(
            Error::InvalidParameters(format!("{} has no lowering operator in the catalog", spec.kind.name())),
        ),
    }
}

/// `(ℓ+1)/r`.
fn centrifugal(l: u32) -> crate::RatFn {
    crate::RatFn::new(Poly::constant(int(l as i64 + 1)), Poly::x()).expect("nonzero denominator")
}

fn step(op: &LadderOperator, u: &Poly, scale: &Rational) -> Result<Poly> {
    Ok(op.apply(&W::from_poly(u.clone()))?.as_polynomial()?.scale(scale))
}

/// Generates the `n`-th member by iterating the family's raising operator
/// from the ground state, normalized by the printed scalar recursions.
pub fn generate_ladder(spec: &FamilySpec) -> Result<Poly> {
    match &spec.kind {
        FamilyKind::Hermite => hermite_via_oscillator(spec.n),
        FamilyKind::AssocLegendre { m } => {
            let (_, iterated) = assoc_legendre_forms(spec.n, *m)?;
            iterated.as_polynomial()
        }
        kind => Ok(generate_ladder_table(kind, spec.n)?.pop().expect("nonempty table")),
    }
}

/// Members `0..=n_max` in one pass of the iteration. For assoc-legendre the
/// entries below `m` are zero.
pub fn generate_ladder_table(kind: &FamilyKind, n_max: u32) -> Result<Vec<Poly>> {
    let up = |k: u32| make_operator(&FamilySpec { kind: kind.clone(), n: k }, Direction::Raising);
    let inv = |k: u32| rat(1, k as i64);
    let iterate = |first: Poly, next: &dyn Fn(u32, &Poly) -> Result<Poly>| -> Result<Vec<Poly>> {
        let mut out = vec![first];
        for k in 1..=n_max {
            let p = next(k, out.last().expect("nonempty"))?;
            out.push(p);
        }
        Ok(out)
    };
    match kind {
        FamilyKind::Legendre | FamilyKind::Laguerre { .. } | FamilyKind::LaguerreRadial { .. } => {
            iterate(Poly::one(), &|k, u| step(&up(k)?, u, &inv(k)))
        }
        FamilyKind::Gegenbauer { .. } => iterate(Poly::one(), &|k, u| step(&up(k)?, u, &-inv(k))),
        FamilyKind::ChebyshevU => iterate(Poly::one(), &|k, u| step(&up(k - 1)?, u, &inv(k))),
        FamilyKind::ChebyshevT => iterate(Poly::one(), &|k, u| {
            if k == 1 {
                Ok(Poly::x())
            } else {
                step(&up(k - 1)?, u, &Rational::one())
            }
        }),
        FamilyKind::Hermite => (0..=n_max).map(hermite_via_oscillator).collect(),
        FamilyKind::AssocLegendre { m } => (0..=n_max)
            .map(|n| if n < *m { Ok(Poly::zero()) } else { generate_ladder(&FamilySpec::new(kind.clone(), n)?) })
            .collect(),
        FamilyKind::CoulombRadial { .. } | FamilyKind::Oscillator3d { .. } => Err(Error::InvalidParameters(
            format!("{} exposes factorizations only", kind.name()),
        )),
    }
}

/// Representative parameters for every family in the catalog, each paired
/// with the directions it supports.
pub fn catalog() -> Vec<(FamilySpec, Vec<Direction>)> {
    use Direction::*;
    let both = || vec![Raising, Lowering];
    let spec = |k, n| FamilySpec::new(k, n).expect("valid catalog entry");
    vec![
        (spec(FamilyKind::Legendre, 3), both()),
        (spec(FamilyKind::AssocLegendre { m: 1 }, 3), both()),
        (spec(FamilyKind::Gegenbauer { lambda: rat(3, 2) }, 3), both()),
        (spec(FamilyKind::ChebyshevT, 3), both()),
        (spec(FamilyKind::ChebyshevU, 3), both()),
        (spec(FamilyKind::Laguerre { alpha: rat(1, 2) }, 3), both()),
        (spec(FamilyKind::Hermite, 3), both()),
        (spec(FamilyKind::LaguerreRadial { alpha: rat(1, 2) }, 3), both()),
        (spec(FamilyKind::CoulombRadial { l: 1 }, 0), vec![Raising]),
        (spec(FamilyKind::Oscillator3d { l: 1 }, 0), vec![Raising]),
    ]
}

#[cfg(test)]
mod tests;
