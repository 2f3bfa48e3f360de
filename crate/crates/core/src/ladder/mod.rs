//! First-order ladder operators and their generalized factorization
//! `f1 D g2 + h` with an arbitrary drift.

mod chain;

use std::fmt;

use crate::algebra::integrate_rational;
use crate::error::{Error, Result};
use crate::weighted::{Sign, WeightedExpression};
use crate::RatFn;

pub use chain::{apply_chain, ChainStep};

/// How the derivative part of an operator is composed.
///
/// `Raising` means `u ↦ a u' + b u`; `Lowering` means `u ↦ -(a u)' + b u`.
/// The names follow the two factorization shapes, not whether the operator
/// raises or lowers an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Raising,
    Lowering,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderOperator {
    a: WeightedExpression,
    b: WeightedExpression,
    form: Form,
}

impl LadderOperator {
    pub fn new(a: WeightedExpression, b: WeightedExpression, form: Form) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidParameters("derivative coefficient a must be nonzero".into()));
        }
        Ok(Self { a, b, form })
    }

    /// `a D + b`.
    pub fn raising(a: impl Into<WeightedExpression>, b: impl Into<WeightedExpression>) -> Result<Self> {
        Self::new(a.into(), b.into(), Form::Raising)
    }

    /// `-D a + b`.
    pub fn lowering(a: impl Into<WeightedExpression>, b: impl Into<WeightedExpression>) -> Result<Self> {
        Self::new(a.into(), b.into(), Form::Lowering)
    }

    pub fn a(&self) -> &WeightedExpression {
        &self.a
    }

    pub fn b(&self) -> &WeightedExpression {
        &self.b
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn apply(&self, u: &WeightedExpression) -> Result<WeightedExpression> {
        let bu = self.b.mul(u);
        match self.form {
            Form::Raising => self.a.mul(&u.differentiate()).add(&bu),
            Form::Lowering => self.a.mul(u).differentiate().neg().add(&bu),
        }
    }

    /// `b / a`, which must be rational for the operator to be factorizable.
    fn drift_free_ratio(&self) -> Result<RatFn> {
        let ratio = self.b.div(&self.a)?;
        ratio
            .as_ratfn()
            .cloned()
            .ok_or_else(|| Error::OutOfClass(format!("b/a = {ratio} is not a rational function")))
    }

    /// Converts a drift `h` into the reduced drift `t = h / a`.
    pub fn reduced_drift(&self, h: &RatFn) -> Result<RatFn> {
        let t = WeightedExpression::from_ratfn(h.clone()).div(&self.a)?;
        t.as_ratfn()
            .cloned()
            .ok_or_else(|| Error::OutOfClass(format!("h/a = {t} is not a rational function")))
    }
}

impl fmt::Display for LadderOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.form {
            Form::Raising => write!(f, "[{}] D + [{}]", self.a, self.b),
            Form::Lowering => write!(f, "-D [{}] + [{}]", self.a, self.b),
        }
    }
}

/// `A = f1 D g2 + h` (raising form) or `A = -g2 D f1 + h` (lowering form),
/// with `f1 g2 = a` and `h = drift · a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub form: Form,
    pub f1: WeightedExpression,
    pub g2: WeightedExpression,
    pub h: WeightedExpression,
    /// The reduced drift `t = h / a`.
    pub drift: RatFn,
}

impl Factorization {
    /// Applies the operator in its factorized shape.
    pub fn apply(&self, u: &WeightedExpression) -> Result<WeightedExpression> {
        let hu = self.h.mul(u);
        match self.form {
            Form::Raising => self.f1.mul(&self.g2.mul(u).differentiate()).add(&hu),
            Form::Lowering => self.g2.mul(&self.f1.mul(u).differentiate()).neg().add(&hu),
        }
    }
}

/// Solves for `f1`, `g2` given the reduced drift `t`.
///
/// Raising form: `g2 = exp ∫(b/a - t)`, `f1 = a / g2`.
/// Lowering form: `f1 = a exp ∫(t - b/a)`, `g2 = a / f1`.
/// Integration constants are zero, so both are fixed up to a scalar.
pub fn factorize(op: &LadderOperator, drift: &RatFn) -> Result<Factorization> {
    let ratio = op.drift_free_ratio()?;
    let out_of_class = |e: Error| match e {
        Error::RepeatedPole(_) | Error::IrreducibleFactor(_) | Error::RootSearchLimit(_) => {
            Error::OutOfClass(e.to_string())
        }
        other => other,
    };
    let h = op.a.mul_ratfn(drift);
    let (f1, g2) = match op.form {
        Form::Raising => {
            let integral = integrate_rational(&ratio.sub(drift)).map_err(out_of_class)?;
            let g2 = WeightedExpression::exp_integral(&integral, Sign::Plus);
            (op.a.div(&g2)?, g2)
        }
        Form::Lowering => {
            let integral = integrate_rational(&drift.sub(&ratio)).map_err(out_of_class)?;
            let f1 = op.a.mul(&WeightedExpression::exp_integral(&integral, Sign::Plus));
            let g2 = op.a.div(&f1)?;
            (f1, g2)
        }
    };
    Ok(Factorization {
        form: op.form,
        f1,
        g2,
        h,
        drift: drift.clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationCheck {
    pub label: String,
    pub passed: bool,
    pub discrepancy: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorizationReport {
    pub checks: Vec<FactorizationCheck>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&FactorizationCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn record(&mut self, label: String, lhs: Result<WeightedExpression>, rhs: Result<WeightedExpression>) {
        let outcome = match (lhs, rhs) {
            (Ok(l), Ok(r)) => match l.sub(&r) {
                Ok(d) if d.is_zero() => None,
                Ok(d) => Some(d.to_string()),
                Err(e) => Some(e.to_string()),
            },
            (Err(e), _) | (_, Err(e)) => Some(e.to_string()),
        };
        self.checks.push(FactorizationCheck {
            label,
            passed: outcome.is_none(),
            discrepancy: outcome,
        });
    }
}

/// Checks the factorization invariants and, for every tester `u`, that the
/// factorized shape acts exactly like the operator.
pub fn verify_factorization(
    op: &LadderOperator,
    fac: &Factorization,
    testers: &[WeightedExpression],
) -> FactorizationReport {
    let mut report = FactorizationReport::default();
    report.record("f1*g2 = a".into(), Ok(fac.f1.mul(&fac.g2)), Ok(op.a.clone()));
    report.record("h = t*a".into(), Ok(fac.h.clone()), Ok(op.a.mul_ratfn(&fac.drift)));
    for (i, u) in testers.iter().enumerate() {
        report.record(format!("tester #{i}: {u}"), fac.apply(u), op.apply(u));
    }
    report
}

#[cfg(test)]
mod tests;
