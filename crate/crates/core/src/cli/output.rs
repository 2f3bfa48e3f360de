//! Serializable records for generated family members.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};
use crate::weighted::{PowerFactor, WeightedExpression as W};
use crate::{Poly, RatFn};

/// Non-polynomial part of a record: `e^{iπ·phase} Π (x - root)^exponent exp(expArg)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    /// `[root, exponent]` pairs.
    pub powers: Vec<[String; 2]>,
    /// Ascending coefficients of the exponent polynomial.
    #[serde(rename = "expArg")]
    pub exp_arg: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(skip)]
    pub family: String,
    pub n: u32,
    /// Ascending coefficients as exact `p/q` strings.
    pub coefficients: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub family: String,
    pub params: BTreeMap<String, String>,
    pub records: Vec<OutputRecord>,
}

fn strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(Rational::to_string).collect()
}

fn parse_all(items: &[String]) -> Result<Vec<Rational>> {
    items.iter().map(|s| parse_rational(s)).collect()
}

impl OutputRecord {
    pub fn polynomial(family: &str, n: u32, p: &Poly) -> Self {
        Self {
            family: family.to_string(),
            n,
            coefficients: strings(p),
            weight: None,
        }
    }

    /// Splits `w` into its polynomial factor and weight. The rational factor
    /// of `w` must be a polynomial.
    pub fn weighted(family: &str, n: u32, w: &W) -> Result<Self> {
        let poly = w
            .coeff()
            .as_polynomial()
            .ok_or_else(|| Error::NotPolynomial(format!("rational factor of {w}")))?;
        let trivial = w.powers().is_empty() && w.exp_arg().is_zero() && w.phase().is_zero();
        let weight = (!trivial).then(|| Weight {
            powers: w
                .powers()
                .iter()
                .map(|pf| [pf.root.to_string(), pf.exponent.to_string()])
                .collect(),
            exp_arg: strings(w.exp_arg()),
            phase: (!w.phase().is_zero()).then(|| w.phase().to_string()),
        });
        Ok(Self {
            family: family.to_string(),
            n,
            coefficients: strings(poly),
            weight,
        })
    }

    pub fn poly(&self) -> Result<Poly> {
        Ok(Poly::from_coeffs(parse_all(&self.coefficients)?))
    }

    /// The full value, weight included.
    pub fn value(&self) -> Result<W> {
        let poly = self.poly()?;
        let Some(weight) = &self.weight else {
            return Ok(W::from_poly(poly));
        };
        let powers = weight
            .powers
            .iter()
            .map(|[root, exponent]| Ok(PowerFactor::new(parse_rational(root)?, parse_rational(exponent)?)))
            .collect::<Result<Vec<_>>>()?;
        let phase = match &weight.phase {
            Some(p) => parse_rational(p)?,
            None => Rational::zero(),
        };
        let exp_arg = Poly::from_coeffs(parse_all(&weight.exp_arg)?);
        Ok(W::from_parts(phase, RatFn::from_poly(poly), powers, exp_arg))
    }

    /// `n:c0,c1,...`, ascending; a weight follows after `;`.
    pub fn csv_row(&self) -> String {
        let coeffs = if self.coefficients.is_empty() {
            "0".to_string()
        } else {
            self.coefficients.join(",")
        };
        let mut row = format!("{}:{coeffs}", self.n);
        if let Some(w) = &self.weight {
            let powers: Vec<String> = w.powers.iter().map(|[r, e]| format!("({r} {e})")).collect();
            row.push_str(&format!(";powers={};expArg={}", powers.join(""), w.exp_arg.join(",")));
            if let Some(p) = &w.phase {
                row.push_str(&format!(";phase={p}"));
            }
        }
        row
    }

    /// `Y_n(x) = ...` with descending powers.
    pub fn latex_row(&self, symbol: &str, var: &str) -> Result<String> {
        let mut body = latex_poly(&self.poly()?, var);
        if let Some(w) = &self.weight {
            let mut factors = Vec::new();
            if let Some(p) = &w.phase {
                factors.push(format!("e^{{i\\pi {}}}", latex_rational(&parse_rational(p)?)));
            }
            for [root, exponent] in &w.powers {
                let base = latex_poly(&Poly::linear(parse_rational(root)?), var);
                factors.push(format!("({base})^{{{}}}", latex_rational(&parse_rational(exponent)?)));
            }
            let exp_arg = Poly::from_coeffs(parse_all(&w.exp_arg)?);
            if !exp_arg.is_zero() {
                factors.push(format!("e^{{{}}}", latex_poly(&exp_arg, var)));
            }
            body = format!("\\left({body}\\right) {}", factors.join(" "));
        }
        Ok(format!("{symbol}_{{{}}}({var}) = {body}", self.n))
    }
}

fn latex_rational(q: &Rational) -> String {
    let sign = if q.is_negative() { "-" } else { "" };
    let a = q.abs();
    if a.is_integer() {
        format!("{sign}{a}")
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

/// Descending-order LaTeX for a polynomial.
pub fn latex_poly(p: &Poly, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let a = c.abs();
        let unit = a == Rational::from_integer(1.into());
        if k == 0 || !unit {
            out.push_str(&latex_rational(&a));
        }
        match k {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{{{k}}}")),
        }
    }
    out
}
