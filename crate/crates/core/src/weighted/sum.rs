use std::fmt;

use super::WeightedExpression;

/// Finite sum of weighted expressions with pairwise distinct weights.
///
/// Used where a result legitimately mixes weights, e.g. a polynomial minus a
/// term that still carries `e(x)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedSum {
    terms: Vec<WeightedExpression>,
}

impl WeightedSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = WeightedExpression>>(terms: I) -> Self {
        let mut out = Self::zero();
        for t in terms {
            out.push(t);
        }
        out
    }

    /// Adds a term, merging it into a like term when one exists.
    pub fn push(&mut self, term: WeightedExpression) {
        if term.is_zero() {
            return;
        }
        match self.terms.iter().position(|t| t.same_weight(&term)) {
            Some(i) => {
                let merged = self.terms[i].add(&term).expect("same weight");
                if merged.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i] = merged;
                }
            }
            None => self.terms.push(term),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for t in &other.terms {
            out.push(t.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for t in &other.terms {
            out.push(t.neg());
        }
        out
    }

    pub fn terms(&self) -> &[WeightedExpression] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term, if the sum collapses to one member of the class.
    pub fn as_single(&self) -> Option<WeightedExpression> {
        match self.terms.len() {
            0 => Some(WeightedExpression::zero()),
            1 => Some(self.terms[0].clone()),
            _ => None,
        }
    }
}

impl From<WeightedExpression> for WeightedSum {
    fn from(w: WeightedExpression) -> Self {
        Self::from_terms([w])
    }
}

impl fmt::Display for WeightedSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|t| format!("[{t}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}
