use crate::weighted::WeightedExpression;

/// One factor of an operator chain such as `D [(x²-1)^{3/2} D]^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainStep {
    Multiply(WeightedExpression),
    Differentiate,
}

impl ChainStep {
    pub fn scale(c: crate::Rational) -> Self {
        Self::Multiply(WeightedExpression::constant(c))
    }
}

/// Applies the steps right to left, as the chain is written.
pub fn apply_chain(steps: &[ChainStep], u: &WeightedExpression) -> WeightedExpression {
    steps.iter().rev().fold(u.clone(), |acc, step| match step {
        ChainStep::Multiply(w) => w.mul(&acc),
        ChainStep::Differentiate => acc.differentiate(),
    })
}
