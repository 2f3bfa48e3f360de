use thiserror::Error;

/// Failures raised by the exact algebra, the weighted-expression class and
/// the ladder machinery built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    /// The denominator is not square-free; carries the repeated factor.
    #[error("repeated pole: denominator shares the factor {0} with its derivative")]
    RepeatedPole(String),
    /// The denominator has a factor with no rational root.
    #[error("irreducible factor {0} has no rational roots")]
    IrreducibleFactor(String),
    #[error("rational root search exceeded its budget on {0}")]
    RootSearchLimit(String),
    #[error("integrand outside the supported class: {0}")]
    OutOfClass(String),
    #[error("not a polynomial: {0}")]
    NotPolynomial(String),
    /// Two weighted expressions with different weights cannot be summed
    /// into a single member of the class.
    #[error("cannot add expressions with different weights: {0}")]
    IncompatibleTerms(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unknown identity or suite `{0}`")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
