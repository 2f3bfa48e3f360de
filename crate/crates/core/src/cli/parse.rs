//! Recursive-descent parser for drift expressions.
//!
//! ```text
//! expr   = term (("+" | "-") term)*
//! term   = unary (("*" | "/") unary)*
//! unary  = ("+" | "-") unary | power
//! power  = atom ("^" INTEGER)?
//! atom   = INTEGER | VAR | "(" expr ")"
//! ```
//!
//! `VAR` is `x` or `r`; one expression may use only one of them. Rational
//! literals are written as divisions, `3/2`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::rational::Rational;
use crate::{Poly, RatFn};

/// Largest accepted exponent in `base ^ k`.
pub const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at column {}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the source.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected(&'static str),
    Unexpected(char),
    TrailingInput,
    ExponentOverflow(String),
    DivisionByZero,
    MixedVariables,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Expected(what) => write!(f, "expected {what}"),
            Self::Unexpected(c) => write!(f, "unexpected `{c}`"),
            Self::TrailingInput => f.write_str("unexpected trailing input"),
            Self::ExponentOverflow(k) => write!(f, "exponent {k} exceeds {MAX_EXPONENT}"),
            Self::DivisionByZero => f.write_str("division by zero"),
            Self::MixedVariables => f.write_str("expression mixes the variables x and r"),
        }
    }
}

/// Parses `src` into its canonical rational function. Whitespace is ignored.
pub fn parse_expression(src: &str) -> Result<RatFn, ParseError> {
    let mut parser = Parser {
        src: src.as_bytes(),
        pos: 0,
        var: None,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error(ParseErrorKind::TrailingInput));
    }
    Ok(value)
}

/// Like [`parse_expression`], but the result must be a polynomial.
pub fn parse_polynomial(src: &str) -> Result<Poly, ParseError> {
    let value = parse_expression(src)?;
    value.as_polynomial().cloned().ok_or(ParseError {
        position: 0,
        kind: ParseErrorKind::Expected("a polynomial"),
    })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    var: Option<u8>,
}

impl Parser<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.pos, kind }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFn, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFn, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(b'/') {
                let at = self.pos;
                let rhs = self.unary()?;
                acc = acc.div(&rhs).map_err(|_| ParseError {
                    position: at,
                    kind: ParseErrorKind::DivisionByZero,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFn, ParseError> {
        if self.eat(b'-') {
            Ok(self.unary()?.neg())
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RatFn, ParseError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let Some(digits) = self.digits() else {
            return Err(self.error(ParseErrorKind::Expected("a nonnegative integer exponent")));
        };
        let k = digits
            .parse::<u32>()
            .ok()
            .filter(|k| *k <= MAX_EXPONENT)
            .ok_or(ParseError {
                position: start,
                kind: ParseErrorKind::ExponentOverflow(digits),
            })?;
        Ok(base.powi(k as i64).expect("nonnegative power"))
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<RatFn, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error(ParseErrorKind::Expected("`)`")));
                }
                Ok(inner)
            }
            Some(c @ (b'x' | b'r')) => {
                if self.var.is_some_and(|v| v != c) {
                    return Err(self.error(ParseErrorKind::MixedVariables));
                }
                self.var = Some(c);
                self.pos += 1;
                Ok(RatFn::from_poly(Poly::x()))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits().expect("at least one digit");
                let n: BigInt = digits.parse().expect("ascii digits");
                Ok(RatFn::constant(Rational::from_integer(n)))
            }
            Some(_) => {
                let c = std::str::from_utf8(&self.src[self.pos..])
                    .ok()
                    .and_then(|s| s.chars().next())
                    .unwrap_or('?');
                Err(self.error(ParseErrorKind::Unexpected(c)))
            }
            None => Err(self.error(ParseErrorKind::Expected("a number, variable or `(`"))),
        }
    }
}
