//! Text format for polynomials.
//!
//! A file starts with a header line `vars: w x y z` and then holds one
//! polynomial per line, e.g. `w^2 - x*z` or `1/2*x^3 + 3y`. Blank lines and
//! lines starting with `#` are ignored.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{Polynomial, Ring, RingError};
use crate::coefficients::{Field, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing `vars:` header line")]
    MissingHeader,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Coefficient(#[from] FieldError),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unexpected `{found}` at offset {offset} in `{input}`")]
    Unexpected {
        input: String,
        offset: usize,
        found: String,
    },
    #[error("empty polynomial")]
    Empty,
}

struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += self.peek().unwrap().len_utf8();
        }
        &self.input[start..self.pos]
    }

    fn error(&self) -> ParseError {
        ParseError::Unexpected {
            input: self.input.to_string(),
            offset: self.pos,
            found: self.peek().map(String::from).unwrap_or_else(|| "end of input".into()),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        BigInt::from_str(digits).map_err(|_| self.error())
    }

    fn exponent(&mut self) -> Result<u16, ParseError> {
        self.skip_ws();
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| self.error())
    }
}

impl<F: Field> Ring<F> {
    pub fn parse_polynomial(&self, input: &str) -> Result<Polynomial<F>, ParseError> {
        let mut cur = Cursor { input, pos: 0 };
        let mut terms = Vec::new();
        cur.skip_ws();
        if cur.peek().is_none() {
            return Err(ParseError::Empty);
        }
        let mut first = true;
        loop {
            cur.skip_ws();
            if cur.peek().is_none() {
                break;
            }
            let negative = if cur.eat('-') {
                true
            } else if cur.eat('+') || first {
                false
            } else {
                return Err(cur.error());
            };
            first = false;
            terms.push(self.parse_term(&mut cur, negative)?);
        }
        Ok(self.from_terms(terms))
    }

    fn parse_term(
        &self,
        cur: &mut Cursor<'_>,
        negative: bool,
    ) -> Result<(F::Elem, Monomial), ParseError> {
        cur.skip_ws();
        let (mut num, mut den) = (BigInt::one(), BigInt::one());
        let mut has_coeff = false;
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            num = cur.integer()?;
            if cur.eat('/') {
                den = cur.integer()?;
            }
            has_coeff = true;
        }
        if negative {
            num = -num;
        }
        let mut exps = vec![0u16; self.nvars()];
        let mut has_var = false;
        loop {
            if has_coeff || has_var {
                let save = cur.pos;
                if !cur.eat('*') {
                    cur.pos = save;
                }
            }
            cur.skip_ws();
            if !cur.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
                break;
            }
            let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
            let idx = self
                .vars()
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| ParseError::UnknownVariable(name.to_string()))?;
            let e = if cur.eat('^') { cur.exponent()? } else { 1 };
            exps[idx] = exps[idx].checked_add(e).ok_or_else(|| cur.error())?;
            has_var = true;
        }
        if !has_coeff && !has_var {
            return Err(cur.error());
        }
        let c = self.field().from_ratio(&num, &den)?;
        Ok((c, Monomial::from_exponents(&exps)))
    }
}

/// A parsed polynomial file: variable names plus generators.
#[derive(Debug, Clone)]
pub struct PolynomialFile<F: Field> {
    pub ring: Ring<F>,
    pub polynomials: Vec<Polynomial<F>>,
}

/// Parses the `vars:` header and one polynomial per remaining line.
pub fn parse_polynomial_file<F: Field>(
    field: F,
    order: MonomialOrder,
    text: &str,
) -> Result<PolynomialFile<F>, ParseError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or(ParseError::MissingHeader)?;
    let names = header
        .strip_prefix("vars:")
        .ok_or(ParseError::MissingHeader)?
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect();
    let ring = Ring::with_names(field, names, order)?;
    let polynomials = lines
        .map(|l| ring.parse_polynomial(l))
        .collect::<Result<_, _>>()?;
    Ok(PolynomialFile { ring, polynomials })
}

/// Inverse of [`parse_polynomial_file`].
pub fn format_polynomial_file<F: Field>(ring: &Ring<F>, polys: &[Polynomial<F>]) -> String {
    let mut out = format!("vars: {}\n", ring.vars().join(" "));
    for p in polys {
        out.push_str(&ring.format(p));
        out.push('\n');
    }
    out
}
