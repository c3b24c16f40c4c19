//! Parser for the text polynomial grammar:
//!
//! ```text
//! integer ::= [0-9]+
//! var     ::= declared name
//! atom    ::= integer | var | '(' expr ')'
//! power   ::= atom ['^' integer]
//! term    ::= power ('*' power)*
//! expr    ::= ['-'] term (('+'|'-') term)*
//! ```
//!
//! Coefficients are integers; multiplication is always explicit.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    ring: Arc<Ring>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, ring: Arc<Ring>) -> Self {
        Parser { input: text.as_bytes(), pos: 0, ring }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn identifier(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.input.len() && self.input[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
            while self.pos < self.input.len()
                && (self.input[self.pos].is_ascii_alphanumeric() || self.input[self.pos] == b'_')
            {
                self.pos += 1;
            }
        }
        if self.pos == start {
            return Err(self.err("expected a variable name"));
        }
        Ok(std::str::from_utf8(&self.input[start..self.pos]).unwrap().to_string())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.ring.clone(), BigRational::from(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.identifier()?;
                match self.ring.var_index(&name) {
                    Some(i) => Polynomial::var(self.ring.clone(), i),
                    None => Err(Error::UnknownVariable { pos: start, name }),
                }
            }
            _ => Err(self.err("expected an integer, a variable or '('")),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut p = self.power()?;
        while self.peek() == Some(b'*') {
            self.bump();
            p = p.mul(&self.power()?).expect("same ring");
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut p = if self.peek() == Some(b'-') {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    p = p.add(&self.term()?).expect("same ring");
                }
                Some(b'-') => {
                    self.bump();
                    p = p.sub(&self.term()?).expect("same ring");
                }
                _ => return Ok(p),
            }
        }
    }

    fn parse(mut self) -> Result<Polynomial> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(p)
    }
}

/// Parse `text` into an expanded normal-form polynomial over `ring`.
pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    Parser::new(text, ring.clone()).parse()
}

/// Convenience wrapper that builds the ring from variable names.
pub fn parse_with_vars<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Polynomial> {
    let ring = Ring::new(vars)?;
    parse_polynomial(text, &ring)
}

#[allow(dead_code)]
fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    fn ring3() -> Arc<Ring> {
        Ring::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn single_monomial() {
        let p = parse_polynomial("x*y*z", &ring3()).unwrap();
        assert_eq!(p.num_terms(), 1);
        let (m, c) = &p.terms()[0];
        assert_eq!(m, &Monomial::new(vec![1, 1, 1]));
        assert_eq!(c, &BigRational::one());
    }

    #[test]
    fn simis_sextic_is_homogeneous_degree_six() {
        let p = parse_polynomial("4*(x^2+y^2+x*z)^3-27*(x^2+y^2)^2*z^2", &ring3()).unwrap();
        assert!(p.is_homogeneous());
        assert_eq!(p.degree(), Some(6));
    }

    #[test]
    fn cancellation_gives_zero() {
        let p = parse_polynomial("x^2-x^2", &ring3()).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_polynomial("x*+y", &ring3()) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_polynomial("x+w", &ring3()) {
            Err(Error::UnknownVariable { name, pos }) => {
                assert_eq!(name, "w");
                assert_eq!(pos, 2);
            }
            other => panic!("expected unknown variable, got {other:?}"),
        }
        assert!(parse_polynomial("x)", &ring3()).is_err());
        assert!(parse_polynomial("", &ring3()).is_err());
    }

    #[test]
    fn leading_minus_and_zero_exponent() {
        let p = parse_polynomial("-x+x", &ring3()).unwrap();
        assert!(p.is_zero());
        let q = parse_polynomial("x^0", &ring3()).unwrap();
        assert!(q.is_constant());
        assert!(!q.is_zero());
    }

    #[test]
    fn print_parse_idempotent() {
        for text in [
            "x*y*z",
            "4*(x^2+y^2+x*z)^3-27*(x^2+y^2)^2*z^2",
            "x^4*y+x^3*y^2+y^5+x*y^2*z^2+(x^2+x*y+y^2)*z^3",
            "-3*x^2+2*y*z-z^2",
        ] {
            let p = parse_polynomial(text, &ring3()).unwrap();
            let q = parse_polynomial(&p.to_string(), &ring3()).unwrap();
            assert_eq!(p, q, "round trip failed for {text}");
        }
    }
}
