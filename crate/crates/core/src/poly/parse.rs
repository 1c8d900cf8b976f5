//! A small expression grammar for polynomials:
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor (('*'|'/') factor)*
//! factor  := primary ['^' integer]
//! primary := integer | ident | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{var_list, MultiPoly, Rational};
use crate::error::{Error, Result};

/// Parse `src`. If `declared` is given, every identifier must be one of its
/// names and the result uses exactly that variable list.
pub fn parse_poly(src: &str, declared: Option<&[String]>) -> Result<MultiPoly> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        declared,
    };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    match declared {
        Some(names) => {
            let vars: Arc<[String]> = var_list(names);
            e.embed(&vars)
        }
        None => Ok(e),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    declared: Option<&'a [String]>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    let c = d.constant_term();
                    if !d.is_constant() || c.is_zero() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division only by nonzero constants".into(),
                        });
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected exponent"));
            }
            let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let e: u32 = s.parse().map_err(|_| Error::Parse {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            if e > u16::MAX as u32 {
                return Err(Error::Parse {
                    pos: start,
                    msg: "exponent too large".into(),
                });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = s.parse().expect("digits");
                Ok(MultiPoly::constant(Rational::from(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(names) = self.declared {
                    if !names.iter().any(|n| n == name) {
                        return Err(Error::UnknownVariable(name.to_string()));
                    }
                }
                Ok(MultiPoly::var(name))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let a = parse_poly("1 + 2*x^2", None).unwrap();
        let b = parse_poly("(2*x)*x + 1", None).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly("-x^2", None).unwrap().to_string(), "-x^2");
    }

    #[test]
    fn rational_literals() {
        let a = parse_poly("3/4*t - t/2", None).unwrap();
        assert_eq!(a, parse_poly("1/4*t", None).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_poly("", None).is_err());
        assert!(parse_poly("x +", None).is_err());
        assert!(parse_poly("x / y", None).is_err());
        assert!(parse_poly("(x", None).is_err());
        assert!(parse_poly("x $ y", None).is_err());
        let names = vec!["x".to_string()];
        assert_eq!(
            parse_poly("x + y", Some(&names)),
            Err(Error::UnknownVariable("y".into()))
        );
    }

    #[test]
    fn declared_order_is_kept() {
        let names = vec!["a".to_string(), "b".to_string()];
        let p = parse_poly("b", Some(&names)).unwrap();
        assert_eq!(&p.vars()[..], &names[..]);
    }
}
