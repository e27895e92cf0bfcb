//! Reads polynomials in the printed syntax, e.g. `1 + x^(1/2)*y - 2*alpha:e1^-1`.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{LaurentPoly, Monomial, Var};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn is_ident(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_' || b == b':'
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(1, format!("at column {}: {}", self.pos + 1, msg.into()))
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero();
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.term()?;
            if neg {
                acc -= &t;
            } else {
                acc += t;
            }
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let d = self.factor()?;
                let inv = d.inverse().map_err(|_| self.err(format!("cannot divide by `{d}`")))?;
                acc = &acc * &inv;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let halves = self.exponent()?;
        base.pow_half(halves)
            .map_err(|_| self.err(format!("cannot raise `{base}` to {halves}/2")))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 = s.parse().map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -v } else { v })
    }

    /// Exponent as a number of halves.
    fn exponent(&mut self) -> Result<i32> {
        let v = if self.eat(b'(') {
            let num = self.integer()?;
            let v = if self.eat(b'/') {
                match self.integer()? {
                    2 => num,
                    1 => 2 * num,
                    _ => return Err(self.err("only halves are supported")),
                }
            } else {
                2 * num
            };
            if !self.eat(b')') {
                return Err(self.err("expected `)`"));
            }
            v
        } else {
            2 * self.integer()?
        };
        i32::try_from(v).map_err(|_| self.err("exponent too large"))
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(b) if b.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = s.parse().expect("digits");
                Ok(LaurentPoly::term(Monomial::one(), n))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && is_ident(self.src[self.pos]) {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Var::from_name(s)
                    .map(LaurentPoly::var)
                    .ok_or_else(|| self.err(format!("unknown variable `{s}`")))
            }
            Some(b) => Err(self.err(format!("unexpected `{}`", b as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let e = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}
