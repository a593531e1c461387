//! Parser for the ring-spec grammar.
//!
//! ```text
//! ringspec := term ( 'x' term )*
//! term     := 'Z' nat | 'Z' nat '[x]/(' poly (',' poly)* ')'
//! poly     := ['-'] polyterm (('+'|'-') polyterm)*
//! polyterm := nat ['*'] ['x' ['^' nat]] | 'x' ['^' nat]
//! ```
//!
//! Whitespace is ignored between tokens. Errors carry the 1-based column
//! of the offending character.

use super::spec::{Poly, RingSpec, MAX_MODULUS};
use crate::error::{Error, Result};

const MAX_EXPONENT: u64 = 1 << 16;

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.syntax("empty ring spec"));
    }
    let mut terms = vec![p.term()?];
    loop {
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'x') => {
                p.pos += 1;
                terms.push(p.term()?);
            }
            Some(c) => {
                return Err(p.syntax(&format!(
                    "unexpected character '{}' after a complete term",
                    c as char
                )))
            }
        }
    }
    Ok(if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        RingSpec::Product(terms)
    })
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, msg: &str) -> Error {
        Error::Parse {
            col: self.pos + 1,
            msg: msg.to_string(),
        }
    }

    fn semantic(&self, msg: &str) -> Error {
        self.semantic_at(self.pos + 1, msg)
    }

    fn semantic_at(&self, col: usize, msg: &str) -> Error {
        Error::Semantic {
            col,
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, c: u8, what: &str) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(what))
        }
    }

    /// Contiguous decimal digits. Returns the value and its starting column.
    fn nat(&mut self) -> Result<(u64, usize)> {
        let start = self.pos;
        let mut val: u64 = 0;
        let mut any = false;
        while let Some(c) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            any = true;
            val = val
                .checked_mul(10)
                .and_then(|v| v.checked_add((c - b'0') as u64))
                .ok_or_else(|| self.semantic_at(start + 1, "number too large"))?;
            self.pos += 1;
        }
        if !any {
            return Err(self.syntax("expected a number"));
        }
        Ok((val, start + 1))
    }

    fn term(&mut self) -> Result<RingSpec> {
        self.skip_ws();
        self.expect(b'Z', "expected 'Z'")?;
        self.skip_ws();
        let (n, ncol) = self.nat()?;
        if n < 2 {
            return Err(self.semantic_at(ncol, "ring modulus must be at least 2"));
        }
        if n > MAX_MODULUS {
            return Err(self.semantic_at(ncol, "ring modulus too large"));
        }
        self.skip_ws();
        if self.peek() != Some(b'[') {
            return Ok(RingSpec::Zn(n));
        }
        self.pos += 1;
        self.skip_ws();
        match self.peek() {
            Some(b'x') => self.pos += 1,
            Some(c) if c.is_ascii_alphabetic() => {
                return Err(self.semantic(&format!(
                    "polynomial variable must be 'x', found '{}'",
                    c as char
                )))
            }
            _ => return Err(self.syntax("expected 'x'")),
        }
        self.skip_ws();
        self.expect(b']', "expected ']'")?;
        self.skip_ws();
        self.expect(b'/', "expected '/'")?;
        self.skip_ws();
        self.expect(b'(', "expected '('")?;
        let mut relators = vec![self.poly(n)?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    relators.push(self.poly(n)?);
                }
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.syntax("expected ',' or ')' in relator list")),
            }
        }
        if !relators.iter().any(|r| r.is_monic()) {
            return Err(self.semantic(
                "no monic relator: at least one relator must have leading coefficient 1 \
                 after reduction mod the base modulus",
            ));
        }
        Ok(RingSpec::QuotientPoly {
            modulus: n,
            relators,
        })
    }

    /// One relator, returned already reduced mod `n`.
    fn poly(&mut self, n: u64) -> Result<Poly> {
        let mut coeffs: Vec<i64> = Vec::new();
        self.skip_ws();
        let mut sign: i64 = 1;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let (c, k) = self.poly_term()?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            coeffs[k] = coeffs[k]
                .checked_add(sign * c)
                .ok_or_else(|| self.semantic("coefficient overflow"))?;
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(Poly::new(coeffs).reduced_mod(n))
    }

    /// A single monomial: (coefficient, power of x).
    fn poly_term(&mut self) -> Result<(i64, usize)> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let (raw, col) = self.nat()?;
                let coeff = i64::try_from(raw)
                    .map_err(|_| self.semantic_at(col, "coefficient too large"))?;
                self.skip_ws();
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        self.skip_ws();
                        match self.peek() {
                            Some(b'x') => {
                                self.pos += 1;
                                Ok((coeff, self.exponent_opt()?))
                            }
                            Some(v) if v.is_ascii_alphabetic() => Err(self.semantic(&format!(
                                "polynomial variable must be 'x', found '{}'",
                                v as char
                            ))),
                            _ => Err(self.syntax("expected 'x' after '*'")),
                        }
                    }
                    Some(b'x') => {
                        self.pos += 1;
                        Ok((coeff, self.exponent_opt()?))
                    }
                    _ => Ok((coeff, 0)),
                }
            }
            Some(b'x') => {
                self.pos += 1;
                Ok((1, self.exponent_opt()?))
            }
            Some(c) if c.is_ascii_alphabetic() => Err(self.semantic(&format!(
                "polynomial variable must be 'x', found '{}'",
                c as char
            ))),
            _ => Err(self.syntax("expected a coefficient or 'x'")),
        }
    }

    fn exponent_opt(&mut self) -> Result<usize> {
        // a bare 'x' has exponent 1
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let (k, col) = self.nat()?;
        if k == 0 {
            return Err(self.semantic_at(col, "exponent must be at least 1"));
        }
        if k > MAX_EXPONENT {
            return Err(self.semantic_at(col, "exponent too large"));
        }
        Ok(k as usize)
    }
}
