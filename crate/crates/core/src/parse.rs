//! A small recursive-descent parser shared by the element types.
//!
//! Grammar (whitespace ignored, `-` is the same as `+` in characteristic 2):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary  := '-'? factor
//! factor := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```

use crate::error::{Error, Result};

/// The operations a parse target has to supply.
pub(crate) trait Parseable: Sized + Clone {
    fn from_parity(odd: bool) -> Self;
    fn variable(name: char) -> Option<Self>;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Result<Self>;
    fn pow(&self, exp: u64) -> Self;
}

pub(crate) fn parse<T: Parseable>(input: &str) -> Result<T> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty expression"));
    }
    let value = p.expr::<T>()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(value),
        Some(c) => Err(p.error(&format!("unexpected character '{}'", c as char))),
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr<T: Parseable>(&mut self) -> Result<T> {
        let mut acc = self.term::<T>()?;
        while matches!(self.peek(), Some(b'+' | b'-')) {
            self.pos += 1;
            let rhs = self.term::<T>()?;
            acc = acc.add(&rhs);
        }
        Ok(acc)
    }

    fn term<T: Parseable>(&mut self) -> Result<T> {
        let mut acc = self.unary::<T>()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.unary::<T>()?;
                    acc = acc.mul(&rhs);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.unary::<T>()?;
                    acc = acc.div(&rhs).map_err(|e| match e {
                        Error::Parse { .. } => e,
                        other => self.error(&other.to_string()),
                    })?;
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    let rhs = self.unary::<T>()?;
                    acc = acc.mul(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary<T: Parseable>(&mut self) -> Result<T> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        self.factor()
    }

    fn factor<T: Parseable>(&mut self) -> Result<T> {
        let base = self.atom::<T>()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.integer()?;
            let exp = u64::try_from(exp).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom<T: Parseable>(&mut self) -> Result<T> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr::<T>()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(T::from_parity(n % 2 == 1))
            }
            Some(c) if c.is_ascii_alphabetic() => match T::variable(c as char) {
                Some(v) => {
                    self.pos += 1;
                    Ok(v)
                }
                None => Err(self.error(&format!("unknown variable '{}'", c as char))),
            },
            Some(c) => Err(self.error(&format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<u128> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<u128>().ok())
            .ok_or_else(|| self.error("integer out of range"))
    }
}
