//! Recursive-descent parser for element expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := ['-' | '+'] factor ('*' factor)*
//! factor  := primary ('^' integer)?
//! primary := integer | identifier | '(' expr ')'
//! ```
//!
//! Identifiers are `[A-Za-z_][A-Za-z0-9_]*` followed by any number of `'`.
//! They resolve to generators first and then to the caller's symbol table.

use std::collections::HashMap;

use super::{Element, Gca, GcaError};
use crate::linalg::F3;

pub type SymbolTable = HashMap<String, Element>;

pub fn parse_element(gca: &Gca, src: &str, symbols: &SymbolTable) -> Result<Element, GcaError> {
    let mut p = Parser { gca, symbols, src: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    gca: &'a Gca,
    symbols: &'a SymbolTable,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> GcaError {
        GcaError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Element, GcaError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc.add_scaled(&t, F3::ONE);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc.add_scaled(&t, F3::TWO);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, GcaError> {
        let mut sign = F3::ONE;
        loop {
            if self.eat(b'-') {
                sign = -sign;
            } else if !self.eat(b'+') {
                break;
            }
        }
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = self.gca.mul(&acc, &f);
        }
        Ok(acc.scale(sign))
    }

    fn factor(&mut self) -> Result<Element, GcaError> {
        let base = self.primary()?;
        if self.eat(b'^') {
            self.skip_ws();
            let exp = self.integer()?.ok_or_else(|| self.err("expected exponent"))?;
            let exp = u32::try_from(exp).map_err(|_| self.err("exponent too large"))?;
            return Ok(self.gca.pow(&base, exp));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<Option<u64>, GcaError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<u64>().map(Some).map_err(|_| GcaError::Parse { pos: start, msg: "integer overflow".into() })
    }

    fn primary(&mut self) -> Result<Element, GcaError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?.expect("digit present");
                Ok(self.gca.one().scale(F3::new((v % 3) as i64)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                while self.pos < self.src.len() && self.src[self.pos] == b'\'' {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
                if let Some(i) = self.gca.generator_index(name) {
                    Ok(self.gca.generator(i))
                } else if let Some(e) = self.symbols.get(name) {
                    Ok(e.clone())
                } else {
                    Err(GcaError::UnknownGenerator(name.to_string()))
                }
            }
            Some(_) => Err(self.err("expected a number, identifier or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
