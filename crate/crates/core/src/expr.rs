//! Parser for object expressions.
//!
//! ```text
//! expr   := term ("+" term)*
//! term   := [mult "*"] atom
//! atom   := "Q(" int ")" "[" int "]" | preset | "0"
//! preset := ("P" | "A" | "Am0") ":" nat | "Gm"
//! ```
//!
//! Whitespace between tokens is ignored. Positions in errors are 0-based
//! character offsets into the input.

use crate::error::{Error, Result};
use crate::motive::{GradedTateObject, Preset};

pub fn parse_object(input: &str) -> Result<GradedTateObject> {
    let mut p = Parser { chars: input.chars().collect(), pos: 0 };
    let obj = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("`+` or end of input"));
    }
    Ok(obj)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, expected: &str) -> Error {
        Error::Parse { position: self.pos, expected: expected.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn expr(&mut self) -> Result<GradedTateObject> {
        let mut acc = self.term()?;
        while self.eat('+') {
            acc = acc.direct_sum(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GradedTateObject> {
        let mult = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            let n = self.nat()?;
            if self.eat('*') {
                Some(n)
            } else if n == 0 {
                return Ok(GradedTateObject::zero());
            } else {
                self.pos = start;
                return Err(self.error("`Q(`, a preset, `0`, or a multiplicity followed by `*`"));
            }
        } else {
            None
        };
        let atom = self.atom()?;
        Ok(match mult {
            Some(m) => atom.repeat(m),
            None => atom,
        })
    }

    fn atom(&mut self) -> Result<GradedTateObject> {
        let word = self.ident();
        match word.as_str() {
            "Q" => {
                self.expect('(')?;
                let w = self.int()?;
                self.expect(')')?;
                self.expect('[')?;
                let a = self.int()?;
                self.expect(']')?;
                Ok(GradedTateObject::generator(w, a))
            }
            "Gm" => Ok(Preset::Gm.object()),
            "P" | "A" | "Am0" => {
                self.expect(':')?;
                let at = self.pos;
                let n = self.nat()?;
                let n = u32::try_from(n).map_err(|_| Error::Parse { position: at, expected: "a small natural number".into() })?;
                Preset::from_name(&word, n)
                    .map(Preset::object)
                    .map_err(|_| Error::Parse { position: at, expected: format!("n >= 1 for `{word}`") })
            }
            "" => Err(self.error("`Q(`, `P:`, `A:`, `Am0:`, `Gm`, or `0`")),
            _ => {
                self.pos -= word.chars().count();
                Err(self.error("`Q(`, `P:`, `A:`, `Am0:`, `Gm`, or `0`"))
            }
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
            if self.pos == start && !self.chars[self.pos].is_ascii_alphabetic() {
                break;
            }
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("a natural number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| Error::Parse { position: start, expected: "a natural number that fits in 64 bits".into() })
    }

    fn int(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        let at = self.pos;
        let n = self.nat()?;
        let n = i64::try_from(n).map_err(|_| Error::Parse { position: at, expected: "an integer that fits in 64 bits".into() })?;
        Ok(if negative { -n } else { n })
    }
}
