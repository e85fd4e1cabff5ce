//! Text grammar for quaternions:
//!
//! ```text
//! quaternion := sign? term (sign term)*
//! term       := rational unit? | unit
//! rational   := integer ("/" positive-integer)?
//! unit       := "i" | "j" | "k"
//! ```
//!
//! Whitespace is ignored anywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Quaternion, Rational};
use crate::error::{Error, Result};

struct Cursor {
    chars: Vec<(usize, char)>,
    at: usize,
    len: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            at: 0,
            len: src.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.len, |&(p, _)| p)
    }

    fn bump(&mut self) {
        self.at += 1;
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') {
            Some(true)
        } else {
            None
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let mut value = BigInt::zero();
        let mut any = false;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value * 10u32 + d;
            any = true;
            self.bump();
        }
        any.then_some(value)
    }

    fn rational(&mut self) -> Result<Option<Rational>> {
        let Some(numer) = self.digits() else {
            return Ok(None);
        };
        if !self.eat('/') {
            return Ok(Some(Rational::from_integer(numer)));
        }
        let pos = self.pos();
        match self.digits() {
            Some(d) if d.is_zero() => Err(Error::parse(pos, "zero denominator")),
            Some(d) => Ok(Some(Rational::new(numer, d))),
            None => Err(Error::parse(pos, "expected denominator")),
        }
    }

    fn unit(&mut self) -> Option<usize> {
        let idx = match self.peek()? {
            'i' => 1,
            'j' => 2,
            'k' => 3,
            _ => return None,
        };
        self.bump();
        Some(idx)
    }

    /// One signed term; returns (component index, coefficient).
    fn term(&mut self, negative: bool) -> Result<(usize, Rational)> {
        let pos = self.pos();
        let coef = self.rational()?;
        let unit = self.unit();
        let (idx, mut coef) = match (coef, unit) {
            (Some(c), Some(u)) => (u, c),
            (Some(c), None) => (0, c),
            (None, Some(u)) => (u, Rational::one()),
            (None, None) => {
                let message = match self.peek() {
                    Some(c) => format!("unexpected character {c:?}"),
                    None => "unexpected end of input".to_owned(),
                };
                return Err(Error::parse(pos, message));
            }
        };
        if negative {
            coef = -coef;
        }
        Ok((idx, coef))
    }
}

pub(crate) fn parse_quaternion(text: &str) -> Result<Quaternion> {
    let mut cur = Cursor::new(text);
    let mut parts: [Rational; 4] = Default::default();
    let mut negative = cur.sign().unwrap_or(false);
    loop {
        let (idx, coef) = cur.term(negative)?;
        parts[idx] += coef;
        match cur.sign() {
            Some(neg) => negative = neg,
            None if cur.peek().is_none() => break,
            None => {
                return Err(Error::parse(
                    cur.pos(),
                    format!("expected '+' or '-', found {:?}", cur.peek().unwrap()),
                ))
            }
        }
    }
    let [w, x, y, z] = parts;
    Ok(Quaternion::new(w, x, y, z))
}

/// Parse a signed rational such as `-3/4`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut cur = Cursor::new(text);
    let negative = cur.sign().unwrap_or(false);
    let pos = cur.pos();
    let value = cur
        .rational()?
        .ok_or_else(|| Error::parse(pos, "expected a rational"))?;
    if cur.peek().is_some() {
        return Err(Error::parse(cur.pos(), "trailing input"));
    }
    Ok(if negative { -value } else { value })
}
