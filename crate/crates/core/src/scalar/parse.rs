//! Parser for the exact-amplitude grammar used in exports and golden files.
//!
//! ```text
//! expr   := "0" | term (("+" | "-") term)*
//! term   := ["+" | "-"] factor ("*" factor)*
//! factor := int ["/" int] | "(" ["-"] int ["/" int] ")"
//!         | "sqrt(" int ["/" int] ")" | "h" ["^" int]
//! ```
//!
//! Whitespace is ignored between tokens. Repeated factors multiply, so
//! `sqrt(3/8)*h*h` is accepted; the canonical writer never emits that.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{sqrt_rational, HScalar, RadicalSum, Rational, ScalarError};

/// Bound on literal length; keeps radicand factoring cheap on hostile input.
const MAX_DIGITS: usize = 30;
/// Bound on a single `h` exponent.
const MAX_POWER: u32 = 256;

impl FromStr for HScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser::new(s).expr()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Self { src: s.as_bytes(), pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> ScalarError {
        ScalarError::Parse { position: self.pos, message: message.into() }
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

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), ScalarError> {
        if self.eat(byte) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", byte as char)))
        }
    }

    fn expr(&mut self) -> Result<HScalar, ScalarError> {
        if self.peek().is_none() {
            return Err(self.err("empty expression"));
        }
        let mut total = self.term()?;
        loop {
            match self.peek() {
                None => return Ok(total),
                Some(b'+') | Some(b'-') => {
                    let t = self.term()?;
                    total += t;
                }
                Some(c) => return Err(self.err(format!("unexpected '{}'", c as char))),
            }
        }
    }

    fn term(&mut self) -> Result<HScalar, ScalarError> {
        let mut negative = false;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            if c == b'-' {
                negative = !negative;
            }
        }
        let mut value = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            value = &value * &f;
        }
        Ok(if negative { -value } else { value })
    }

    fn factor(&mut self) -> Result<HScalar, ScalarError> {
        match self.peek() {
            Some(b'h') => {
                self.pos += 1;
                let power = if self.eat(b'^') {
                    let n = self.integer()?;
                    u32::try_from(&n)
                        .ok()
                        .filter(|p| *p <= MAX_POWER)
                        .ok_or_else(|| self.err("exponent out of range"))?
                } else {
                    1
                };
                Ok(HScalar::monomial(RadicalSum::one(), power))
            }
            Some(b's') => {
                if !self.src[self.pos..].starts_with(b"sqrt") {
                    return Err(self.err("unknown identifier"));
                }
                self.pos += 4;
                self.expect(b'(')?;
                let r = self.rational()?;
                self.expect(b')')?;
                if r.is_zero() {
                    return Ok(HScalar::zero());
                }
                if r.is_negative() {
                    return Err(self.err("negative radicand"));
                }
                Ok(HScalar::constant(sqrt_rational(&r)?))
            }
            Some(b'(') => {
                self.pos += 1;
                let negative = self.eat(b'-');
                let r = self.rational()?;
                self.expect(b')')?;
                Ok(HScalar::from_rational(if negative { -r } else { r }))
            }
            Some(c) if c.is_ascii_digit() => Ok(HScalar::from_rational(self.rational()?)),
            Some(c) => Err(self.err(format!("unexpected '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn rational(&mut self) -> Result<Rational, ScalarError> {
        let numerator = self.integer()?;
        let denominator = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
        if denominator.is_zero() {
            return Err(self.err("zero denominator"));
        }
        Ok(Rational::new(numerator, denominator))
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = &self.src[start..self.pos];
        if digits.is_empty() {
            return Err(self.err("expected digits"));
        }
        if digits.len() > MAX_DIGITS {
            return Err(self.err("integer literal too long"));
        }
        let text = std::str::from_utf8(digits).expect("ascii digits");
        Ok(text.parse().expect("validated digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> HScalar {
        s.parse().unwrap()
    }

    #[test]
    fn parses_canonical_example() {
        let v = p("(-3/2)*h + (1/2)*sqrt(2)*h^3");
        assert_eq!(v.to_string(), "(-3/2)*h + (1/2)*sqrt(2)*h^3");
        assert_eq!(v.coefficient(1), RadicalSum::from_rational(Rational::new((-3).into(), 2.into())));
    }

    #[test]
    fn accepts_transcription_forms() {
        // -h·√(3/8) = -(1/4)√6 h
        assert_eq!(p("-sqrt(3/8)*h"), p("(-1/4)*sqrt(6)*h"));
        assert_eq!(p("9/16*h^4"), p("(9/16)*h^4"));
        assert_eq!(p("h - h"), HScalar::zero());
        assert_eq!(p("0"), HScalar::zero());
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "h^", "sqrt(-2)", "(1/0)", "1 +", "x", "sqrt(2", "h^99999", "2 3", "3h"] {
            assert!(bad.parse::<HScalar>().is_err(), "{bad:?} should fail");
        }
    }
}
