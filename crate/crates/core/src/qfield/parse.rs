//! Parser for the textual form produced by `Display`.
//!
//! Accepts sums, products and quotients of integers and powers of `q`, with
//! parentheses: `q - q^-1`, `3/2*q^2 + 1`, `(q^2 - 1) / (q - 1)`.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{BigRat, LaurentPoly, QError, RatFunc};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> QError {
        QError::Parse(format!("{} at offset {}", msg, self.pos))
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

    fn integer(&mut self) -> Result<BigInt, QError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn expr(&mut self) -> Result<RatFunc, QError> {
        let mut acc = self.product()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.product()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<RatFunc, QError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.factor()?;
            } else if self.eat(b'/') {
                let rhs = self.factor()?;
                acc = acc.checked_div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc, QError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'q') => {
                self.pos += 1;
                let mut exp = 1i64;
                if self.eat(b'^') {
                    let neg = self.eat(b'-');
                    let k: i64 = self
                        .integer()?
                        .try_into()
                        .map_err(|_| self.err("exponent out of range"))?;
                    exp = if neg { -k } else { k };
                }
                Ok(RatFunc::q_pow(exp))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFunc::from_laurent(LaurentPoly::constant(BigRat::from_integer(n))))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

impl FromStr for RatFunc {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self, QError> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let v = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

/// Parses a rational number written `p`, `-p` or `p/q`.
pub fn parse_bigrat(s: &str) -> Result<BigRat, QError> {
    let s = s.trim();
    let bad = || QError::Parse(format!("not a rational number: {:?}", s));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(QError::DivisionByZero);
    }
    Ok(BigRat::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        let f: RatFunc = "q - q^-1".parse().unwrap();
        assert_eq!(f, RatFunc::q_minus_q_inv());
        let g: RatFunc = "(q^2 - 1) / (q - 1)".parse().unwrap();
        assert_eq!(g.to_string(), "q + 1");
        let h: RatFunc = "3/2*q^2 + 1".parse().unwrap();
        assert_eq!(h.to_string(), "3/2*q^2 + 1");
    }

    #[test]
    fn rejects_garbage() {
        assert!("q +".parse::<RatFunc>().is_err());
        assert!("x".parse::<RatFunc>().is_err());
        assert!("1/0".parse::<RatFunc>().is_err());
        assert!("(q".parse::<RatFunc>().is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_bigrat("3/2").unwrap(), BigRat::new(3.into(), 2.into()));
        assert_eq!(parse_bigrat("-4").unwrap(), BigRat::from_integer((-4).into()));
        assert!(parse_bigrat("1/0").is_err());
        assert!(parse_bigrat("a").is_err());
    }
}
