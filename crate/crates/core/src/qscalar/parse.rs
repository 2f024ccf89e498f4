//! Recursive-descent parser for rational expressions in `q`.
//!
//! Accepts the printed form `(q^2-1)/(q)` as well as the looser
//! expressions people type by hand: `q + q^-1`, `2q^3`, `(1+q^2)^2/(q-1)`.

use core::fmt;

use num_bigint::BigInt;

use super::QScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseQScalarError {
    pub pos: usize,
    pub msg: &'static str,
}

impl fmt::Display for ParseQScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}", self.msg, self.pos)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

type PResult = Result<QScalar, ParseQScalarError>;

impl<'a> Parser<'a> {
    fn err(&self, msg: &'static str) -> ParseQScalarError {
        ParseQScalarError { pos: self.pos, msg }
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

    fn expr(&mut self) -> PResult {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
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
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d).map_err(|_| self.err("division by zero"))?;
                }
                // implicit multiplication: `2q`, `q(q+1)`, `(q)(q)`
                Some(b'q') | Some(b'(') => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> PResult {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            if e < 0 && base.is_zero() {
                return Err(self.err("negative power of zero"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ParseQScalarError> {
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
            let e = self.exponent()?;
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
            return Ok(if neg { -e } else { e });
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected exponent"));
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 = s.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> PResult {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(QScalar::q_pow(1))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n = BigInt::parse_bytes(s.as_bytes(), 10).ok_or_else(|| self.err("bad integer"))?;
                Ok(QScalar::from_bigint(n))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(super) fn parse(s: &str) -> PResult {
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

impl core::str::FromStr for QScalar {
    type Err = ParseQScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{qint, ratio};
    use alloc::string::ToString;

    #[test]
    fn parses_printed_forms() {
        for x in [
            ratio(&[-1, 0, 1], &[0, 1]),
            ratio(&[3, -2, 0, 5], &[1, 0, 7]),
            QScalar::from_int(-12),
            QScalar::zero(),
            qint(3),
            -qint(4).inv().unwrap(),
        ] {
            let s = x.to_string();
            assert_eq!(s.parse::<QScalar>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn parses_hand_written() {
        assert_eq!("q + q^-1".parse::<QScalar>().unwrap(), qint(2));
        assert_eq!("2q^2".parse::<QScalar>().unwrap(), QScalar::monomial(2, 2));
        assert_eq!(
            "(q^2 - 1)/(q - 1)".parse::<QScalar>().unwrap(),
            QScalar::laurent(0, &[1, 1])
        );
        assert_eq!("q^(-2)".parse::<QScalar>().unwrap(), QScalar::q_pow(-2));
    }

    #[test]
    fn rejects_garbage() {
        assert!("q +".parse::<QScalar>().is_err());
        assert!("1/0".parse::<QScalar>().is_err());
        assert!("x".parse::<QScalar>().is_err());
        assert!("(q".parse::<QScalar>().is_err());
    }
}
