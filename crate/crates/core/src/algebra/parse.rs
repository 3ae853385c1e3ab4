//! Polynomial text format: single lowercase letters as variables, integer
//! or `p/q` coefficients, `+ - * ^` and parentheses. Division is accepted
//! only by a nonzero constant.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::ParseError;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.bump();
                -self.term()?
            }
            Some(b'+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.bump();
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = acc * self.power()?;
                }
                Some(b'/') => {
                    self.bump();
                    let d = self.power()?;
                    if !d.is_constant() {
                        return Err(ParseError::NonConstantDivisor);
                    }
                    let c = d.constant_term();
                    if c.is_zero() {
                        return Err(ParseError::ZeroDenominator);
                    }
                    acc = acc.scale(&(Rational::from_integer(1.into()) / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            self.peek();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let k: u32 = text.parse().map_err(|_| ParseError::BadExponent(text.to_string()))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd),
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                match self.bump() {
                    Some(b')') => Ok(e),
                    Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos - 1)),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(b'-') => {
                self.bump();
                Ok(-self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let n: BigInt = text.parse().map_err(|_| ParseError::BadNumber(text.to_string()))?;
                Ok(MultiPoly::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.bump();
                let name = (c as char).to_string();
                if let Some(next) = self.src.get(self.pos) {
                    if next.is_ascii_alphanumeric() {
                        return Err(ParseError::UnexpectedChar(*next as char, self.pos));
                    }
                }
                Ok(MultiPoly::var(&name))
            }
            Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<MultiPoly, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) => Err(ParseError::UnexpectedChar(c as char, p.pos)),
    }
}

impl FromStr for MultiPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn parses_curve() {
        let p = parse_poly("(s-2)*(s+1)^2*t^4 - (s-2)*(s+2)*(s+1)*t^2 - 1").unwrap();
        let q = parse_poly("(-2 - 3*s + s^3)*t^4 + (4 + 4*s - s^2 - s^3)*t^2 - 1").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_poly("3/4*x - 1/2").unwrap();
        assert_eq!(p.constant_term(), rat(-1, 2));
        assert_eq!(p.coeff_in("x", 1).constant_term(), rat(3, 4));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("xy").is_err());
        assert!(parse_poly("x/y").is_err());
        assert!(parse_poly("x/0").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("x^y").is_err());
    }

    #[test]
    fn round_trips_display() {
        let p = parse_poly("x^4 - 2*x^3 + 3*x^2 - 2*x + 1").unwrap();
        assert_eq!(p.to_text(), "x^4 - 2*x^3 + 3*x^2 - 2*x + 1");
        assert_eq!(parse_poly(&p.to_text()).unwrap(), p);
    }
}
