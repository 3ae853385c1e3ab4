//! Exact rationals. Backed by `num_rational::BigRational`, which keeps the
//! fraction reduced with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `"num/den"`, or just `"num"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Always `"num/den"`, the form used inside certificates.
pub fn format_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let err = || ParseError::BadNumber(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(ParseError::ZeroDenominator);
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        // decimal literal, converted exactly
        let neg = ip.trim_start().starts_with('-');
        let ip = ip.trim().trim_start_matches(['-', '+']);
        let digits = format!("{}{}", if ip.is_empty() { "0" } else { ip }, fp);
        let n: BigInt = digits.parse().map_err(|_| err())?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let r = Rational::new(n, d);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| err())?;
    Ok(Rational::from_integer(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // huge numerators or denominators: shift both down before dividing
        let nb = r.numer().bits() as i64;
        let db = r.denom().bits() as i64;
        let shift_n = (nb - 900).max(0) as usize;
        let shift_d = (db - 900).max(0) as usize;
        let n = (r.numer() >> shift_n).to_f64().unwrap_or(0.0);
        let d = (r.denom() >> shift_d).to_f64().unwrap_or(1.0);
        n / d * 2f64.powi((shift_n as i32) - (shift_d as i32))
    })
}

/// Exact conversion of a finite double.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}

/// Number of bits in the larger of numerator and denominator.
pub fn bit_length(r: &Rational) -> u64 {
    r.numer().bits().max(r.denom().bits())
}

/// A rational of small height in `[lo, hi]`, found by bisecting the dyadic
/// grid; keeps certificate endpoints short.
pub fn simple_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_integer() {
        return lo.clone();
    }
    let fl = lo.floor();
    if &(&fl + Rational::one()) <= hi {
        return fl + Rational::one();
    }
    let mut den = BigInt::from(2);
    loop {
        let n = (lo.numer() * &den).div_ceil(lo.denom());
        let cand = Rational::new(n, den.clone());
        if &cand <= hi {
            return cand;
        }
        den <<= 1;
    }
}

pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// `10^-k`
pub fn ten_pow_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_and_parses() {
        assert_eq!(format_fraction(&int(3)), "3/1");
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("0.8684").unwrap(), rat(8684, 10000));
        assert_eq!(parse_rational("-2.5").unwrap(), rat(-5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn simple_point_is_inside() {
        let lo = rat(868, 1000);
        let hi = rat(8685, 10000);
        let m = simple_between(&lo, &hi);
        assert!(lo <= m && m <= hi);
        assert_eq!(simple_between(&rat(1, 3), &rat(5, 2)), int(1));
    }

    #[test]
    fn big_to_f64() {
        let big = Rational::new(num_traits::pow(BigInt::from(3), 2000), num_traits::pow(BigInt::from(3), 1999));
        assert!((to_f64(&big) - 3.0).abs() < 1e-12);
    }
}
