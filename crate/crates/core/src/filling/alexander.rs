//! The Alexander-polynomial coefficient condition for L-space knots: every
//! nonzero coefficient is `±1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::parse_poly;
use crate::certificate::Certificate;
use crate::error::{Error, Result};

/// Integer coefficients, constant term first, with a nonzero leading
/// coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderPoly {
    pub coefficients: Vec<BigInt>,
}

impl AlexanderPoly {
    pub fn new(mut coefficients: Vec<BigInt>) -> Result<Self> {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            return Err(Error::Domain("the Alexander polynomial must be nonzero".into()));
        }
        Ok(AlexanderPoly { coefficients })
    }

    pub fn from_i64(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Parses a univariate polynomial in `x` with integer coefficients.
    pub fn parse(text: &str) -> Result<Self> {
        let p = parse_poly(text)?;
        let vars = p.used_vars();
        if vars.len() > 1 {
            return Err(Error::Domain(format!("expected a polynomial in one variable, got {}", vars.join(", "))));
        }
        let name = vars.first().cloned().unwrap_or_else(|| "x".to_string());
        let coeffs = p.univariate_coeffs(&name);
        if coeffs.iter().any(|c| !c.is_integer()) {
            return Err(Error::Domain("Alexander polynomial coefficients must be integers".into()));
        }
        Self::new(coeffs.into_iter().map(|c| c.to_integer()).collect())
    }

    /// `±x^k · p`.
    pub fn times_unit(&self, negate: bool, k: usize) -> AlexanderPoly {
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coefficients.iter().map(|x| if negate { -x } else { x.clone() }));
        AlexanderPoly { coefficients: c }
    }
}

pub fn alexander_coefficient_check(p: &AlexanderPoly) -> bool {
    p.coefficients.iter().filter(|c| !c.is_zero()).all(|c| c.abs().is_one())
}

/// Parses and checks; errors only on unparsable or zero input.
pub fn alexander_check_text(text: &str) -> Result<(AlexanderPoly, bool)> {
    let p = AlexanderPoly::parse(text)?;
    let ok = alexander_coefficient_check(&p);
    Ok((p, ok))
}

pub fn alexander_certificate(text: &str, p: &AlexanderPoly, ok: bool) -> Certificate {
    let mut c = Certificate::new("alexander", json!({"poly": text}));
    c.fact(
        "every nonzero coefficient is +1 or -1",
        "coefficient inspection",
        json!({"coefficients": p.coefficients.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "holds": ok}),
    );
    c.fact(
        "note: a knot with an L-space surgery has Alexander polynomial coefficients in {+1, -1}; the identifications of the surgered manifolds and the genus argument are known results, not computed here",
        "static note",
        json!({}),
    );
    c.with_verdict(if ok { "true" } else { "false" })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(!alexander_check_text("x^4-2*x^3+3*x^2-2*x+1").unwrap().1);
        assert!(alexander_check_text("1").unwrap().1);
        assert!(alexander_check_text("x^2 - x + 1").unwrap().1);
    }

    #[test]
    fn zero_and_empty_are_domain_errors() {
        assert!(matches!(AlexanderPoly::from_i64(&[]), Err(Error::Domain(_))));
        assert!(matches!(alexander_check_text("0"), Err(Error::Domain(_))));
        assert!(matches!(alexander_check_text("x/2"), Err(Error::Domain(_))));
    }

    #[test]
    fn leading_zeros_trimmed() {
        let p = AlexanderPoly::from_i64(&[1, -1, 0, 0]).unwrap();
        assert_eq!(p.coefficients.len(), 2);
    }
}
