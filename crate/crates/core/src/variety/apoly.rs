//! The A-polynomial in the compact form `−z⁴A − Bm² + z³Am⁴`, validated by
//! exact identities and by numeric boundary characters.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use num_traits::Zero;
use serde_json::json;

use super::classify::{sample_component, Component};
use super::reconstruct::{reconstruct_representation, ReconstructionMode};
use crate::algebra::rational::int;
use crate::algebra::{parse_poly, MultiPoly};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::realroots::sturm::{count_real_roots, RealInterval};

/// Accepted `|A-poly(z, m)|` at a reconstructed boundary character.
pub const APOLY_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct APolynomialForm {
    #[serde(with = "crate::certificate::poly_str")]
    pub a: MultiPoly,
    #[serde(with = "crate::certificate::poly_str")]
    pub b: MultiPoly,
    #[serde(with = "crate::certificate::poly_str")]
    pub expanded: MultiPoly,
}

impl APolynomialForm {
    pub fn m137() -> Self {
        let a = a_poly();
        let b = b_poly();
        APolynomialForm { expanded: compact_form(&a, &b), a, b }
    }
}

/// `A = −1 − 2z − 3z² − z³ + z⁴ + 3z⁵ + 2z⁶ + z⁷`.
pub fn a_poly() -> MultiPoly {
    parse_poly("-1 - 2*z - 3*z^2 - z^3 + z^4 + 3*z^5 + 2*z^6 + z^7").expect("static polynomial")
}

/// The degree-14 coefficient of `−m²`.
pub fn b_poly() -> MultiPoly {
    parse_poly(
        "1 + 3*z + 2*z^2 + z^3 - 2*z^4 - 4*z^5 - z^6 - 4*z^7 - z^8 - 4*z^9 - 2*z^10 + z^11 + 2*z^12 + 3*z^13 + z^14",
    )
    .expect("static polynomial")
}

/// `−z⁴A − Bm² + z³Am⁴`.
pub fn compact_form(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let z = MultiPoly::var("z");
    let m = MultiPoly::var("m");
    let t0 = -&(&z.pow(4) * a);
    let t2 = -&(b * &m.pow(2));
    let t4 = &(&z.pow(3) * a) * &m.pow(4);
    &(&t0 + &t2) + &t4
}

/// The A-polynomial as printed: three `m`-coefficients.
pub fn printed_a_polynomial() -> MultiPoly {
    parse_poly(
        "(z^4+2*z^5+3*z^6+z^7-z^8-3*z^9-2*z^10-z^11) \
         + m^2*(-1-3*z-2*z^2-z^3+2*z^4+4*z^5+z^6+4*z^7+z^8+4*z^9+2*z^10-z^11-2*z^12-3*z^13-z^14) \
         + m^4*(-z^3-2*z^4-3*z^5-z^6+z^7+3*z^8+2*z^9+z^10)",
    )
    .expect("static polynomial")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundarySample {
    pub s: f64,
    pub t: f64,
    pub z: Complex64,
    pub m: Complex64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct APolyValidation {
    pub form: APolynomialForm,
    pub matches_printed: bool,
    pub a_factorization: bool,
    pub a_vanishes_at_one: bool,
    pub a_real_roots: usize,
    pub samples: Vec<BoundarySample>,
    pub max_residual: f64,
}

impl APolyValidation {
    pub fn verified(&self) -> bool {
        self.matches_printed
            && self.a_factorization
            && self.a_vanishes_at_one
            && self.a_real_roots == 1
            && self.samples.len() >= 20
            && self.max_residual < APOLY_TOLERANCE
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut c = Certificate::new("a_polynomial", json!({"samples": self.samples.len()}));
        c.fact(
            "-z^4 A - B m^2 + z^3 A m^4 expands to the stored A-polynomial term for term",
            "exact expansion",
            json!({"expanded": self.form.expanded.to_text(), "holds": self.matches_printed}),
        );
        c.fact("A = (z-1)(z^2+z+1)^3", "exact expansion", json!({"holds": self.a_factorization}));
        c.fact(
            "A(1) = 0 and A has exactly one real root",
            "exact evaluation and Sturm count",
            json!({"a_at_one_is_zero": self.a_vanishes_at_one, "real_roots": self.a_real_roots}),
        );
        c.fact(
            "reconstructed boundary characters (z, m = upper-left entry of rho(mu)) satisfy the A-polynomial numerically",
            "double-precision evaluation",
            json!({"samples": self.samples.len(), "max_residual": format!("{:e}", self.max_residual), "tolerance": format!("{:e}", APOLY_TOLERANCE)}),
        );
        c.with_verdict(if self.verified() { "VERIFIED" } else { "FAILED" })
    }
}

/// Reconstructed `(z, m)` pairs: `per_component` curve points from each of
/// the six real components, in complex mode with `|z| ≤ 1`.
pub fn boundary_samples(per_component: usize) -> Result<Vec<BoundarySample>> {
    let f = APolynomialForm::m137().expanded;
    let mut out = Vec::new();
    for c in Component::all() {
        for pt in sample_component(c, per_component)? {
            let r = reconstruct_representation(&pt, ReconstructionMode::Complex)?;
            let (z, m) = (r.params.z, r.params.m);
            let residual = f.eval_complex(&[("z", z), ("m", m)]).norm();
            out.push(BoundarySample { s: r.s, t: r.t, z, m, residual });
        }
    }
    Ok(out)
}

pub fn validate_a_polynomial() -> Result<APolyValidation> {
    let form = APolynomialForm::m137();
    let matches_printed = form.expanded == printed_a_polynomial();
    let a_factorization = form.a == parse_poly("(z-1)*(z^2+z+1)^3").expect("static polynomial");
    let a_vanishes_at_one = form.a.eval(&[("z", int(1))]).is_zero();
    let a_real_roots = count_real_roots(&form.a, "z", &RealInterval::whole_line());
    let samples = boundary_samples(4)?;
    let max_residual = samples.iter().map(|s| s.residual).fold(0.0, f64::max);
    let v = APolyValidation { form, matches_printed, a_factorization, a_vanishes_at_one, a_real_roots, samples, max_residual };
    if !v.verified() {
        return Err(Error::Verification(format!(
            "A-polynomial validation failed (printed {}, factorization {}, max residual {:e})",
            v.matches_printed, v.a_factorization, v.max_residual
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_form_matches_printed() {
        assert_eq!(APolynomialForm::m137().expanded, printed_a_polynomial());
    }

    #[test]
    fn validation_passes() {
        let v = validate_a_polynomial().unwrap();
        assert!(v.verified(), "max residual {}", v.max_residual);
        assert!(v.samples.len() >= 20);
    }

    #[test]
    fn a_has_single_real_root() {
        assert_eq!(count_real_roots(&a_poly(), "z", &RealInterval::whole_line()), 1);
        assert!(a_poly().eval(&[("z", int(1))]).is_zero());
    }
}
