//! Real points of the character curve and their SU(2) / SL(2,ℝ) type.
//!
//! For traces `t₁, t₂ ∈ (−2, 2)` of `C₁, C₂` with `C₁C₂C₃ = I`, the triple is
//! simultaneously conjugate into SU(2) iff
//! `(2t₃ − t₁t₂)² ≤ (4 − t₁²)(4 − t₂²)`. With `(t₁,t₂,t₃) = (s,t,w)` and
//! `w = t − 1/(t(s+1))`, the slack of that inequality, multiplied by
//! `t²(s+1)²`, equals `−4(s+1)³(s−2)t²` on the curve.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::curve::w_coordinate;
use crate::algebra::rational::{int, rat};
use crate::algebra::{parse_poly, MultiPoly, Rational};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::ideal::{normal_form, IdealBasis, MonomialOrder};
use crate::realroots::algebraic::{sign_at_point, RatInterval, RealAlg};
use crate::realroots::domain::{cubic_roots, curve_polynomial, discriminant_cubic, endpoint_width};
use crate::realroots::isolate::{isolate_real_roots, IsolatingInterval};

/// Enclosure width below which an interval containing zero certifies that a
/// point lies on the curve.
pub fn on_curve_tolerance() -> Rational {
    Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 12))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CharacterClass {
    #[serde(rename = "SU2")]
    Su2,
    #[serde(rename = "SL2R")]
    Sl2r,
    #[serde(rename = "BOUNDARY")]
    Boundary,
}

impl CharacterClass {
    pub fn label(&self) -> &'static str {
        match self {
            CharacterClass::Su2 => "SU2",
            CharacterClass::Sl2r => "SL2R",
            CharacterClass::Boundary => "BOUNDARY",
        }
    }
}

/// A real point `(s, t)` certified to lie on `P = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterPoint {
    pub s: RealAlg,
    pub t: RealAlg,
}

impl CharacterPoint {
    /// Checks the point's invariants: `t ≠ 0`, `s ∉ {−1, 2}`, and either
    /// `P(s,t) = 0` exactly or an interval enclosure of `P(s,t)` of width at
    /// most the on-curve tolerance contains zero.
    pub fn new(s: RealAlg, t: RealAlg) -> Result<Self> {
        if t.is_zero() {
            return Err(Error::Domain("t = 0 is not a point of the curve".into()));
        }
        for bad in [int(-1), int(2)] {
            if s.cmp_rational(&bad) == Ordering::Equal {
                return Err(Error::Domain(format!("s = {bad} is excluded: P(s, t) = -1 there")));
            }
        }
        let pt = CharacterPoint { s, t };
        let (sign, enclosure) = pt.curve_sign();
        match sign {
            None | Some(0) => Ok(pt),
            Some(_) => Err(Error::Inconsistent(format!(
                "(s, t) is not on the curve: P(s, t) lies in [{}, {}]",
                enclosure.lo, enclosure.hi
            ))),
        }
    }

    /// Exact rational coordinates.
    pub fn rational(s: Rational, t: Rational) -> Result<Self> {
        CharacterPoint::new(RealAlg::rational(s), RealAlg::rational(t))
    }

    /// All real points over a rational `s`.
    pub fn above(s: &Rational) -> Result<Vec<CharacterPoint>> {
        if s == &int(-1) || s == &int(2) {
            return Err(Error::Domain(format!("s = {s} is excluded: P(s, t) = -1 there")));
        }
        let q = curve_polynomial().eval_partial(&[("s", s.clone())]);
        let roots = isolate_real_roots(&q, "t", &endpoint_width());
        if roots.is_empty() {
            return Err(Error::Inconsistent(format!("s = {s} lies in a gap of the s-domain: P(s, t) has no real root t")));
        }
        roots
            .into_iter()
            .map(|r| {
                let t = match exact_root(&r) {
                    Some(v) => RealAlg::rational(v),
                    None => RealAlg::root(r),
                };
                CharacterPoint::new(RealAlg::rational(s.clone()), t)
            })
            .collect()
    }

    /// The six points over the roots `p₁, p₂, p₃` of the discriminant cubic,
    /// where `t² = (s+2)/(2(s+1))` is a double root.
    pub fn boundary_points() -> Vec<CharacterPoint> {
        // s = (2 − 2t²)/(2t² − 1) inverts t² = (s+2)/(2(s+1)).
        let num = parse_poly("2 - 2*t^2").expect("static polynomial");
        let den = parse_poly("2*t^2 - 1").expect("static polynomial");
        let (sextic, _) = discriminant_cubic().substitute("s", &num, &den);
        let s_roots = cubic_roots();
        let mut out = Vec::new();
        for tr in isolate_real_roots(&sextic, "t", &endpoint_width()) {
            let t = RealAlg::root(tr.clone());
            let tv = tr.approx();
            let s_est = (2.0 - 2.0 * tv * tv) / (2.0 * tv * tv - 1.0);
            let best = s_roots
                .iter()
                .min_by(|a, b| (a.approx() - s_est).abs().total_cmp(&(b.approx() - s_est).abs()))
                .expect("three roots");
            if let Ok(p) = CharacterPoint::new(RealAlg::root(best.clone()), t) {
                out.push(p);
            }
        }
        out
    }

    /// Sign of `P` at the point (`None`: enclosure of zero at tolerance).
    pub fn curve_sign(&self) -> (Option<i32>, RatInterval) {
        sign_at_point(&curve_polynomial(), &[("s", &self.s), ("t", &self.t)], &on_curve_tolerance())
    }

    /// Interval enclosure of `w = t − 1/(t(s+1))` of width about `width`.
    pub fn w_enclosure(&self, width: &Rational) -> RatInterval {
        if let (Some(s), Some(t)) = (self.s.as_rational(), self.t.as_rational()) {
            return RatInterval::point(w_coordinate(s, t).expect("invariants exclude the poles"));
        }
        let mut wd = width.clone();
        loop {
            let s = self.s.refined(&wd).enclosure();
            let t = self.t.refined(&wd).enclosure();
            let d = t.mul(&s.add(&RatInterval::point(int(1))));
            if let Some(inv) = d.recip() {
                let w = t.sub(&inv);
                if &w.width() <= width {
                    return w;
                }
            }
            wd /= int(16);
        }
    }

    pub fn approx(&self) -> (f64, f64) {
        (self.s.approx(), self.t.approx())
    }
}

fn exact_root(iv: &IsolatingInterval) -> Option<Rational> {
    // A rational root of the quartic would show up as a linear factor; the
    // midpoint test is enough for the cases that matter (t = ±1 and such).
    let m = iv.midpoint();
    let r = m.round();
    if iv.lo < r && r < iv.hi && iv.poly.eval(&[(iv.var.as_str(), r.clone())]).is_zero() {
        return Some(r);
    }
    None
}

/// `(4 − t₁²)(4 − t₂²) − (2t₃ − t₁t₂)²`
pub fn triangle_slack(t1: &Rational, t2: &Rational, t3: &Rational) -> Rational {
    let four = int(4);
    let a = (&four - t1 * t1) * (&four - t2 * t2);
    let b = int(2) * t3 - t1 * t2;
    a - &b * &b
}

/// The trace form of the SU(2) triangle inequality, for `|t₁|, |t₂| < 2`.
pub fn su2_triangle_criterion(t1: &Rational, t2: &Rational, t3: &Rational) -> Result<bool> {
    for (name, v) in [("t1", t1), ("t2", t2)] {
        if v.abs() >= int(2) {
            return Err(Error::Domain(format!("{name} = {v} is outside (-2, 2)")));
        }
    }
    Ok(!triangle_slack(t1, t2, t3).is_negative())
}

/// `(4 − s²)(4 − t²) − (2w − st)²`
pub fn slack_polynomial() -> MultiPoly {
    parse_poly("(4 - s^2)*(4 - t^2) - (2*w - s*t)^2").expect("static polynomial")
}

/// `t²(s+1)² · slack` with `w = t − 1/(t(s+1))`, a polynomial in `(s,t)`.
pub fn cleared_slack() -> MultiPoly {
    let num = parse_poly("t^2*(s+1) - 1").expect("static polynomial");
    let den = parse_poly("t*(s+1)").expect("static polynomial");
    let (p, k) = slack_polynomial().substitute("w", &num, &den);
    // `substitute` clears with den^k; normalise to exactly den².
    assert!(k <= 2);
    &p * &den.pow(2 - k)
}

/// The on-curve value of the cleared slack is `−coefficient·(s+1)³(s−2)t²`.
pub fn reduction_term() -> MultiPoly {
    parse_poly("(s+1)^3*(s-2)*t^2").expect("static polynomial")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitarityReduction {
    #[serde(with = "crate::certificate::poly_str")]
    pub cleared_slack: MultiPoly,
    /// The rational `k` with `cleared_slack + k·(s+1)³(s−2)t² ∈ ⟨P⟩`.
    #[serde(with = "crate::certificate::rational_str")]
    pub coefficient: Rational,
    /// `cleared_slack + k·(s+1)³(s−2)t² = q·P` with this constant `q`.
    #[serde(with = "crate::certificate::rational_str")]
    pub quotient: Rational,
    pub member: bool,
    /// The combination with coefficient 1 instead of `k`.
    pub unit_coefficient_member: bool,
    /// `(description, slack sign, criterion value)` at sample points.
    pub spot_checks: Vec<(String, i32, bool)>,
}

impl UnitarityReduction {
    pub fn verified(&self) -> bool {
        self.member
            && self.spot_checks.len() == 2
            && self.spot_checks[0].2
            && !self.spot_checks[1].2
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut c = Certificate::new("unitarity_reduction", json!({}));
        c.fact(
            "t^2(s+1)^2[(4-s^2)(4-t^2) - (2w-st)^2] with w = t - 1/(t(s+1)) equals the cleared slack",
            "exact substitution",
            json!({"cleared_slack": self.cleared_slack.to_text()}),
        );
        c.fact(
            "cleared slack + k (s+1)^3 (s-2) t^2 = q P, so on the curve the SU(2) criterion is (s+1)^3 (s-2) t^2 <= 0",
            "division by P",
            json!({"k": crate::certificate::rational_value(&self.coefficient), "q": crate::certificate::rational_value(&self.quotient), "member": self.member, "member_with_k_equal_1": self.unit_coefficient_member}),
        );
        for (d, sign, holds) in &self.spot_checks {
            c.fact(format!("spot check {d}"), "interval evaluation", json!({"slack_sign": sign, "criterion": holds}));
        }
        c.with_verdict(if self.verified() { "VERIFIED" } else { "FAILED" })
    }
}

/// Sign of the SU(2) slack at a curve point (that of the cleared slack,
/// since `t²(s+1)² > 0`).
pub fn point_slack_sign(pt: &CharacterPoint) -> Result<i32> {
    let (s, _) = sign_at_point(&cleared_slack(), &[("s", &pt.s), ("t", &pt.t)], &on_curve_tolerance());
    s.ok_or_else(|| Error::Verification("the SU(2) slack vanishes to tolerance at this point".into()))
}

pub fn verify_unitarity_reduction() -> Result<UnitarityReduction> {
    let e = cleared_slack();
    let p = curve_polynomial();
    let pb = IdealBasis { generators: vec![p.clone()], order: MonomialOrder::lex(&["t", "s"]), is_groebner: true };
    let term = reduction_term();
    let coefficient = int(4);
    let comb = &e + &term.scale(&coefficient);
    let member = normal_form(&comb, &pb).is_zero();
    let quotient = comb.is_unit_multiple_of(&p).unwrap_or_else(Rational::zero);
    let unit_coefficient_member = normal_form(&(&e + &term), &pb).is_zero();
    let mut spot_checks = Vec::new();
    for s in [int(0), int(3)] {
        let pts = CharacterPoint::above(&s)?;
        let pt = pts.last().expect("a real point").clone();
        let sign = point_slack_sign(&pt)?;
        spot_checks.push((format!("s = {s}, t ≈ {:.6}", pt.t.approx()), sign, sign >= 0));
    }
    let r = UnitarityReduction { cleared_slack: e, coefficient, quotient, member, unit_coefficient_member, spot_checks };
    if !r.verified() {
        return Err(Error::Verification("unitarity reduction failed".into()));
    }
    Ok(r)
}

/// Where a longitude trace lies relative to `p₁ < p₂ < p₃ < 2`.
pub fn classify_s(s: &RealAlg) -> Result<CharacterClass> {
    let p = cubic_roots();
    let c: Vec<Ordering> = p.iter().map(|r| s.cmp_root(r)).collect();
    if c.contains(&Ordering::Equal) {
        return Ok(CharacterClass::Boundary);
    }
    if c[0] == Ordering::Less {
        return Ok(CharacterClass::Sl2r);
    }
    if c[1] == Ordering::Greater && c[2] == Ordering::Less {
        return Ok(CharacterClass::Su2);
    }
    if s.cmp_rational(&int(2)) == Ordering::Greater {
        return Ok(CharacterClass::Sl2r);
    }
    Err(Error::Inconsistent("s lies in a gap of the s-domain U; no real curve point exists there".into()))
}

/// Type of a real curve point, cross-checked against the trace criterion
/// whenever `|s| < 2` and `|t| < 2`.
pub fn classify_character_point(pt: &CharacterPoint) -> Result<CharacterClass> {
    let class = classify_s(&pt.s)?;
    let inside = |v: &RealAlg| v.cmp_rational(&int(-2)) == Ordering::Greater && v.cmp_rational(&int(2)) == Ordering::Less;
    if inside(&pt.s) && inside(&pt.t) {
        let holds = match (pt.s.as_rational(), pt.t.as_rational()) {
            (Some(s), Some(t)) => su2_triangle_criterion(s, t, &w_coordinate(s, t)?)?,
            _ => point_slack_sign(pt)? >= 0,
        };
        let expected = class != CharacterClass::Sl2r;
        if holds != expected {
            return Err(Error::Verification(format!(
                "classification {} disagrees with the trace criterion ({holds})",
                class.label()
            )));
        }
    }
    Ok(class)
}

/// The three `s`-pieces of the real curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SPiece {
    /// `(−∞, p₁]`
    Left,
    /// `[p₂, p₃]`
    Middle,
    /// `(2, ∞)`
    Right,
}

/// One of the six connected components: an `s`-piece and the sign of `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub piece: SPiece,
    pub positive_t: bool,
}

impl Component {
    pub fn all() -> Vec<Component> {
        let mut v = Vec::new();
        for piece in [SPiece::Left, SPiece::Middle, SPiece::Right] {
            for positive_t in [false, true] {
                v.push(Component { piece, positive_t });
            }
        }
        v
    }
}

/// `count` curve points of the component over rational `s` sampled in the
/// interior of its piece, deterministically.
pub fn sample_component(c: Component, count: usize) -> Result<Vec<CharacterPoint>> {
    let p = cubic_roots();
    let step = rat(1, 32);
    let mut out = Vec::new();
    let mut k = 1i64;
    while out.len() < count {
        let s = match c.piece {
            SPiece::Left => &p[0].lo - &step * int(k),
            SPiece::Right => int(2) + &step * int(k),
            SPiece::Middle => {
                let n = count as i64 + 1;
                if k >= 2 * n {
                    return Err(Error::Verification("not enough sample points on the middle piece".into()));
                }
                let a = p[1].hi.clone();
                let b = p[2].lo.clone();
                &a + (&b - &a) * rat(k, 2 * n)
            }
        };
        for pt in CharacterPoint::above(&s)? {
            let pos = pt.t.cmp_rational(&Rational::zero()) == Ordering::Greater;
            if pos == c.positive_t && out.len() < count {
                out.push(pt);
            }
        }
        k += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criterion_examples() {
        assert!(su2_triangle_criterion(&int(0), &int(0), &int(0)).unwrap());
        assert!(su2_triangle_criterion(&int(0), &int(0), &int(2)).unwrap());
        assert!(!su2_triangle_criterion(&int(0), &int(0), &rat(21, 10)).unwrap());
        assert!(matches!(su2_triangle_criterion(&int(2), &int(0), &int(0)), Err(Error::Domain(_))));
        assert!(matches!(su2_triangle_criterion(&int(0), &int(-3), &int(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn reduction_needs_the_factor_four() {
        let r = verify_unitarity_reduction().unwrap();
        assert!(r.member);
        assert!(!r.unit_coefficient_member);
        assert_eq!(r.quotient, int(4));
    }

    #[test]
    fn classification_examples() {
        for (s, class) in [(int(0), CharacterClass::Su2), (int(3), CharacterClass::Sl2r), (int(-3), CharacterClass::Sl2r)] {
            for pt in CharacterPoint::above(&s).unwrap() {
                assert_eq!(classify_character_point(&pt).unwrap(), class);
            }
        }
    }

    #[test]
    fn gap_is_inconsistent() {
        assert!(matches!(CharacterPoint::above(&int(-2)), Err(Error::Inconsistent(_))));
        assert!(matches!(CharacterPoint::above(&rat(19, 10)), Err(Error::Inconsistent(_))));
        assert!(matches!(classify_s(&RealAlg::rational(int(-2))), Err(Error::Inconsistent(_))));
        assert!(matches!(CharacterPoint::above(&int(2)), Err(Error::Domain(_))));
    }

    #[test]
    fn off_curve_point_is_rejected() {
        assert!(matches!(CharacterPoint::rational(int(0), int(1)), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn point_counts_over_s() {
        assert_eq!(CharacterPoint::above(&int(3)).unwrap().len(), 2);
        assert_eq!(CharacterPoint::above(&int(0)).unwrap().len(), 4);
        assert_eq!(CharacterPoint::above(&int(-3)).unwrap().len(), 4);
    }

    #[test]
    fn boundary_points_classify_as_boundary() {
        let b = CharacterPoint::boundary_points();
        assert_eq!(b.len(), 6);
        for pt in &b {
            assert_eq!(classify_character_point(pt).unwrap(), CharacterClass::Boundary);
        }
    }

    #[test]
    fn component_sampling() {
        for c in Component::all() {
            let pts = sample_component(c, 12).unwrap();
            assert_eq!(pts.len(), 12);
            for pt in &pts {
                let class = classify_character_point(pt).unwrap();
                let sign = point_slack_sign(pt).unwrap();
                match c.piece {
                    SPiece::Middle => assert!(class == CharacterClass::Su2 && sign > 0),
                    _ => assert!(class == CharacterClass::Sl2r && sign < 0),
                }
            }
        }
    }
}
