//! A replayable proof that `P(s,t)` does not factor in `ℂ[s][t]`.
//!
//! `P` is even in `t` of degree 4 with constant term `−1`, and a factor of
//! degree 0 in `t` would divide that constant, so a factorization splits the
//! `t`-degree as 2+2 or 1+3 with constant terms `c` and `−1/c`, `c ∈ ℂ*`.
//! The undetermined coefficients `a, b, d, e ∈ ℂ[s]` are carried as
//! indeterminates; every step of both case chains is an exact polynomial
//! identity, and each chain ends in a polynomial in `s` that must vanish but
//! does not.

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::{parse_poly, MultiPoly};
use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::realroots::domain::curve_polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub statement: String,
    #[serde(with = "crate::certificate::poly_str")]
    pub lhs: MultiPoly,
    #[serde(with = "crate::certificate::poly_str")]
    pub rhs: MultiPoly,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(statement: impl Into<String>, lhs: MultiPoly, rhs: MultiPoly) -> Self {
        let holds = lhs == rhs;
        IdentityCheck { statement: statement.into(), lhs, rhs, holds }
    }

    /// Recomputes `holds` from the stored sides.
    pub fn recheck(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// A polynomial in `s` that the factorization would force to vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contradiction {
    pub statement: String,
    #[serde(with = "crate::certificate::poly_str")]
    pub polynomial: MultiPoly,
    pub nonzero: bool,
}

impl Contradiction {
    fn new(statement: impl Into<String>, polynomial: MultiPoly) -> Self {
        let nonzero = !polynomial.is_zero();
        Contradiction { statement: statement.into(), polynomial, nonzero }
    }
}

/// Degree bookkeeping: the admissible `s`-degree splits after the
/// constraints of the case are imposed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSplit {
    pub statement: String,
    pub candidates: Vec<(u32, u32)>,
    pub admissible: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseChain {
    pub factorization: String,
    pub checks: Vec<IdentityCheck>,
    pub degrees: DegreeSplit,
    pub contradictions: Vec<Contradiction>,
}

impl CaseChain {
    pub fn verified(&self) -> bool {
        self.checks.iter().all(|c| c.holds && c.recheck())
            && !self.degrees.admissible.is_empty()
            && self.contradictions.len() >= self.degrees.admissible.len()
            && self.contradictions.iter().all(|c| c.nonzero && !c.polynomial.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityCertificate {
    pub case_2_2: CaseChain,
    pub case_1_3: CaseChain,
}

impl IrreducibilityCertificate {
    pub fn verified(&self) -> bool {
        self.case_2_2.verified() && self.case_1_3.verified()
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut cert = Certificate::new("irreducibility", json!({"polynomial": curve_polynomial().to_text()}));
        for (name, chain) in [("(2,2)", &self.case_2_2), ("(1,3)", &self.case_1_3)] {
            for c in &chain.checks {
                cert.fact(
                    format!("case {name}: {}", c.statement),
                    "exact polynomial expansion",
                    json!({"lhs": c.lhs.to_text(), "rhs": c.rhs.to_text(), "holds": c.holds}),
                );
            }
            cert.fact(
                format!("case {name}: {}", chain.degrees.statement),
                "degree bookkeeping",
                json!({"candidates": chain.degrees.candidates, "admissible": chain.degrees.admissible}),
            );
            for c in &chain.contradictions {
                cert.fact(
                    format!("case {name}: {}", c.statement),
                    "exact expansion",
                    json!({"polynomial": c.polynomial.to_text(), "nonzero": c.nonzero}),
                );
            }
        }
        cert.with_verdict(if self.verified() { "IRREDUCIBLE" } else { "FAILED" })
    }
}

fn p(text: &str) -> MultiPoly {
    parse_poly(text).expect("static polynomial")
}

fn v(name: &str) -> MultiPoly {
    MultiPoly::var(name)
}

/// `P = p₄t⁴ + p₂t² − 1`.
fn curve_coefficients() -> (MultiPoly, MultiPoly) {
    (p("(s-2)*(s+1)^2"), p("-(s-2)*(s+2)*(s+1)"))
}

fn coefficient_check() -> IdentityCheck {
    let (p4, p2) = curve_coefficients();
    let rebuilt = &(&(&p4 * &v("t").pow(4)) + &(&p2 * &v("t").pow(2))) - &MultiPoly::one();
    IdentityCheck::new("P = p4 t^4 + p2 t^2 - 1 with p4 = (s-2)(s+1)^2, p2 = -(s-2)(s+2)(s+1)", curve_polynomial(), rebuilt)
}

/// `(at² + bt + c)(dt² + et − 1/c)`.
fn case_2_2() -> CaseChain {
    let (p4, p2) = curve_coefficients();
    let r = p("(s-2)*(s+2)*(s+1)");
    let (a, b, c, d, e, t) = (v("a"), v("b"), v("c"), v("d"), v("e"), v("t"));
    let mut checks = vec![coefficient_check()];

    // c times the product, so that every coefficient is a polynomial.
    let lhs = &(&(&(&a * &t.pow(2)) + &(&b * &t)) + &c) * &(&(&(&(&c * &d) * &t.pow(2)) + &(&(&c * &e) * &t)) - &MultiPoly::one());
    let k4 = &(&c * &a) * &d;
    let k3 = &c * &(&(&a * &e) + &(&b * &d));
    let k2 = &(&(&(&c * &c) * &d) - &a) + &(&(&c * &b) * &e);
    let k1 = &(&(&c * &c) * &e) - &b;
    let rhs = &(&(&(&(&k4 * &t.pow(4)) + &(&k3 * &t.pow(3))) + &(&k2 * &t.pow(2))) + &(&k1 * &t)) - &c;
    checks.push(IdentityCheck::new(
        "c(at^2+bt+c)(dt^2+et-1/c) = cad t^4 + c(ae+bd) t^3 + (c^2 d - a + cbe) t^2 + (c^2 e - b) t - c",
        lhs,
        rhs,
    ));
    // t¹: c²e − b = 0.
    let b_val = &(&c * &c) * &e;
    checks.push(IdentityCheck::new(
        "the t coefficient vanishes iff b = c^2 e",
        k1.compose("b", &b_val),
        MultiPoly::zero(),
    ));
    checks.push(IdentityCheck::new(
        "with b = c^2 e the t^3 coefficient is c e (a + c^2 d)",
        k3.compose("b", &b_val),
        &(&c * &e) * &(&a + &(&(&c * &c) * &d)),
    ));
    // e ≠ 0 ⇒ a = −c²d ⇒ ad = −c²d², of even s-degree; p₄ has odd degree.
    let a_neg = -&(&(&c * &c) * &d);
    checks.push(IdentityCheck::new(
        "if e != 0 then a = -c^2 d and ad = -c^2 d^2, whose s-degree 2 deg d is even",
        (&a * &d).compose("a", &a_neg),
        -&(&(&c * &c) * &d.pow(2)),
    ));
    checks.push(IdentityCheck::new(
        "deg_s p4 = 3 is odd, so e = 0 and then b = c^2 e = 0",
        MultiPoly::int(p4.degree_in("s").unwrap_or(0) as i64),
        MultiPoly::int(3),
    ));
    checks.push(IdentityCheck::new(
        "with b = e = 0: the t^4 coefficient gives ad = (s-2)(s+1)^2 and the t^2 coefficient is c(cd - a/c) = c^2 d - a, giving cd - a/c = -(s-2)(s+2)(s+1)",
        k2.compose("b", &MultiPoly::zero()).compose("e", &MultiPoly::zero()),
        &(&(&c * &c) * &d) - &a,
    ));
    // Degrees: deg a + deg d = 3 and max(deg a, deg d) ≥ deg p₂ = 3.
    let deg4 = p4.degree_in("s").unwrap_or(0);
    let deg2 = p2.degree_in("s").unwrap_or(0);
    let candidates: Vec<(u32, u32)> = (0..=deg4).map(|da| (da, deg4 - da)).collect();
    let admissible: Vec<(u32, u32)> = candidates.iter().copied().filter(|&(da, dd)| da.max(dd) >= deg2).collect();
    let degrees = DegreeSplit {
        statement: "deg a + deg d = deg(ad) = 3 and max(deg a, deg d) >= deg(cd - a/c) = 3, so exactly one of a, d has degree 3".into(),
        candidates,
        admissible,
    };

    let mut contradictions = Vec::new();
    let one_plus_r = &MultiPoly::one() + &r;
    // (3, 0): d constant, a = c²d + cR has leading s-coefficient c, so the s³
    // coefficient of ad = p₄ gives cd = 1.
    let a_30 = &(&(&c * &c) * &d) + &(&c * &r);
    checks.push(IdentityCheck::new(
        "split (3,0): a = c^2 d + c(s-2)(s+2)(s+1) has leading s-coefficient c, hence cd = 1 from the s^3 coefficient of ad",
        a_30.coeff_in("s", 3),
        c.clone(),
    ));
    checks.push(IdentityCheck::new(
        "split (3,0): ad - (1 + (s-2)(s+2)(s+1)) = (cd - 1)(cd + 1 + (s-2)(s+2)(s+1)), so cd = 1 gives ad = 1 + (s-2)(s+2)(s+1)",
        &(&a_30 * &d) - &one_plus_r,
        &(&(&c * &d) - &MultiPoly::one()) * &(&(&(&c * &d) + &MultiPoly::one()) + &r),
    ));
    contradictions.push(Contradiction::new(
        "split (3,0): ad = (s-2)(s+1)^2 would need 1 + (s-2)(s+2)(s+1) - (s-2)(s+1)^2 = 0",
        &one_plus_r - &p4,
    ));
    // (0, 3): a constant, c²d = a − cR has leading s-coefficient −c, so the
    // s³ coefficient of c²·ad gives a·(−c) = c², i.e. a = −c.
    let c2d = &a - &(&c * &r);
    checks.push(IdentityCheck::new(
        "split (0,3): c^2 d = a - c(s-2)(s+2)(s+1) has leading s-coefficient -c, hence a = -c from the s^3 coefficient of ad",
        c2d.coeff_in("s", 3),
        -&c,
    ));
    checks.push(IdentityCheck::new(
        "split (0,3): with a = -c, c^2 (ad) = a (a - c(s-2)(s+2)(s+1)) = c^2 (1 + (s-2)(s+2)(s+1))",
        (&a * &c2d).compose("a", &-&c),
        &(&c * &c) * &one_plus_r,
    ));
    contradictions.push(Contradiction::new(
        "split (0,3): ad = (s-2)(s+1)^2 would need 1 + (s-2)(s+2)(s+1) - (s-2)(s+1)^2 = 0",
        &one_plus_r - &p4,
    ));
    CaseChain { factorization: "(a t^2 + b t + c)(d t^2 + e t - 1/c)".into(), checks, degrees, contradictions }
}

/// `(at + c)(bt³ + dt² + et − 1/c)`.
fn case_1_3() -> CaseChain {
    let (p4, p2) = curve_coefficients();
    let (a, b, c, d, e, t, l) = (v("a"), v("b"), v("c"), v("d"), v("e"), v("t"), v("l"));
    let mut checks = vec![coefficient_check()];

    let cb = &c * &b;
    let second = &(&(&(&cb * &t.pow(3)) + &(&(&c * &d) * &t.pow(2))) + &(&(&c * &e) * &t)) - &MultiPoly::one();
    let lhs = &(&(&a * &t) + &c) * &second;
    let k4 = &(&c * &a) * &b;
    let k3 = &c * &(&(&a * &d) + &cb);
    let k2 = &c * &(&(&a * &e) + &(&c * &d));
    let k1 = &(&(&c * &c) * &e) - &a;
    let rhs = &(&(&(&(&k4 * &t.pow(4)) + &(&k3 * &t.pow(3))) + &(&k2 * &t.pow(2))) + &(&k1 * &t)) - &c;
    checks.push(IdentityCheck::new(
        "c(at+c)(bt^3+dt^2+et-1/c) = cab t^4 + c(ad+cb) t^3 + c(ae+cd) t^2 + (c^2 e - a) t - c",
        lhs,
        rhs,
    ));
    let a_val = &(&c * &c) * &e;
    checks.push(IdentityCheck::new("the t coefficient vanishes iff a = c^2 e", k1.compose("a", &a_val), MultiPoly::zero()));
    checks.push(IdentityCheck::new(
        "with a = c^2 e the t^3 coefficient is c^2 (ced + b), so b = -ced",
        k3.compose("a", &a_val),
        &(&c * &c) * &(&(&(&c * &e) * &d) + &b),
    ));
    let b_val = -&(&(&c * &e) * &d);
    let ab = (&a * &b).compose("a", &a_val).compose("b", &b_val);
    checks.push(IdentityCheck::new(
        "the t^4 coefficient: ab = -c^3 d e^2, so -c^3 d e^2 = (s-2)(s+1)^2",
        ab,
        -&(&(&c.pow(3) * &d) * &e.pow(2)),
    ));
    checks.push(IdentityCheck::new(
        "the t^2 coefficient: ae + cd = c^2 e^2 + cd, so cd + c^2 e^2 = -(s-2)(s+2)(s+1)",
        (&(&a * &e) + &(&c * &d)).compose("a", &a_val),
        &(&(&c * &c) * &e.pow(2)) + &(&c * &d),
    ));
    checks.push(IdentityCheck::new(
        "e != 0, since e = 0 forces a = 0 and ab = 0, while p4 != 0",
        MultiPoly::int(if p4.is_zero() { 0 } else { 1 }),
        MultiPoly::one(),
    ));
    // deg d + 2 deg e = 3 and max(deg d, 2 deg e) ≥ 3.
    let deg4 = p4.degree_in("s").unwrap_or(0);
    let deg2 = p2.degree_in("s").unwrap_or(0);
    let candidates: Vec<(u32, u32)> = (0..=deg4 / 2).map(|de| (deg4 - 2 * de, de)).collect();
    let admissible: Vec<(u32, u32)> = candidates.iter().copied().filter(|&(dd, de)| dd.max(2 * de) >= deg2).collect();
    let degrees = DegreeSplit {
        statement: "(deg d, deg e) with deg d + 2 deg e = 3 and max(deg d, 2 deg e) >= 3: only deg d = 3, deg e = 0".into(),
        candidates,
        admissible,
    };
    // l = leading s-coefficient of d; e is a constant.
    checks.push(IdentityCheck::new(
        "s^3 coefficients: -c^3 e^2 l = 1 and c l = -1; since -c^3 e^2 l = c^2 e^2 (-c l), c^2 e^2 = 1",
        -&(&(&c.pow(3) * &e.pow(2)) * &l),
        &(&(&c * &c) * &e.pow(2)) * &-&(&c * &l),
    ));
    checks.push(IdentityCheck::new(
        "-c^3 d e^2 = -(cd)(c^2 e^2); with c^2 e^2 = 1 the t^4 equation gives cd = -(s-2)(s+1)^2",
        -&(&(&c.pow(3) * &d) * &e.pow(2)),
        -&(&(&c * &d) * &(&(&c * &c) * &e.pow(2))),
    ));
    let from_t2 = &p2 + &p4;
    checks.push(IdentityCheck::new(
        "then the t^2 equation gives c^2 e^2 = -(s-2)(s+2)(s+1) + (s-2)(s+1)^2 = -(s+1)(s-2)",
        from_t2.clone(),
        p("-(s+1)*(s-2)"),
    ));
    let contradictions = vec![Contradiction::new(
        "the two values of c^2 e^2, namely 1 and -(s+1)(s-2), would have to agree: 1 - (-(s+1)(s-2)) = 0",
        &MultiPoly::one() - &from_t2,
    )];
    CaseChain { factorization: "(a t + c)(b t^3 + d t^2 + e t - 1/c)".into(), checks, degrees, contradictions }
}

pub fn irreducibility_certificate() -> Result<IrreducibilityCertificate> {
    let cert = IrreducibilityCertificate { case_2_2: case_2_2(), case_1_3: case_1_3() };
    if !cert.verified() {
        let failed: Vec<&str> = [&cert.case_2_2, &cert.case_1_3]
            .iter()
            .flat_map(|ch| ch.checks.iter().filter(|c| !c.holds).map(|c| c.statement.as_str()))
            .collect();
        return Err(Error::Verification(format!("irreducibility chain failed at: {failed:?}")));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_chains_verify() {
        let c = irreducibility_certificate().unwrap();
        assert!(c.case_2_2.checks.iter().all(|x| x.holds));
        assert!(c.case_1_3.checks.iter().all(|x| x.holds));
    }

    #[test]
    fn final_polynomials() {
        let c = irreducibility_certificate().unwrap();
        let target = p("s^2 - s - 1");
        assert_eq!(c.case_2_2.contradictions[0].polynomial, target);
        assert_eq!(c.case_2_2.contradictions[1].polynomial, target);
        assert_eq!(c.case_1_3.contradictions[0].polynomial, target);
    }

    #[test]
    fn degree_splits() {
        let c = irreducibility_certificate().unwrap();
        assert_eq!(c.case_2_2.degrees.admissible, vec![(0, 3), (3, 0)]);
        assert_eq!(c.case_1_3.degrees.admissible, vec![(3, 0)]);
    }

    #[test]
    fn certificate_recheck_after_roundtrip() {
        let c = irreducibility_certificate().unwrap();
        let text = serde_json::to_string(&c).unwrap();
        let back: IrreducibilityCertificate = serde_json::from_str(&text).unwrap();
        assert!(back.verified());
        assert_eq!(back, c);
    }

    #[test]
    fn tampered_chain_fails() {
        let mut c = irreducibility_certificate().unwrap();
        c.case_1_3.checks[2].rhs = MultiPoly::one();
        assert!(!c.verified());
    }
}
