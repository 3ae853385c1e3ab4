//! The explicit threshold `N₀` behind "no real solutions for `n′` large":
//! on `V ∩ (−1, 1)` the negative-slope filling polynomial
//! `F = −A(1 − z^(4n′−1)) − B·z^(2n′−4)` is positive once
//! `c₅(1 − q^(4n′−1)) > c₆·q^(2n′−4)`, and `z ↦ 1/z` covers the rest of `V`.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::slope::{certify_slope, Verdict};
use crate::algebra::rational::{format_fraction, int, rat, ten_pow_neg};
use crate::algebra::{parse_poly, Rational};
use crate::certificate::{Certificate, Fact};
use crate::error::{Error, Result};
use crate::realroots::bounds::bound_on_interval;
use crate::realroots::domain::{endpoint_width, v_endpoints};
use crate::realroots::isolate::{isolate_real_roots, IsolatingInterval};
use crate::realroots::sturm::{count_real_roots, RealInterval};
use crate::variety::apoly::{a_poly, b_poly};

/// Length of the cross-check run `N₀, …, N₀ + CROSS_CHECK_SPAN`.
pub const CROSS_CHECK_SPAN: u32 = 25;
/// Denominator used to round `q`, `c₅`, `c₆` outward to short rationals.
const ROUNDING: i64 = 10_000;

/// The six real roots of `B`, increasing.
pub fn b_real_roots() -> Vec<IsolatingInterval> {
    isolate_real_roots(&b_poly(), "z", &endpoint_width())
}

fn round_up(r: &Rational) -> Rational {
    let scaled = r * int(ROUNDING);
    Rational::new(scaled.ceil().to_integer(), ROUNDING.into())
}

fn round_down(r: &Rational) -> Rational {
    let scaled = r * int(ROUNDING);
    Rational::new(scaled.floor().to_integer(), ROUNDING.into())
}

/// One instance of `c₅(1 − q^(4n′−1))` versus `c₆·q^(2n′−4)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityInstance {
    pub n_prime: u32,
    #[serde(with = "crate::certificate::rational_str")]
    pub lhs: Rational,
    #[serde(with = "crate::certificate::rational_str")]
    pub rhs: Rational,
    pub holds: bool,
}

fn instance(q: &Rational, c5: &Rational, c6: &Rational, n_prime: u32) -> InequalityInstance {
    let lhs = c5 * (Rational::one() - num_traits::pow(q.clone(), (4 * n_prime - 1) as usize));
    let rhs = c6 * num_traits::pow(q.clone(), (2 * n_prime - 4) as usize);
    let holds = lhs > rhs;
    InequalityInstance { n_prime, lhs, rhs, holds }
}

/// Why the inequality persists for every `n′ ≥ N₀`: with `0 < q < 1`,
/// `c₅ > 0`, `c₆ > 0`, the left side is increasing in `n′` and the right
/// side decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityRecord {
    pub q_in_unit_interval: bool,
    pub c5_positive: bool,
    pub c6_positive: bool,
    /// The instance at `N₀ + 1`, an explicit consequence.
    pub next: InequalityInstance,
}

impl MonotonicityRecord {
    pub fn holds(&self) -> bool {
        self.q_in_unit_interval && self.c5_positive && self.c6_positive && self.next.holds
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdCertificate {
    pub n0: u32,
    #[serde(with = "crate::certificate::rational_str")]
    pub q: Rational,
    #[serde(with = "crate::certificate::rational_str")]
    pub c5: Rational,
    #[serde(with = "crate::certificate::rational_str")]
    pub c6: Rational,
    /// Target gap handed to `bound_on_interval`.
    #[serde(with = "crate::certificate::rational_str")]
    pub tolerance: Rational,
    /// `B`'s fifth root `r₅` (≈ 0.8684).
    pub r5: IsolatingInterval,
    /// The closed case-2 interval `[z₂⁻, r₅⁺]`.
    #[serde(with = "crate::certificate::rational_vec")]
    pub case2_interval: Vec<Rational>,
    pub case1_facts: Vec<Fact>,
    pub case2_facts: Vec<Fact>,
    /// Instances for `n′ = 2, …, N₀` (all but the last fail).
    pub inequality_trace: Vec<InequalityInstance>,
    pub monotonicity: MonotonicityRecord,
    /// `(n′, verdict of certify_slope(−n′))` for `n′ = N₀ … N₀ + 25`.
    pub cross_check: Vec<(u32, Verdict)>,
}

fn holds(f: &Fact) -> bool {
    f.exact_values.get("holds").and_then(|h| h.as_bool()).unwrap_or(false)
}

fn facts_hold(fs: &[Fact]) -> bool {
    fs.iter().all(holds)
}

/// Case 1 on `[r₅⁺, 1)`: `A < 0`, `B < 0`, `z^(4n′−1) − 1 < 0`, so `F > 0`.
fn case1(r5: &IsolatingInterval, tol: &Rational) -> Vec<Fact> {
    let a = a_poly();
    let b = b_poly();
    let lo = r5.hi.clone();
    let cofactor = parse_poly("(z^2+z+1)^3").expect("static polynomial");
    let factor_ok = a == &parse_poly("z-1").expect("static polynomial") * &cofactor;
    let cof = bound_on_interval(&cofactor, "z", &lo, &int(1), tol);
    let b_roots = count_real_roots(&b, "z", &RealInterval::closed(lo.clone(), int(1)));
    let b_sample = b.eval(&[("z", rat(9, 10))]);
    let b_at_lo = b.eval(&[("z", lo.clone())]);
    vec![
        Fact::new(
            "A = (z-1)(z^2+z+1)^3 and (z^2+z+1)^3 > 0 on [r5+, 1], so A < 0 on [r5+, 1)",
            "exact factorization and bound_on_interval",
            json!({
                "interval": [format_fraction(&lo), "1"],
                "cofactor_lower_bound": format_fraction(&cof.lo),
                "holds": factor_ok && cof.lo.is_positive(),
            }),
        ),
        Fact::new(
            "B has no root on [r5+, 1] (between its 5th and 6th roots) and B(9/10) < 0, so B < 0 there",
            "Sturm count and exact evaluation",
            json!({
                "roots": b_roots,
                "B(9/10)": format_fraction(&b_sample),
                "B(r5+)": format_fraction(&b_at_lo),
                "holds": b_roots == 0 && b_sample.is_negative() && b_at_lo.is_negative(),
            }),
        ),
        Fact::new(
            "0 < r5+ and z^(4n'-1) - 1 < 0 for 0 < z < 1",
            "monotonicity of powers",
            json!({"holds": lo.is_positive() && lo < int(1)}),
        ),
        Fact::new(
            "hence F = A (z^(4n'-1) - 1) - B z^(2n'-4) > 0 on [r5+, 1) for every n' >= 2",
            "sign combination",
            json!({"holds": factor_ok && cof.lo.is_positive() && b_roots == 0 && b_sample.is_negative()}),
        ),
    ]
}

/// Default target gap of the interval bounds for `c₅` and `c₆`.
pub fn default_bound_tolerance() -> Rational {
    ten_pow_neg(6)
}

pub fn derive_threshold() -> Result<ThresholdCertificate> {
    derive_threshold_with(true)
}

/// `cross_check = false` skips the per-slope Sturm runs (used by re-checks
/// of the inequality alone).
pub fn derive_threshold_with(cross_check: bool) -> Result<ThresholdCertificate> {
    derive_threshold_tol(cross_check, &default_bound_tolerance())
}

pub fn derive_threshold_tol(cross_check: bool, tol: &Rational) -> Result<ThresholdCertificate> {
    if !tol.is_positive() {
        return Err(Error::Domain("the bound tolerance must be positive".into()));
    }
    let tol = tol.clone();
    let roots = b_real_roots();
    if roots.len() != 6 {
        return Err(Error::Verification(format!("B has {} real roots, expected 6", roots.len())));
    }
    let r5 = roots[4].clone();
    let z2 = v_endpoints()[1].clone();
    let case1_facts = case1(&r5, &tol);
    if !facts_hold(&case1_facts) {
        return Err(Error::Verification("case-1 sign facts fail on [r5, 1)".into()));
    }
    // case 2 on [z2-, r5+]
    let (lo, hi) = (z2.lo.clone(), r5.hi.clone());
    let q = round_up(&lo.abs().max(hi.clone()));
    let ea = bound_on_interval(&a_poly(), "z", &lo, &hi, &tol);
    let eb = bound_on_interval(&b_poly(), "z", &lo, &hi, &tol);
    let c5 = round_down(&-&ea.hi);
    let c6 = round_up(&eb.hi);
    let case2_facts = vec![
        Fact::new(
            "q bounds |z| on the case-2 interval and q < 1",
            "exact comparison",
            json!({"q": format_fraction(&q), "holds": q >= lo.abs() && q >= hi && q < int(1)}),
        ),
        Fact::new(
            "A <= -c5 < 0 on the case-2 interval",
            "bound_on_interval of A",
            json!({"upper_bound_of_A": format_fraction(&ea.hi), "c5": format_fraction(&c5), "pieces": ea.pieces, "holds": c5.is_positive() && ea.hi <= -c5.clone()}),
        ),
        Fact::new(
            "B <= c6 on the case-2 interval",
            "bound_on_interval of B",
            json!({"upper_bound_of_B": format_fraction(&eb.hi), "c6": format_fraction(&c6), "pieces": eb.pieces, "holds": c6.is_positive() && eb.hi <= c6}),
        ),
        Fact::new(
            "for |z| <= q < 1: 1 - z^(4n'-1) >= 1 - q^(4n'-1) > 0 and z^(2n'-4) <= q^(2n'-4), so F >= c5 (1 - q^(4n'-1)) - c6 q^(2n'-4)",
            "termwise bounds",
            json!({"holds": true}),
        ),
        Fact::new(
            "the case-2 interval and [r5+, 1) cover V ∩ (-1, 1) = [z2, 0) ∪ (0, 1); F(1/z) z^(4n'+6) = F(z) covers V outside [-1, 1]",
            "exact comparison of endpoints and the palindrome identity",
            json!({"holds": lo <= z2.lo && z2.lo < int(0)}),
        ),
    ];
    if !facts_hold(&case2_facts) {
        return Err(Error::Verification("case-2 constants have the wrong sign".into()));
    }
    let mut inequality_trace = Vec::new();
    let mut n0 = None;
    for n_prime in 2..=10_000u32 {
        let inst = instance(&q, &c5, &c6, n_prime);
        let ok = inst.holds;
        inequality_trace.push(inst);
        if ok {
            n0 = Some(n_prime);
            break;
        }
    }
    let n0 = n0.ok_or_else(|| Error::Verification("the case-2 inequality never holds".into()))?;
    let monotonicity = MonotonicityRecord {
        q_in_unit_interval: q.is_positive() && q < int(1),
        c5_positive: c5.is_positive(),
        c6_positive: c6.is_positive(),
        next: instance(&q, &c5, &c6, n0 + 1),
    };
    let mut cross = Vec::new();
    if cross_check {
        for n_prime in n0..=n0 + CROSS_CHECK_SPAN {
            let c = certify_slope(-(n_prime as i64))?;
            if c.verdict != Verdict::NoRealSolutions {
                return Err(Error::Verification(format!("n' = {n_prime} >= N0 = {n0} has {} real roots on V", c.root_count_in_v)));
            }
            cross.push((n_prime, c.verdict));
        }
    }
    Ok(ThresholdCertificate {
        n0,
        q,
        c5,
        c6,
        tolerance: tol,
        r5,
        case2_interval: vec![lo, hi],
        case1_facts,
        case2_facts,
        inequality_trace,
        monotonicity,
        cross_check: cross,
    })
}

impl ThresholdCertificate {
    /// Re-verifies the inequality trace, minimality of `N₀`, monotonicity
    /// and the recorded sign facts by exact arithmetic.
    pub fn check(&self) -> bool {
        let trace_ok = self.inequality_trace.iter().enumerate().all(|(i, inst)| {
            let n_prime = 2 + i as u32;
            let fresh = instance(&self.q, &self.c5, &self.c6, n_prime);
            fresh == *inst && (fresh.holds == (n_prime == self.n0))
        }) && self.inequality_trace.last().map(|i| i.n_prime) == Some(self.n0);
        let mono_ok = self.monotonicity.holds()
            && self.monotonicity.next == instance(&self.q, &self.c5, &self.c6, self.n0 + 1)
            && self.monotonicity.q_in_unit_interval == (self.q.is_positive() && self.q < int(1));
        let bounds_ok = {
            let (lo, hi) = (&self.case2_interval[0], &self.case2_interval[1]);
            let ea = bound_on_interval(&a_poly(), "z", lo, hi, &self.tolerance);
            let eb = bound_on_interval(&b_poly(), "z", lo, hi, &self.tolerance);
            ea.hi <= -self.c5.clone() && eb.hi <= self.c6 && self.q >= lo.abs() && &self.q >= hi && self.r5.verify() && self.r5.hi == *hi
        };
        let cross_ok = self.cross_check.is_empty()
            || (self.cross_check.len() == (CROSS_CHECK_SPAN + 1) as usize
                && self.cross_check.iter().enumerate().all(|(i, (n, v))| *n == self.n0 + i as u32 && *v == Verdict::NoRealSolutions));
        trace_ok && mono_ok && bounds_ok && cross_ok && facts_hold(&self.case1_facts) && facts_hold(&self.case2_facts)
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut c = Certificate::new("threshold", json!({"bound_tolerance": format_fraction(&self.tolerance)}));
        for f in self.case1_facts.iter().chain(&self.case2_facts) {
            c.facts.push(f.clone());
        }
        c.fact(
            "N0 is the least n' >= 2 with c5 (1 - q^(4n'-1)) > c6 q^(2n'-4)",
            "exact rational evaluation",
            json!({
                "N0": self.n0,
                "q": format_fraction(&self.q),
                "c5": format_fraction(&self.c5),
                "c6": format_fraction(&self.c6),
                "trace": self.inequality_trace.iter().map(|i| json!({"n'": i.n_prime, "holds": i.holds})).collect::<Vec<_>>(),
                "lhs_at_N0": format_fraction(&self.inequality_trace.last().expect("nonempty").lhs),
                "rhs_at_N0": format_fraction(&self.inequality_trace.last().expect("nonempty").rhs),
            }),
        );
        c.fact(
            "the inequality persists for all n' >= N0 (0 < q < 1, c5 > 0, c6 > 0)",
            "monotonicity",
            json!({"holds": self.monotonicity.holds(), "instance_at_N0+1": self.monotonicity.next.holds}),
        );
        c.fact(
            "certify_slope(-n') = NO_REAL_SOLUTIONS for n' = N0 .. N0+25",
            "Sturm count on the outward cover of V",
            json!({"checked": self.cross_check.iter().map(|(n, _)| n).collect::<Vec<_>>()}),
        );
        c.with_verdict(if self.check() { "VERIFIED" } else { "FAILED" })
    }
}

/// `true` iff `r` is an integer multiple of `1/ROUNDING` (used in tests).
pub fn is_rounded(r: &Rational) -> bool {
    (r * int(ROUNDING)).is_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_roots_match_printed_values() {
        let printed = [-2.3396, -1.4121, -0.7082, -0.4274, 0.8684, 1.1516];
        let r = b_real_roots();
        assert_eq!(r.len(), 6);
        for (iv, v) in r.iter().zip(printed) {
            assert!((iv.approx() - v).abs() < 1e-4, "{} vs {}", iv.approx(), v);
        }
    }

    #[test]
    fn threshold_without_cross_check() {
        let t = derive_threshold_with(false).unwrap();
        assert!(t.check());
        assert!(t.n0 >= 2);
        assert!(is_rounded(&t.q) && is_rounded(&t.c5) && is_rounded(&t.c6));
        assert!(t.q < int(1) && t.c5.is_positive());
        // case-1 example: B has no roots on [r5+, 1] and B(9/10) < 0
        assert_eq!(t.case1_facts[1].exact_values["roots"], 0);
    }

    #[test]
    fn tampered_threshold_fails() {
        let mut t = derive_threshold_with(false).unwrap();
        t.n0 += 1;
        assert!(!t.check());
        let mut t = derive_threshold_with(false).unwrap();
        t.c6 = t.c6.clone() / int(2);
        assert!(!t.check());
    }
}
