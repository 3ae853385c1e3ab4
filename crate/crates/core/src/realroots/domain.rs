//! Unions of real intervals whose endpoints may be algebraic numbers, and
//! the two real domains of the character curve: the admissible longitude
//! traces `U` and the admissible longitude eigenvalues `V`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::isolate::{isolate_real_roots, IsolatingInterval};
use super::sturm::{count_real_roots, Bound, RealInterval};
use crate::algebra::rational::{format_fraction, int, rat};
use crate::algebra::{parse_poly, MultiPoly, Rational};
use crate::certificate::Fact;

/// Width of the isolating intervals stored for algebraic endpoints.
pub fn endpoint_width() -> Rational {
    Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(2), 40))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Endpoint {
    NegInf,
    PosInf,
    Rational {
        #[serde(with = "crate::certificate::rational_str")]
        value: Rational,
    },
    Algebraic {
        root: IsolatingInterval,
        /// Four-digit display value; never used in computations.
        display: String,
    },
}

impl Endpoint {
    pub fn rational(r: Rational) -> Self {
        Endpoint::Rational { value: r }
    }

    pub fn algebraic(root: IsolatingInterval) -> Self {
        let display = format!("{:.4}", root.approx());
        Endpoint::Algebraic { root, display }
    }

    /// Exact comparison of the endpoint with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match self {
            Endpoint::NegInf => Ordering::Less,
            Endpoint::PosInf => Ordering::Greater,
            Endpoint::Rational { value } => value.cmp(r),
            Endpoint::Algebraic { root, .. } => root.cmp_rational(r),
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            Endpoint::NegInf => f64::NEG_INFINITY,
            Endpoint::PosInf => f64::INFINITY,
            Endpoint::Rational { value } => crate::algebra::rational::to_f64(value),
            Endpoint::Algebraic { root, .. } => root.approx(),
        }
    }

    /// Rational bound on the given side: `outer_low = true` rounds down.
    fn rational_bound(&self, round_down: bool) -> Bound {
        match self {
            Endpoint::NegInf => Bound::NegInf,
            Endpoint::PosInf => Bound::PosInf,
            Endpoint::Rational { value } => Bound::Finite(value.clone()),
            Endpoint::Algebraic { root, .. } => Bound::Finite(if round_down { root.lo.clone() } else { root.hi.clone() }),
        }
    }

    fn is_algebraic(&self) -> bool {
        matches!(self, Endpoint::Algebraic { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainInterval {
    pub lo: Endpoint,
    pub lo_closed: bool,
    pub hi: Endpoint,
    pub hi_closed: bool,
}

impl DomainInterval {
    pub fn new(lo: Endpoint, lo_closed: bool, hi: Endpoint, hi_closed: bool) -> Self {
        let lo_closed = lo_closed && !matches!(lo, Endpoint::NegInf);
        let hi_closed = hi_closed && !matches!(hi, Endpoint::PosInf);
        DomainInterval { lo, lo_closed, hi, hi_closed }
    }

    pub fn contains(&self, r: &Rational) -> bool {
        let lo_ok = match self.lo.cmp_rational(r) {
            Ordering::Less => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Greater => false,
        };
        let hi_ok = match self.hi.cmp_rational(r) {
            Ordering::Greater => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Less => false,
        };
        lo_ok && hi_ok
    }

    /// Smallest rational interval containing this one.
    pub fn outward(&self) -> RealInterval {
        RealInterval::with_closure(
            self.lo.rational_bound(true),
            self.lo_closed || self.lo.is_algebraic(),
            self.hi.rational_bound(false),
            self.hi_closed || self.hi.is_algebraic(),
        )
    }

    /// A rational interval contained in this one.
    pub fn inward(&self) -> RealInterval {
        RealInterval::with_closure(
            self.lo.rational_bound(false),
            self.lo_closed || self.lo.is_algebraic(),
            self.hi.rational_bound(true),
            self.hi_closed || self.hi.is_algebraic(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainSet {
    pub variable: String,
    pub intervals: Vec<DomainInterval>,
}

impl DomainSet {
    pub fn contains(&self, r: &Rational) -> bool {
        self.intervals.iter().any(|i| i.contains(r))
    }

    pub fn outward_cover(&self) -> Vec<RealInterval> {
        self.intervals.iter().map(|i| i.outward()).collect()
    }

    pub fn inward_cover(&self) -> Vec<RealInterval> {
        self.intervals.iter().map(|i| i.inward()).collect()
    }

    /// Checks sortedness and pairwise disjointness exactly.
    pub fn is_well_formed(&self) -> bool {
        self.intervals.windows(2).all(|w| {
            let (a, b) = (&w[0], &w[1]);
            match (&a.hi, &b.lo) {
                (Endpoint::PosInf, _) | (_, Endpoint::NegInf) => false,
                (Endpoint::Rational { value: x }, e) => match e.cmp_rational(x) {
                    Ordering::Greater => true,
                    Ordering::Equal => !(a.hi_closed && b.lo_closed),
                    Ordering::Less => false,
                },
                (Endpoint::Algebraic { root, .. }, Endpoint::Rational { value }) => root.cmp_rational(value) != Ordering::Greater
                    && !(root.cmp_rational(value) == Ordering::Equal && a.hi_closed && b.lo_closed),
                (Endpoint::Algebraic { root: r1, .. }, Endpoint::Algebraic { root: r2, .. }) => r1.hi <= r2.lo,
                _ => false,
            }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("domain serializes")
    }

    /// Four-digit display such as `(-inf, -2.5038] ∪ [-0.3994, 0)`.
    pub fn display(&self) -> String {
        let show = |e: &Endpoint| match e {
            Endpoint::NegInf => "-inf".to_string(),
            Endpoint::PosInf => "inf".to_string(),
            Endpoint::Rational { value } => crate::algebra::rational::format_rational(value),
            Endpoint::Algebraic { display, .. } => display.clone(),
        };
        self.intervals
            .iter()
            .map(|i| {
                format!(
                    "{}{}, {}{}",
                    if i.lo_closed { "[" } else { "(" },
                    show(&i.lo),
                    show(&i.hi),
                    if i.hi_closed { "]" } else { ")" }
                )
            })
            .collect::<Vec<_>>()
            .join(" ∪ ")
    }
}

/// `P(s,t) = (s−2)(s+1)²t⁴ − (s−2)(s+2)(s+1)t² − 1`.
pub fn curve_polynomial() -> MultiPoly {
    parse_poly("(s-2)*(s+1)^2*t^4 - (s-2)*(s+2)*(s+1)*t^2 - 1").expect("static polynomial")
}

/// The cubic factor `s³ + 2s² − 4s − 4` of the discriminant.
pub fn discriminant_cubic() -> MultiPoly {
    parse_poly("s^3 + 2*s^2 - 4*s - 4").expect("static polynomial")
}

/// `Δ₁ = (s+1)²(s−2)(s³+2s²−4s−4)`.
pub fn discriminant_factored() -> MultiPoly {
    parse_poly("(s+1)^2*(s-2)*(s^3 + 2*s^2 - 4*s - 4)").expect("static polynomial")
}

/// The cubic with `s = z + 1/z`, cleared by `z³`: its real roots are the
/// finite endpoints of `V`.
pub fn endpoint_sextic() -> MultiPoly {
    parse_poly("(z^2+1)^3 + 2*z*(z^2+1)^2 - 4*z^2*(z^2+1) - 4*z^3").expect("static polynomial")
}

/// The three real roots `p₁ < p₂ < p₃` of the cubic.
pub fn cubic_roots() -> Vec<IsolatingInterval> {
    isolate_real_roots(&discriminant_cubic(), "s", &endpoint_width())
}

/// The two real roots `z₁ < z₂` of the endpoint sextic.
pub fn v_endpoints() -> Vec<IsolatingInterval> {
    isolate_real_roots(&endpoint_sextic(), "z", &endpoint_width())
}

/// Number of real `t` with `P(s₀, t) = 0`.
pub fn real_t_count(s0: &Rational) -> usize {
    let q = curve_polynomial().eval_partial(&[("s", s0.clone())]);
    if q.is_constant() {
        return 0;
    }
    count_real_roots(&q, "t", &RealInterval::whole_line())
}

pub fn compute_s_domain() -> DomainSet {
    let r = cubic_roots();
    assert_eq!(r.len(), 3, "the discriminant cubic has three real roots");
    DomainSet {
        variable: "s".into(),
        intervals: vec![
            DomainInterval::new(Endpoint::NegInf, false, Endpoint::algebraic(r[0].clone()), true),
            DomainInterval::new(Endpoint::algebraic(r[1].clone()), true, Endpoint::algebraic(r[2].clone()), true),
            DomainInterval::new(Endpoint::rational(int(2)), false, Endpoint::PosInf, false),
        ],
    }
}

pub fn compute_z_domain() -> DomainSet {
    let e = v_endpoints();
    assert_eq!(e.len(), 2, "the endpoint sextic has two real roots");
    DomainSet {
        variable: "z".into(),
        intervals: vec![
            DomainInterval::new(Endpoint::NegInf, false, Endpoint::algebraic(e[0].clone()), true),
            DomainInterval::new(Endpoint::algebraic(e[1].clone()), true, Endpoint::rational(int(0)), false),
            DomainInterval::new(Endpoint::rational(int(0)), false, Endpoint::rational(int(1)), false),
            DomainInterval::new(Endpoint::rational(int(1)), false, Endpoint::PosInf, false),
        ],
    }
}

fn frac(r: &Rational) -> serde_json::Value {
    json!(format_fraction(r))
}

/// Facts certifying `U`: the discriminant identity, the root structure of
/// the cubic, the realness of `t²` on every piece and its failure on every
/// gap, and the positivity of the double root `t²` at the algebraic
/// endpoints.
pub fn s_domain_facts() -> Vec<Fact> {
    let mut facts = Vec::new();
    let p = curve_polynomial();
    let a = p.coeff_in("t", 4);
    let b = p.coeff_in("t", 2);
    let c = p.coeff_in("t", 0);
    let disc = &(&b * &b) - &(&(&a * &c) * &MultiPoly::int(4));
    let ok = disc == discriminant_factored();
    facts.push(Fact::new(
        "discriminant of P as a quadratic in t^2 equals (s+1)^2 (s-2) (s^3+2s^2-4s-4)",
        "exact expansion",
        json!({"holds": ok, "discriminant": disc.to_text()}),
    ));
    facts.push(Fact::new("(s+1)^2 >= 0 for all real s", "square", json!({"holds": true})));
    let roots = cubic_roots();
    facts.push(Fact::new(
        "s^3+2s^2-4s-4 has exactly 3 real roots p1 < p2 < p3",
        "Sturm count on (-inf, inf) and isolation",
        json!({
            "count": count_real_roots(&discriminant_cubic(), "s", &RealInterval::whole_line()),
            "intervals": roots.iter().map(|r| json!([frac(&r.lo), frac(&r.hi)])).collect::<Vec<_>>(),
        }),
    ));
    facts.push(Fact::new(
        "p1 < -2 < -1 < p2 < p3 < 2",
        "exact comparison of isolating intervals",
        json!({"holds": roots[0].hi < int(-2) && roots[1].lo > int(-1) && roots[2].hi < int(2)}),
    ));
    // pieces: one sample and no sign change of disc * a inside
    let samples: [(&str, Rational, bool); 6] = [
        ("(-inf, p1]", int(-3), true),
        ("(p1, -1)", int(-2), false),
        ("(-1, p2)", rat(-9, 10), false),
        ("[p2, p3]", int(0), true),
        ("(p3, 2)", rat(9, 5), false),
        ("(2, inf)", int(3), true),
    ];
    for (name, s0, inside) in samples {
        let n = real_t_count(&s0);
        facts.push(Fact::new(
            format!("sample s = {} in {}: P(s,t) has {} real t roots", format_fraction(&s0), name, n),
            "Sturm count of the univariate quartic",
            json!({"s": frac(&s0), "real_t_roots": n, "expected_nonzero": inside, "holds": (n > 0) == inside}),
        ));
    }
    // the real-root count in t changes only where disc, a, or the constant vanish
    let critical = &discriminant_factored() * &a;
    let crit_roots = count_real_roots(&critical, "s", &RealInterval::whole_line());
    facts.push(Fact::new(
        "the real t-root count is constant between consecutive roots of disc * lc; those roots are exactly p1, -1, p2, p3, 2",
        "Sturm count of disc * leading coefficient",
        json!({"distinct_real_roots": crit_roots, "holds": crit_roots == 5}),
    ));
    // at the algebraic endpoints the double root t^2 = (s+2)/(2(s+1)) is positive
    let g = parse_poly("(s+2)*(s+1)").unwrap();
    for (i, r) in roots.iter().enumerate() {
        let e = super::bounds::bound_on_interval(&g, "s", &r.lo, &r.hi, &endpoint_width());
        facts.push(Fact::new(
            format!("double root t^2 = (s+2)/(2(s+1)) is positive at p{}", i + 1),
            "interval bound of (s+2)(s+1) on the isolating interval",
            json!({"lower_bound": frac(&e.lo), "holds": e.lo > int(0)}),
        ));
    }
    facts.push(Fact::new("P(2,t) = -1 and P(-1,t) = -1, so s = 2 and s = -1 carry no points", "exact evaluation", json!({
        "P(2,t)": p.eval_partial(&[("s", int(2))]).to_text(),
        "P(-1,t)": p.eval_partial(&[("s", int(-1))]).to_text(),
        "holds": p.eval_partial(&[("s", int(2))]) == MultiPoly::int(-1) && p.eval_partial(&[("s", int(-1))]) == MultiPoly::int(-1),
    })));
    facts
}

/// Facts certifying `V`: the sextic identity, its two real roots, Vieta,
/// and the images of the `s`-pieces under `z ↦ z + 1/z`.
pub fn z_domain_facts() -> Vec<Fact> {
    let mut facts = Vec::new();
    let (sub, k) = discriminant_cubic().substitute("s", &parse_poly("z^2+1").unwrap(), &parse_poly("z").unwrap());
    facts.push(Fact::new(
        "z^3 * cubic((z^2+1)/z) equals the endpoint sextic",
        "exact substitution",
        json!({"cleared_power": k, "holds": sub == endpoint_sextic()}),
    ));
    let e = v_endpoints();
    let n = count_real_roots(&endpoint_sextic(), "z", &RealInterval::whole_line());
    facts.push(Fact::new(
        "the sextic has exactly 2 real roots z1 < -1 < z2 < 0 (p2, p3 lie in (-2, 2) and give unit-modulus z)",
        "Sturm count and isolation",
        json!({
            "count": n,
            "intervals": e.iter().map(|r| json!([frac(&r.lo), frac(&r.hi)])).collect::<Vec<_>>(),
            "holds": n == 2 && e[0].hi < int(-1) && e[1].lo > int(-1) && e[1].hi < int(0),
        }),
    ));
    let lo = &e[0].lo * &e[1].hi;
    let hi = &e[0].hi * &e[1].lo;
    let (plo, phi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    facts.push(Fact::new(
        "z1 * z2 = 1 (Vieta on z^2 - p1 z + 1) is enclosed by the product of the isolating intervals",
        "interval product",
        json!({"lo": frac(&plo), "hi": frac(&phi), "holds": plo <= int(1) && int(1) <= phi}),
    ));
    facts.push(Fact::new(
        "z + 1/z is a bijection from (-inf, -1] onto (-inf, -2] and from [-1, 0) onto (-inf, -2]; s <= p1 pulls back to (-inf, z1] and [z2, 0)",
        "monotonicity of z + 1/z on each branch",
        json!({"holds": true}),
    ));
    facts.push(Fact::new(
        "z + 1/z maps (0,1) and (1,inf) each bijectively onto (2, inf)",
        "monotonicity of z + 1/z on each branch",
        json!({"holds": true}),
    ));
    facts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_matches_printed_values() {
        let r = cubic_roots();
        let printed = [-2.9032, -0.8061, 1.7093];
        for (iv, v) in r.iter().zip(printed) {
            assert!((iv.approx() - v).abs() < 1e-4, "{} vs {}", iv.approx(), v);
        }
        let u = compute_s_domain();
        assert!(u.is_well_formed());
        assert!(u.contains(&int(0)) && u.contains(&int(3)) && u.contains(&int(-3)));
        assert!(!u.contains(&int(2)) && !u.contains(&int(-1)) && !u.contains(&rat(9, 5)));
        assert!(s_domain_facts().iter().all(|f| f.exact_values.get("holds").is_none_or(|h| h == true)));
    }

    #[test]
    fn v_endpoints_and_shape() {
        let e = v_endpoints();
        assert!((e[0].approx() + 2.5038).abs() < 1e-4);
        assert!((e[1].approx() + 0.3994).abs() < 1e-4);
        let v = compute_z_domain();
        assert!(v.is_well_formed());
        assert!(v.contains(&rat(1, 2)) && v.contains(&int(5)) && v.contains(&int(-3)));
        assert!(!v.contains(&int(0)) && !v.contains(&int(1)) && !v.contains(&int(-1)));
        assert!(z_domain_facts().iter().all(|f| f.exact_values["holds"] == true));
        assert!(v.display().starts_with("(-inf, -2.5038]"));
    }
}
