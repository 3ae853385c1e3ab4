//! Per-slope certificates: exact Sturm counts of the filling polynomial on
//! the real eigenvalue domain `V`, isolated witnesses, and batch scans.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::polynomial::{filling_polynomial, verify_palindrome_symmetries, FillingPolynomial};
use crate::algebra::rational::{format_fraction, int, rat, ten_pow_neg};
use crate::algebra::Rational;
use crate::certificate::{Certificate, Fact};
use crate::error::{Error, Result};
use crate::realroots::domain::{compute_z_domain, DomainInterval, DomainSet, Endpoint};
use crate::realroots::isolate::{chain_for, isolate_in_interval_with, IsolatingInterval};
use crate::realroots::sturm::{count_with, Bound, RealInterval, SturmChain};

/// Width of witness intervals.
pub fn witness_width() -> Rational {
    ten_pow_neg(6)
}

/// Smallest endpoint width tried before giving up on separating a root
/// from an algebraic endpoint of `V`.
const MAX_REFINEMENTS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "NO_REAL_SOLUTIONS")]
    NoRealSolutions,
    #[serde(rename = "REAL_SOLUTION_FOUND")]
    RealSolutionFound,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::NoRealSolutions => "NO_REAL_SOLUTIONS",
            Verdict::RealSolutionFound => "REAL_SOLUTION_FOUND",
        }
    }
}

/// `z ↦ 1/z` pairs the roots on `V ∩ (−1, 1)` with those on `V ∖ [−1, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryCount {
    pub inside_unit: usize,
    pub outside_unit: usize,
}

/// The `n > 0` argument: `G(1) = −4`, `G(0.8684) > 0` just right of
/// `B`'s fifth root, hence a root in between.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositiveWitness {
    #[serde(with = "crate::certificate::rational_str")]
    pub g_at_one: Rational,
    #[serde(with = "crate::certificate::rational_str")]
    pub left: Rational,
    pub sign_at_left: i32,
    pub sign_change: bool,
    /// `true` when the sign change failed and a Sturm count on `(0, 1)`
    /// was used instead.
    pub used_fallback: bool,
    pub witness: IsolatingInterval,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeCertificate {
    pub n: i64,
    pub filling: FillingPolynomial,
    /// `V`, with its algebraic endpoints isolated finely enough to separate
    /// them from every root of the filling polynomial.
    pub domain: DomainSet,
    /// Distinct roots on each outward-rounded piece of `V`.
    pub piece_counts: Vec<usize>,
    pub root_count_in_v: usize,
    pub witnesses: Vec<IsolatingInterval>,
    pub verdict: Verdict,
    pub symmetry: Option<SymmetryCount>,
    pub positive: Option<PositiveWitness>,
}

fn counts(chain: &SturmChain, cover: &[RealInterval]) -> Vec<usize> {
    cover.iter().map(|iv| count_with(chain, iv)).collect()
}

fn refine_domain(d: &DomainSet, width: &Rational) -> DomainSet {
    let refine = |e: &Endpoint| match e {
        Endpoint::Algebraic { root, .. } => Endpoint::algebraic(root.refine_to(width)),
        other => other.clone(),
    };
    DomainSet {
        variable: d.variable.clone(),
        intervals: d
            .intervals
            .iter()
            .map(|i| DomainInterval::new(refine(&i.lo), i.lo_closed, refine(&i.hi), i.hi_closed))
            .collect(),
    }
}

fn endpoint_width(d: &DomainSet) -> Rational {
    d.intervals
        .iter()
        .flat_map(|i| [&i.lo, &i.hi])
        .filter_map(|e| match e {
            Endpoint::Algebraic { root, .. } => Some(root.width()),
            _ => None,
        })
        .max()
        .unwrap_or_else(|| int(1))
}

fn bound_le(b: &Bound, x: &Rational) -> bool {
    match b {
        Bound::NegInf => true,
        Bound::PosInf => false,
        Bound::Finite(v) => v <= x,
    }
}

fn bound_ge(b: &Bound, x: &Rational) -> bool {
    match b {
        Bound::NegInf => false,
        Bound::PosInf => true,
        Bound::Finite(v) => v >= x,
    }
}

/// `true` if the open witness interval lies in the rational interval.
fn inside(w: &IsolatingInterval, iv: &RealInterval) -> bool {
    bound_le(&iv.lo, &w.lo) && bound_ge(&iv.hi, &w.hi)
}

/// Shrinks a witness until neither `0` nor `1` lies in its closure.
fn avoid_special_points(mut w: IsolatingInterval) -> IsolatingInterval {
    let bad = |w: &IsolatingInterval| [int(0), int(1)].iter().any(|p| &w.lo <= p && p <= &w.hi);
    while bad(&w) {
        w = w.bisect(1);
    }
    w
}

/// Left cover point of `B`'s fifth real root (≈ 0.8684).
pub fn r5_interval() -> IsolatingInterval {
    let roots = super::threshold::b_real_roots();
    roots[4].clone()
}

fn positive_witness(f: &FillingPolynomial, chain: &SturmChain) -> Result<PositiveWitness> {
    let g_at_one = f.at_one();
    // 0.8684 lies in (r5, 1), where A < 0 and B < 0
    let left = r5_sample_point();
    debug_assert!(r5_interval().hi < left);
    let g_left = f.poly.eval(&[("z", left.clone())]);
    let sign_at_left = if g_left.is_positive() { 1 } else if g_left.is_negative() { -1 } else { 0 };
    let sign_change = g_at_one.is_negative() && sign_at_left > 0;
    let (region, used_fallback) = if sign_change {
        (RealInterval::open(left.clone(), int(1)), false)
    } else {
        (RealInterval::open(int(0), int(1)), true)
    };
    if count_with(chain, &region) == 0 {
        return Err(Error::Verification(format!("n = {}: no root of G on {:?}", f.n, region)));
    }
    let mut roots = isolate_in_interval_with(chain, &f.poly, "z", &region, &witness_width());
    let witness = avoid_special_points(roots.pop().expect("count is positive"));
    Ok(PositiveWitness { g_at_one, left, sign_at_left, sign_change, used_fallback, witness })
}

pub fn certify_slope(n: i64) -> Result<SlopeCertificate> {
    let filling = filling_polynomial(n)?;
    let chain = chain_for(&filling.poly, "z");
    let mut domain = compute_z_domain();
    let mut width = endpoint_width(&domain);
    let mut resolved = None;
    for _ in 0..MAX_REFINEMENTS {
        let outer = counts(&chain, &domain.outward_cover());
        let inner = counts(&chain, &domain.inward_cover());
        if outer == inner {
            resolved = Some(outer);
            break;
        }
        width /= Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(2), 20));
        domain = refine_domain(&domain, &width);
    }
    let piece_counts = resolved.ok_or_else(|| {
        Error::Verification(format!("n = {n}: a root of the filling polynomial cannot be separated from an endpoint of V"))
    })?;
    let root_count_in_v: usize = piece_counts.iter().sum();
    let mut witnesses = Vec::new();
    for (iv, &k) in domain.inward_cover().iter().zip(&piece_counts) {
        if k > 0 {
            witnesses.extend(isolate_in_interval_with(&chain, &filling.poly, "z", iv, &witness_width()).into_iter().map(avoid_special_points));
        }
    }
    let verdict = if root_count_in_v == 0 { Verdict::NoRealSolutions } else { Verdict::RealSolutionFound };
    let symmetry = if n < 0 {
        verify_palindrome_symmetries(n)?;
        // pieces: (−∞, z₁], [z₂, 0), (0, 1), (1, ∞)
        let s = SymmetryCount { inside_unit: piece_counts[1] + piece_counts[2], outside_unit: piece_counts[0] + piece_counts[3] };
        if s.inside_unit != s.outside_unit {
            return Err(Error::Verification(format!("n = {n}: 1/z symmetry of the roots on V fails ({s:?})")));
        }
        Some(s)
    } else {
        None
    };
    let positive = if n > 0 { Some(positive_witness(&filling, &chain)?) } else { None };
    let cert = SlopeCertificate { n, filling, domain, piece_counts, root_count_in_v, witnesses, verdict, symmetry, positive };
    if !cert.check() {
        return Err(Error::Verification(format!("n = {n}: slope certificate fails its own re-check")));
    }
    Ok(cert)
}

/// `certify_slope(n)` for `n ≥ 1`, which always carries the sign-change
/// witness.
pub fn positive_slope_witness(n: i64) -> Result<SlopeCertificate> {
    if n < 1 {
        return Err(Error::Domain(format!("positive slope expected, got n = {n}")));
    }
    certify_slope(n)
}

impl SlopeCertificate {
    /// Re-verifies every stored claim from the stored data.
    pub fn check(&self) -> bool {
        let Ok(f) = filling_polynomial(self.n) else { return false };
        if f != self.filling || self.filling.at_one().is_zero() {
            return false;
        }
        let chain = chain_for(&self.filling.poly, "z");
        let outward = self.domain.outward_cover();
        let inward = self.domain.inward_cover();
        if counts(&chain, &outward) != self.piece_counts || counts(&chain, &inward) != self.piece_counts {
            return false;
        }
        let total: usize = self.piece_counts.iter().sum();
        let verdict_ok = (total == 0) == (self.verdict == Verdict::NoRealSolutions) && total == self.root_count_in_v;
        let witnesses_ok = self.witnesses.len() == total
            && self.witnesses.iter().all(|w| {
                w.poly == self.filling.poly && w.verify_with(&chain) && w.width() <= witness_width() && inward.iter().any(|iv| inside(w, iv))
                    && !(w.lo <= int(1) && int(1) <= w.hi)
            });
        let positive_ok = match (&self.positive, self.n > 0) {
            (None, false) => true,
            (Some(p), true) => {
                p.g_at_one == int(-4)
                    && p.witness.verify_with(&chain)
                    && p.witness.poly == self.filling.poly
                    && p.witness.hi < int(1)
                    && if p.sign_change { p.witness.lo >= p.left } else { p.witness.lo >= int(0) }
            }
            _ => false,
        };
        verdict_ok && witnesses_ok && positive_ok
    }

    pub fn to_certificate(&self) -> Certificate {
        let mut c = Certificate::new("slope", json!({"n": self.n}));
        let f = &self.filling;
        c.fact(
            "filling polynomial: m = z^(-n) in -z^4 A - B m^2 + z^3 A m^4, divided by z^4, oriented, cleared",
            "exact Laurent substitution",
            json!({
                "poly": f.poly.to_text(),
                "clearing_shift": f.clearing_shift,
                "stripped_z_power": f.stripped_z_power,
                "orientation": f.orientation,
                "constant_term": format_fraction(&f.poly.constant_term()),
            }),
        );
        c.fact(
            "value at z = 1 (A(1) = 0, B(1) = -4); z = 1 is not a root",
            "exact evaluation",
            json!({"value": format_fraction(&f.at_one())}),
        );
        c.fact(
            "distinct roots on the outward-rounded cover of V equal those on the inward-rounded cover",
            "Sturm counts per piece",
            json!({
                "outward_cover": self.domain.outward_cover().iter().map(interval_json).collect::<Vec<_>>(),
                "inward_cover": self.domain.inward_cover().iter().map(interval_json).collect::<Vec<_>>(),
                "piece_counts": self.piece_counts,
                "root_count_in_V": self.root_count_in_v,
            }),
        );
        c.fact(
            "witness roots isolated inside V",
            "Sturm isolation to width 1/10^6",
            json!(self.witnesses.iter().map(|w| json!([format_fraction(&w.lo), format_fraction(&w.hi)])).collect::<Vec<_>>()),
        );
        if let Some(s) = &self.symmetry {
            c.fact(
                "roots on V inside the unit interval pair with roots outside under z -> 1/z",
                "z^(4n'+6) F(1/z) = F(z) and Sturm counts",
                json!({"inside": s.inside_unit, "outside": s.outside_unit}),
            );
        }
        if let Some(p) = &self.positive {
            c.fact(
                "G(1) = -4 and G(0.8684) > 0 give a sign change on (0.8684, 1)",
                "exact evaluation",
                json!({
                    "G(1)": format_fraction(&p.g_at_one),
                    "r5-": format_fraction(&p.left),
                    "sign_at_r5-": p.sign_at_left,
                    "sign_change": p.sign_change,
                    "fallback_sturm_on_(0,1)": p.used_fallback,
                    "witness": [format_fraction(&p.witness.lo), format_fraction(&p.witness.hi)],
                }),
            );
        }
        c.with_verdict(self.verdict.label())
    }
}

fn bound_text(b: &Bound) -> String {
    match b {
        Bound::NegInf => "-inf".into(),
        Bound::PosInf => "inf".into(),
        Bound::Finite(r) => format_fraction(r),
    }
}

fn interval_json(iv: &RealInterval) -> serde_json::Value {
    json!({"lo": bound_text(&iv.lo), "lo_closed": iv.lo_closed, "hi": bound_text(&iv.hi), "hi_closed": iv.hi_closed})
}

/// One certificate per nonzero `n` in `from..=to`, in increasing `n`.
pub fn scan_slopes(from: i64, to: i64) -> Result<Vec<SlopeCertificate>> {
    if from > to {
        return Err(Error::Domain(format!("empty scan range {from}..{to}")));
    }
    let ns: Vec<i64> = (from..=to).filter(|&n| n != 0).collect();
    ns.par_iter().map(|&n| certify_slope(n)).collect()
}

/// `scan_slopes` on a dedicated pool of `jobs` threads.
pub fn scan_slopes_with_jobs(from: i64, to: i64, jobs: usize) -> Result<Vec<SlopeCertificate>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("cannot start {jobs} worker threads: {e}")))?;
    pool.install(|| scan_slopes(from, to))
}

/// CSV summary with columns `n, verdict, root_count, witness_lo, witness_hi`
/// (the first witness; blank when there is none).
pub fn scan_csv(certs: &[SlopeCertificate]) -> String {
    let mut out = String::from("n,verdict,root_count,witness_lo,witness_hi\n");
    for c in certs {
        let (lo, hi) = c
            .witnesses
            .first()
            .map(|w| (format_fraction(&w.lo), format_fraction(&w.hi)))
            .unwrap_or_default();
        out.push_str(&format!("{},{},{},{},{}\n", c.n, c.verdict.label(), c.root_count_in_v, lo, hi));
    }
    out
}

/// Facts for the certificate of a whole scan.
pub fn scan_facts(certs: &[SlopeCertificate]) -> Vec<Fact> {
    certs
        .iter()
        .map(|c| {
            Fact::new(
                format!("n = {}: {}", c.n, c.verdict.label()),
                "Sturm count on V",
                json!({"root_count_in_V": c.root_count_in_v, "piece_counts": c.piece_counts}),
            )
        })
        .collect()
}

/// The rational sample point `0.8684`, just right of `B`'s fifth root, where
/// the positive-slope sign change starts.
pub fn r5_sample_point() -> Rational {
    rat(8684, 10000)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_negative_slope_has_no_solutions() {
        let c = certify_slope(-50).unwrap();
        assert_eq!(c.verdict, Verdict::NoRealSolutions);
        assert_eq!(c.root_count_in_v, 0);
        assert!(c.witnesses.is_empty());
    }

    #[test]
    fn n_one_has_a_witness_above_r5() {
        let c = certify_slope(1).unwrap();
        assert_eq!(c.verdict, Verdict::RealSolutionFound);
        let p = c.positive.as_ref().unwrap();
        assert_eq!(p.g_at_one, int(-4));
        assert!(p.sign_change && !p.used_fallback);
        assert!(p.witness.lo > r5_sample_point() && p.witness.hi < int(1));
    }

    #[test]
    fn n_seven_has_a_witness() {
        let c = positive_slope_witness(7).unwrap();
        assert!(!c.witnesses.is_empty());
        assert!(c.positive.unwrap().sign_change);
    }

    #[test]
    fn small_negative_slopes_report_computed_truth() {
        for n in [-1, -2, -3] {
            let c = certify_slope(n).unwrap();
            assert!(c.check());
            assert_eq!(c.verdict == Verdict::RealSolutionFound, c.root_count_in_v > 0);
        }
    }

    #[test]
    fn scan_cardinality_and_csv() {
        let certs = scan_slopes(-5, 5).unwrap();
        assert_eq!(certs.len(), 10);
        assert!(certs.iter().all(|c| c.n != 0));
        assert!(certs.windows(2).all(|w| w[0].n < w[1].n));
        let csv = scan_csv(&certs);
        assert_eq!(csv.lines().count(), 11);
        assert!(csv.starts_with("n,verdict,root_count,witness_lo,witness_hi"));
    }

    #[test]
    fn tampered_certificate_fails_check() {
        let mut c = certify_slope(2).unwrap();
        assert!(c.check());
        c.verdict = Verdict::NoRealSolutions;
        assert!(!c.check());
        let mut c = certify_slope(-40).unwrap();
        c.piece_counts[2] = 1;
        assert!(!c.check());
    }

    #[test]
    fn certificate_round_trips() {
        let c = certify_slope(3).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        let back: SlopeCertificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert!(back.check());
    }
}
