//! The eleven end-to-end acceptance checks and the randomized oracle suites.
//! `selftest` and the acceptance test both run these.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use holonomy_core::algebra::rational::{int, rat, to_f64};
use holonomy_core::algebra::{MultiPoly, Rational};
use holonomy_core::certificate::DEFAULT_SEED;
use holonomy_core::error::GroebnerError;
use holonomy_core::filling::{
    alexander_check_text, b_real_roots, derive_threshold, scan_slopes, verify_palindrome_symmetries, Verdict,
};
use holonomy_core::ideal::{groebner_basis_with, normal_form, verify_groebner, GroebnerConfig, MonomialOrder};
use holonomy_core::realroots::domain::{cubic_roots, curve_polynomial, v_endpoints};
use holonomy_core::realroots::{bound_on_interval, count_real_roots, RealInterval};
use holonomy_core::variety::classify::{point_slack_sign, sample_component, Component, SPiece};
use holonomy_core::variety::curve::check_generator_difference;
use holonomy_core::variety::{
    classify_character_point, derive_character_curve_with, irreducibility_certificate, reconstruct_representation,
    validate_a_polynomial, verify_unitarity_reduction, CharacterClass, DerivationPath, ReconstructionMode,
    Strategy,
};
use holonomy_core::Error;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Pair cap that makes the direct elimination give up and exercises the
/// membership fallback.
pub const FALLBACK_PAIR_CAP: usize = 400;

/// Sizes of the sampled suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteSize {
    pub points_per_component: usize,
    pub oracle_cases: usize,
    pub groebner_ideals: usize,
    pub positive_slopes: i64,
}

impl SuiteSize {
    pub fn full() -> Self {
        SuiteSize { points_per_component: 100, oracle_cases: 500, groebner_ideals: 25, positive_slopes: 50 }
    }

    pub fn quick() -> Self {
        SuiteSize { points_per_component: 8, oracle_cases: 60, groebner_ideals: 5, positive_slopes: 10 }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {}: {} ({}; {:.1}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

fn timed(id: u32, name: &'static str, f: impl FnOnce() -> Result<(bool, String), Error>) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult { id, name, passed, detail, elapsed: start.elapsed() }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-4
}

pub fn criterion_1() -> CriterionResult {
    timed(1, "curve reproduction (direct and capped fallback)", || {
        let p = curve_polynomial();
        let direct = derive_character_curve_with(&GroebnerConfig::from_env(), Strategy::Auto)?;
        let capped = GroebnerConfig { max_pairs: FALLBACK_PAIR_CAP, ..GroebnerConfig::from_env() };
        let fb = derive_character_curve_with(&capped, Strategy::Auto)?;
        let unit_ok = direct.curve.poly.is_unit_multiple_of(&p).is_some() && fb.curve.poly.is_unit_multiple_of(&p).is_some();
        let fallback_taken = fb.path == DerivationPath::Fallback && fb.direct_failure == Some(GroebnerError::PairCap { cap: FALLBACK_PAIR_CAP });
        let ok = unit_ok
            && direct.verified()
            && direct.forward_membership
            && direct.reverse_membership
            && fb.verified()
            && fallback_taken;
        Ok((ok, format!("default route {:?}; cap {} -> {:?}", direct.path, FALLBACK_PAIR_CAP, fb.path)))
    })
}

pub fn criterion_2() -> CriterionResult {
    timed(2, "reference generators and the w-relation", || {
        let d = derive_character_curve_with(&GroebnerConfig::from_env(), Strategy::Auto)?;
        let ok = d.published_members.len() == 4
            && d.published_members.iter().all(|&b| b)
            && check_generator_difference()
            && d.w_relation_member;
        Ok((ok, format!("members {:?}, first minus third generator = w-relation: {}", d.published_members, check_generator_difference())))
    })
}

pub fn criterion_3() -> CriterionResult {
    timed(3, "irreducibility certificate", || {
        let c = irreducibility_certificate()?;
        let finals: Vec<String> = [&c.case_2_2, &c.case_1_3]
            .iter()
            .filter_map(|ch| ch.contradictions.last().map(|k| k.polynomial.to_text()))
            .collect();
        let nonzero = [&c.case_2_2, &c.case_1_3].iter().all(|ch| ch.contradictions.iter().all(|k| k.nonzero && !k.polynomial.is_zero()));
        Ok((c.verified() && nonzero, format!("final contradictions {finals:?}")))
    })
}

pub fn criterion_4() -> CriterionResult {
    timed(4, "domain numerics", || {
        let cubic = cubic_roots();
        let b = b_real_roots();
        let v = v_endpoints();
        let cubic_ok = cubic.len() == 3 && cubic.iter().zip([-2.9032, -0.8061, 1.7093]).all(|(r, x)| close(r.approx(), x));
        let b_ok = b.len() == 6
            && b.iter().zip([-2.3396, -1.4121, -0.7082, -0.4274, 0.8684, 1.1516]).all(|(r, x)| close(r.approx(), x));
        let v_ok = v.len() == 2 && close(v[0].approx(), -2.5038) && close(v[1].approx(), -0.3994);
        // z1 < 0, z2 < 0: the product's enclosure is [z1.hi·z2.hi, z1.lo·z2.lo]
        let (lo, hi) = (&v[0].hi * &v[1].hi, &v[0].lo * &v[1].lo);
        let product_ok = lo <= int(1) && int(1) <= hi;
        Ok((
            cubic_ok && b_ok && v_ok && product_ok,
            format!(
                "cubic {:?}, B {:?}, V {:?}, z1*z2 in [{:.3e}, {:.3e}] - 1",
                cubic.iter().map(|r| format!("{:.4}", r.approx())).collect::<Vec<_>>(),
                b.iter().map(|r| format!("{:.4}", r.approx())).collect::<Vec<_>>(),
                v.iter().map(|r| format!("{:.4}", r.approx())).collect::<Vec<_>>(),
                to_f64(&lo) - 1.0,
                to_f64(&hi) - 1.0
            ),
        ))
    })
}

pub fn criterion_5(size: SuiteSize) -> CriterionResult {
    timed(5, "classification suite on the six components", || {
        let p = cubic_roots();
        let mut checked = 0usize;
        let mut failures = Vec::new();
        for c in Component::all() {
            let pts = sample_component(c, size.points_per_component)?;
            if pts.len() != size.points_per_component {
                failures.push(format!("{c:?}: only {} points", pts.len()));
            }
            for pt in pts {
                checked += 1;
                let class = classify_character_point(&pt)?;
                let slack = point_slack_sign(&pt)?;
                let in_middle = pt.s.cmp_root(&p[1]) == Ordering::Greater && pt.s.cmp_root(&p[2]) == Ordering::Less;
                let outside = pt.s.cmp_rational(&int(2)) == Ordering::Greater || pt.s.cmp_rational(&int(-2)) == Ordering::Less;
                if in_middle && (slack < 0 || class != CharacterClass::Su2) {
                    failures.push(format!("s ≈ {:.4}: middle point fails the SU(2) inequality", pt.s.approx()));
                }
                if outside {
                    let r = reconstruct_representation(&pt, ReconstructionMode::Real)?;
                    if slack >= 0 || class != CharacterClass::Sl2r || !r.certified() {
                        failures.push(format!("s ≈ {:.4}: |s| > 2 point (slack {slack}, residual {:e})", pt.s.approx(), r.residual));
                    }
                }
                if c.piece == SPiece::Middle && !in_middle {
                    failures.push(format!("s ≈ {:.4}: middle sample outside (p2, p3)", pt.s.approx()));
                }
            }
        }
        let red = verify_unitarity_reduction()?;
        let ok = failures.is_empty() && red.verified();
        let detail = if failures.is_empty() {
            format!("{checked} points; unitarity reduction membership {}", red.member)
        } else {
            format!("{} failures, first: {}", failures.len(), failures[0])
        };
        Ok((ok, detail))
    })
}

pub fn criterion_6() -> CriterionResult {
    timed(6, "A-polynomial identities and numeric boundary characters", || {
        let v = validate_a_polynomial()?;
        Ok((
            v.verified(),
            format!(
                "reference form {}, A = (z-1)(z^2+z+1)^3 {}, {} samples, max residual {:.2e}",
                v.matches_printed,
                v.a_factorization,
                v.samples.len(),
                v.max_residual
            ),
        ))
    })
}

pub fn criterion_7() -> CriterionResult {
    timed(7, "palindrome symmetries", || {
        let mut ok = true;
        for np in [2, 3, 10] {
            ok &= verify_palindrome_symmetries(-np)?.verified();
        }
        Ok((ok, "z^7 A(1/z) = -A, z^14 B(1/z) = B, z^(4n'+6) F(1/z) = F for n' in {2, 3, 10}".into()))
    })
}

pub fn criterion_8() -> CriterionResult {
    timed(8, "negative-slope threshold N0 and cross-check", || {
        let start = Instant::now();
        let t = derive_threshold()?;
        let elapsed = start.elapsed();
        let all_none = t.cross_check.len() == 26 && t.cross_check.iter().all(|(_, v)| *v == Verdict::NoRealSolutions);
        let ok = t.check() && all_none && elapsed <= Duration::from_secs(120);
        Ok((
            ok,
            format!(
                "N0 = {}, q ≈ {:.4}, c5 ≈ {:.4}, c6 ≈ {:.4}; n' = {}..{} all NO_REAL_SOLUTIONS in {:.1}s",
                t.n0,
                to_f64(&t.q),
                to_f64(&t.c5),
                to_f64(&t.c6),
                t.n0,
                t.n0 + 25,
                elapsed.as_secs_f64()
            ),
        ))
    })
}

pub fn criterion_9(size: SuiteSize) -> CriterionResult {
    timed(9, "positive slopes have witnesses", || {
        let certs = scan_slopes(1, size.positive_slopes)?;
        let sample = rat(8684, 10000);
        let mut bad = Vec::new();
        for c in &certs {
            let p = c.positive.as_ref();
            let ok = c.verdict == Verdict::RealSolutionFound
                && !c.witnesses.is_empty()
                && p.is_some_and(|p| {
                    p.g_at_one == int(-4) && p.sign_change && !p.used_fallback && p.left >= sample && p.witness.lo >= p.left && p.witness.hi < int(1)
                });
            if !ok {
                bad.push(c.n);
            }
        }
        let left = certs.first().and_then(|c| c.positive.as_ref()).map(|p| to_f64(&p.left)).unwrap_or(f64::NAN);
        Ok((
            bad.is_empty() && certs.len() as i64 == size.positive_slopes,
            format!("n = 1..{}: G(1) = -4, sign change on ({left:.6}, 1) ⊂ (0.8684, 1); failures {bad:?}", size.positive_slopes),
        ))
    })
}

pub fn criterion_10() -> CriterionResult {
    timed(10, "L-space Alexander coefficient criterion", || {
        let (_, twenty) = alexander_check_text("x^4-2*x^3+3*x^2-2*x+1")?;
        let (_, one) = alexander_check_text("1")?;
        Ok((!twenty && one, format!("x^4-2x^3+3x^2-2x+1 -> {twenty}, 1 -> {one}")))
    })
}

/// A squarefree-support polynomial with known roots at odd multiples of
/// `1/16` (one per cell of the `1/8` grid) and a positive-definite cofactor.
fn random_rooted_poly(rng: &mut ChaCha8Rng) -> (MultiPoly, Vec<Rational>) {
    let x = MultiPoly::var("x");
    let degree = rng.gen_range(1..=12u32);
    let mut p = MultiPoly::int(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 });
    let mut roots: Vec<Rational> = Vec::new();
    let mut used = 0;
    while used < degree {
        let left = degree - used;
        if left >= 2 && rng.gen_bool(0.25) {
            let c = MultiPoly::constant(rat(rng.gen_range(1..=9), rng.gen_range(1..=4)));
            p = &p * &(&(&x * &x) + &c);
            used += 2;
            continue;
        }
        let r = rat(2 * rng.gen_range(-40..40i64) + 1, 16);
        if roots.contains(&r) {
            continue;
        }
        let mult = if left >= 3 && rng.gen_bool(0.2) { 3 } else { 1 };
        p = &p * &(&x - &MultiPoly::constant(r.clone())).pow(mult);
        roots.push(r);
        used += mult;
    }
    (p, roots)
}

fn grid_sign_changes(p: &MultiPoly, lo: i64, hi: i64) -> usize {
    let mut last = 0;
    let mut n = 0;
    for j in lo..=hi {
        let v = p.eval(&[("x", rat(j, 8))]);
        let s = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
        if s != 0 && last != 0 && s != last {
            n += 1;
        }
        if s != 0 {
            last = s;
        }
    }
    n
}

/// Sturm counts against grid sign changes; returns the number of disagreements.
pub fn sturm_oracle(cases: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..cases {
        let (p, roots) = random_rooted_poly(&mut rng);
        let whole = count_real_roots(&p, "x", &RealInterval::whole_line());
        let grid = grid_sign_changes(&p, -48, 48);
        let a = rng.gen_range(-48..48i64);
        let b = rng.gen_range(a + 1..=48);
        let sub = count_real_roots(&p, "x", &RealInterval::closed(rat(a, 8), rat(b, 8)));
        let sub_grid = grid_sign_changes(&p, a, b);
        if whole != grid || whole != roots.len() || sub != sub_grid {
            bad += 1;
        }
    }
    bad
}

/// Soundness of `bound_on_interval` at random samples; returns violations.
pub fn bound_oracle(cases: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..cases {
        let deg = rng.gen_range(0..=8usize);
        let coeffs: Vec<Rational> = (0..=deg).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=3))).collect();
        let p = MultiPoly::univariate("x", &coeffs);
        let a = rng.gen_range(-48..48i64);
        let b = rng.gen_range(a + 1..=48);
        let (lo, hi) = (rat(a, 16), rat(b, 16));
        let tol = rat(1, 10i64.pow(rng.gen_range(1..=6)));
        let e = bound_on_interval(&p, "x", &lo, &hi, &tol);
        for _ in 0..4 {
            let u = rng.gen_range(0..=64i64);
            let x = &lo + (&hi - &lo) * rat(u, 64);
            let v = p.eval(&[("x", x)]);
            if v < e.lo || v > e.hi {
                bad += 1;
            }
        }
    }
    bad
}

/// Random small ideals: every S-pair of the computed basis reduces to zero
/// and every generator lies in the basis. Returns `(checked, failures)`.
pub fn groebner_oracle(ideals: usize, seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = ["x", "y", "z"];
    let cfg = GroebnerConfig::default();
    let mut checked = 0;
    let mut bad = 0;
    for i in 0..ideals {
        let gens: Vec<MultiPoly> = (0..rng.gen_range(2..=3))
            .map(|_| {
                let mut p = MultiPoly::zero();
                for _ in 0..rng.gen_range(2..=4) {
                    let mut m = MultiPoly::int(rng.gen_range(-3..=3));
                    for v in vars {
                        m = &m * &MultiPoly::var(v).pow(rng.gen_range(0..=1));
                    }
                    p = &p + &m;
                }
                p
            })
            .filter(|p| !p.is_zero())
            .collect();
        let order = if i % 2 == 0 { MonomialOrder::grevlex(&vars) } else { MonomialOrder::lex(&vars) };
        match groebner_basis_with(&gens, &order, &cfg) {
            Ok((basis, _)) => {
                checked += 1;
                if !verify_groebner(&basis) || gens.iter().any(|g| !normal_form(g, &basis).is_zero()) {
                    bad += 1;
                }
            }
            Err(_) => bad += 1,
        }
    }
    (checked, bad)
}

pub fn criterion_11(size: SuiteSize) -> CriterionResult {
    timed(11, "oracle suites (Sturm, Groebner S-pairs, interval bounds)", || {
        let sturm_bad = sturm_oracle(size.oracle_cases, DEFAULT_SEED);
        let bound_bad = bound_oracle(size.oracle_cases, DEFAULT_SEED + 1);
        let (checked, gb_bad) = groebner_oracle(size.groebner_ideals, DEFAULT_SEED + 2);
        let ok = sturm_bad == 0 && bound_bad == 0 && gb_bad == 0 && checked == size.groebner_ideals;
        Ok((
            ok,
            format!(
                "Sturm {}/{} agree, bounds {} violations over {} cases, Groebner {}/{} bases close under S-pairs",
                size.oracle_cases - sturm_bad,
                size.oracle_cases,
                bound_bad,
                size.oracle_cases,
                checked - gb_bad.min(checked),
                size.groebner_ideals
            ),
        ))
    })
}

pub fn run_all(size: SuiteSize) -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(size),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(size),
        criterion_10(),
        criterion_11(size),
    ]
}
