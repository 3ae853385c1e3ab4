//! One function per subcommand. Each returns the certificates it produced
//! and a human-readable rendering.

use std::cmp::Ordering;

use holonomy_core::algebra::rational::{format_fraction, format_rational, int, to_f64};
use holonomy_core::algebra::Rational;
use holonomy_core::certificate::{Certificate, Fact};
use holonomy_core::error::{Error, Result};
use holonomy_core::filling::alexander::alexander_certificate;
use holonomy_core::filling::threshold::default_bound_tolerance;
use holonomy_core::filling::{
    alexander_check_text, certify_slope, derive_threshold_tol, positive_slope_witness, scan_csv, scan_slopes_with_jobs,
    SlopeCertificate, Verdict,
};
use holonomy_core::ideal::GroebnerConfig;
use holonomy_core::realroots::domain::{compute_s_domain, compute_z_domain, s_domain_facts, z_domain_facts};
use holonomy_core::realroots::RealAlg;
use holonomy_core::variety::classify::point_slack_sign;
use holonomy_core::variety::{
    classify_character_point, derive_character_curve_with, irreducibility_certificate, reconstruct_representation,
    validate_a_polynomial, verify_unitarity_reduction, CharacterClass, CharacterPoint, ReconstructionMode, Strategy,
};
use serde_json::json;

/// What a subcommand produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub certificates: Vec<Certificate>,
    pub text: String,
    /// CSV rendering, for commands that have one.
    pub csv: Option<String>,
    /// `false` when a certificate's verdict records a failed check.
    pub ok: bool,
}

impl Outcome {
    fn single(cert: Certificate, text: String, ok: bool) -> Self {
        Outcome { certificates: vec![cert], text, csv: None, ok }
    }
}

fn holds_all(facts: &[Fact]) -> bool {
    facts.iter().all(|f| f.exact_values.get("holds").is_none_or(|h| h == true))
}

pub fn derive_curve(fallback_only: bool) -> Result<Outcome> {
    derive_curve_with(&GroebnerConfig::from_env(), fallback_only)
}

pub fn derive_curve_with(cfg: &GroebnerConfig, fallback_only: bool) -> Result<Outcome> {
    let strategy = if fallback_only { Strategy::FallbackOnly } else { Strategy::Auto };
    let d = derive_character_curve_with(cfg, strategy)?;
    let mut cert = d.to_certificate();
    cert.inputs = json!({"strategy": if fallback_only { "fallback" } else { "auto" }, "max_pairs": cfg.max_pairs});
    let mut text = String::new();
    text.push_str("character curve of m137:\n");
    text.push_str("  (s - 2)(s + 1)^2 t^4 - (s - 2)(s + 2)(s + 1) t^2 - 1 = 0\n");
    text.push_str(&format!("  expanded: {}\n", d.curve.poly.to_text()));
    text.push_str(&format!("  route: {:?}", d.path));
    if let Some(e) = &d.direct_failure {
        text.push_str(&format!(" (direct route stopped: {e})"));
    }
    text.push('\n');
    for (name, st) in &d.stages {
        text.push_str(&format!("  stage {name}: {} pairs, basis size {}\n", st.pairs_processed, st.basis_size));
    }
    text.push_str(&format!(
        "  membership: P in ideal {}, ideal in <P> {}; reference generators {:?}; w-relation {}\n",
        d.forward_membership, d.reverse_membership, d.published_members, d.w_relation_member
    ));
    let ok = d.verified();
    Ok(Outcome::single(cert, text, ok))
}

pub fn irreducibility() -> Result<Outcome> {
    let c = irreducibility_certificate()?;
    let mut text = String::from("irreducibility of P over Q(s)[t]:\n");
    for (name, chain) in [("(2,2)", &c.case_2_2), ("(1,3)", &c.case_1_3)] {
        text.push_str(&format!("  case {name}: {} identity checks, admissible degree splits {:?}\n", chain.checks.len(), chain.degrees.admissible));
        for k in &chain.contradictions {
            text.push_str(&format!("    contradiction {} != 0: {}\n", k.polynomial.to_text(), k.nonzero));
        }
    }
    let ok = c.verified();
    Ok(Outcome::single(c.to_certificate(), text, ok))
}

pub fn domains() -> Result<Outcome> {
    let u = compute_s_domain();
    let v = compute_z_domain();
    let mut cert = Certificate::new("domains", json!({}));
    cert.fact("U (admissible longitude traces s)", "Sturm isolation", serde_json::to_value(&u).expect("domain serializes"));
    cert.fact("V (admissible longitude eigenvalues z)", "Sturm isolation", serde_json::to_value(&v).expect("domain serializes"));
    let mut facts = s_domain_facts();
    facts.extend(z_domain_facts());
    let ok = holds_all(&facts) && u.is_well_formed() && v.is_well_formed();
    cert.facts.extend(facts);
    let cert = cert.with_verdict(if ok { "VERIFIED" } else { "FAILED" });
    let text = format!("U = {}\nV = {}\n", u.display(), v.display());
    Ok(Outcome::single(cert, text, ok))
}

fn enclosure_json(v: &RealAlg) -> serde_json::Value {
    let e = v.enclosure();
    json!([format_fraction(&e.lo), format_fraction(&e.hi)])
}

pub fn classify(s: &Rational, t: Option<&Rational>) -> Result<Outcome> {
    let points = match t {
        Some(t) => vec![CharacterPoint::rational(s.clone(), t.clone())?],
        None => CharacterPoint::above(s)?,
    };
    if points.is_empty() {
        return Err(Error::Inconsistent(format!("no real curve point has s = {}", format_fraction(s))));
    }
    let mut cert = Certificate::new(
        "classification",
        json!({"s": format_fraction(s), "t": t.map(format_fraction)}),
    );
    let mut text = String::new();
    let mut labels = Vec::new();
    let mut ok = true;
    for pt in &points {
        let class = classify_character_point(pt)?;
        let two = |v: &RealAlg| v.cmp_rational(&int(-2)) == Ordering::Greater && v.cmp_rational(&int(2)) == Ordering::Less;
        let criterion = if two(&pt.s) && two(&pt.t) { Some(point_slack_sign(pt)? >= 0) } else { None };
        let mode = if class == CharacterClass::Sl2r { ReconstructionMode::Real } else { ReconstructionMode::Complex };
        let r = reconstruct_representation(pt, mode)?;
        ok &= r.certified();
        cert.fact(
            format!("point s = {}, t ≈ {:.4}: {}", format_fraction(s), pt.t.approx(), class.label()),
            "exact comparison with the roots of s^3+2s^2-4s-4 and the trace criterion",
            json!({
                "s": enclosure_json(&pt.s),
                "t": enclosure_json(&pt.t),
                "class": class.label(),
                "su2_trace_criterion": criterion,
                "reconstruction": {
                    "mode": format!("{:?}", r.mode).to_lowercase(),
                    "relator_residual": format!("{:e}", r.residual),
                    "all_real": r.all_real,
                    "certified": r.certified(),
                },
            }),
        );
        text.push_str(&format!(
            "s = {}, t ≈ {:+.4}: {}  (trace criterion {}, {} reconstruction residual {:.1e})\n",
            format_rational(s),
            pt.t.approx(),
            class.label(),
            criterion.map_or("n/a".to_string(), |b| b.to_string()),
            format!("{:?}", r.mode).to_lowercase(),
            r.residual
        ));
        labels.push(class.label());
    }
    let red = verify_unitarity_reduction()?;
    cert.fact(
        "t^2 (s+1)^2 * slack + 4 (s+1)^3 (s-2) t^2 lies in <P> (the trace criterion reduces to (s+1)^3 (s-2) t^2 <= 0)",
        "normal form modulo P",
        json!({"member": red.member, "coefficient": format_fraction(&red.coefficient)}),
    );
    ok &= red.verified();
    labels.sort();
    labels.dedup();
    let cert = cert.with_verdict(if ok { labels.join(",") } else { "FAILED".to_string() });
    Ok(Outcome::single(cert, text, ok))
}

fn slope_text(c: &SlopeCertificate) -> String {
    let mut text = format!("n = {}: {} ({} distinct roots in V)\n", c.n, c.verdict.label(), c.root_count_in_v);
    text.push_str(&format!("  filling polynomial (degree {}): {}\n", c.filling.poly.degree_in("z").unwrap_or(0), c.filling.poly.to_text()));
    for w in &c.witnesses {
        text.push_str(&format!("  witness root in ({:.6}, {:.6})\n", to_f64(&w.lo), to_f64(&w.hi)));
    }
    if let Some(p) = &c.positive {
        text.push_str(&format!(
            "  G(1) = {}, G({:.4}) sign {}, root in ({:.6}, {:.6})\n",
            format_rational(&p.g_at_one),
            to_f64(&p.left),
            p.sign_at_left,
            to_f64(&p.witness.lo),
            to_f64(&p.witness.hi)
        ));
    }
    text
}

pub fn certify(n: i64) -> Result<Outcome> {
    let c = certify_slope(n)?;
    let ok = c.check();
    Ok(Outcome::single(c.to_certificate(), slope_text(&c), ok))
}

pub fn witness(n: i64) -> Result<Outcome> {
    let c = positive_slope_witness(n)?;
    let ok = c.check() && c.verdict == Verdict::RealSolutionFound;
    let mut cert = c.to_certificate();
    cert.kind = "positive_witness".into();
    Ok(Outcome::single(cert, slope_text(&c), ok))
}

pub fn scan(from: i64, to: i64, jobs: usize) -> Result<Outcome> {
    let certs = scan_slopes_with_jobs(from, to, jobs)?;
    let ok = certs.iter().all(|c| c.check());
    let csv = scan_csv(&certs);
    let certificates: Vec<Certificate> = certs.iter().map(|c| c.to_certificate()).collect();
    let text = crate::report::report(&certificates);
    Ok(Outcome { certificates, text, csv: Some(csv), ok })
}

pub fn threshold(tol: Option<&Rational>) -> Result<Outcome> {
    let tol = tol.cloned().unwrap_or_else(default_bound_tolerance);
    let t = derive_threshold_tol(true, &tol)?;
    let ok = t.check();
    let text = format!(
        "N0 = {}\n  q  = {} (≈ {:.4})\n  c5 = {} (≈ {:.4})\n  c6 = {} (≈ {:.4})\n  r5 ≈ {:.4}; case-2 interval [{:.4}, {:.4}]\n  certify_slope(-n') = NO_REAL_SOLUTIONS for n' = {}..{}\n",
        t.n0,
        format_fraction(&t.q),
        to_f64(&t.q),
        format_fraction(&t.c5),
        to_f64(&t.c5),
        format_fraction(&t.c6),
        to_f64(&t.c6),
        t.r5.approx(),
        to_f64(&t.case2_interval[0]),
        to_f64(&t.case2_interval[1]),
        t.n0,
        t.n0 + holonomy_core::filling::threshold::CROSS_CHECK_SPAN
    );
    Ok(Outcome::single(t.to_certificate(), text, ok))
}

pub fn apoly_validate() -> Result<Outcome> {
    let v = validate_a_polynomial()?;
    let text = format!(
        "A-polynomial: -z^4 A - B m^2 + z^3 A m^4\n  A = {}\n  B = {}\n  matches reference form: {}\n  A = (z-1)(z^2+z+1)^3: {}\n  {} boundary characters, max |A-poly(z, m)| = {:.2e}\n",
        v.form.a.to_text(),
        v.form.b.to_text(),
        v.matches_printed,
        v.a_factorization,
        v.samples.len(),
        v.max_residual
    );
    let ok = v.verified();
    Ok(Outcome::single(v.to_certificate(), text, ok))
}

pub fn alexander(poly: &str) -> Result<Outcome> {
    let (p, verdict) = alexander_check_text(poly)?;
    let cert = alexander_certificate(poly, &p, verdict);
    let text = format!(
        "coefficients {:?}: all nonzero coefficients are ±1: {}\n",
        p.coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        verdict
    );
    // the check itself succeeded whatever its boolean answer
    Ok(Outcome::single(cert, text, true))
}
