//! The documented examples of every operation, through the public API.

use std::collections::BTreeMap;

use holonomy_core::algebra::rational::{int, rat};
use holonomy_core::algebra::{laurent_normalize, parse_poly, word_matrix, GroupWord, LaurentPoly, MultiPoly};
use holonomy_core::filling::{
    alexander_check_text, certify_slope, filling_polynomial, positive_slope_witness, scan_slopes, Verdict,
};
use holonomy_core::ideal::{
    eliminate, groebner_basis, ideal_member, normal_form, saturate_units, IdealBasis, MonomialOrder,
};
use holonomy_core::realroots::domain::{compute_s_domain, cubic_roots, curve_polynomial, real_t_count, v_endpoints};
use holonomy_core::realroots::{bound_on_interval, count_real_roots, isolate_real_roots, sturm_chain, RealInterval};
use holonomy_core::variety::apoly::{a_poly, b_poly};
use holonomy_core::variety::classify::su2_triangle_criterion;
use holonomy_core::variety::presentation::{LONGITUDE, BETA};
use holonomy_core::variety::{
    classify_character_point, generic_images, reconstruct_representation, relator_entry_equations, w_coordinate,
    CharacterClass, CharacterCurve, CharacterPoint, Presentation, ReconstructionMode,
};
use holonomy_core::Error;
use num_traits::Zero;

fn p(s: &str) -> MultiPoly {
    parse_poly(s).unwrap()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-4
}

#[test]
fn polynomial_arithmetic() {
    assert_eq!(&p("s+1") * &p("s-1"), p("s^2-1"));
    let q = p("3*x^2*y - 2/5*y + 7");
    assert!((&q - &q).is_zero());
    assert_eq!(&p("z-1") * &p("z^2+z+1").pow(3), p("-1-2*z-3*z^2-z^3+z^4+3*z^5+2*z^6+z^7"));
    assert_eq!(&p("z-1") * &p("z^2+z+1").pow(3), a_poly());
}

#[test]
fn substitution_of_w_is_divisible_by_p() {
    // generator stw - t^2 - w^2 + ... : the w-substitution, cleared, is a multiple of P
    let g1 = holonomy_core::variety::published_generators()[0].clone();
    let (cleared, _) = g1.substitute("w", &p("t^2*(s+1) - 1"), &p("t*(s+1)"));
    let r = normal_form(&cleared, &IdealBasis { generators: vec![curve_polynomial()], order: MonomialOrder::lex(&["t", "s"]), is_groebner: true });
    assert!(r.is_zero(), "remainder {}", r.to_text());
    assert_eq!(g1.compose("s", &p("s")), g1);
}

#[test]
fn laurent_normalization() {
    let zz = &LaurentPoly::var("z") + &LaurentPoly::inv_var("z");
    assert_eq!(laurent_normalize(&zz, "z"), (p("z^2+1"), 1));
    assert_eq!(laurent_normalize(&LaurentPoly::monomial(int(1), "z", 5), "z"), (p("z^5"), 0));
    for np in [2i64, 3, 10] {
        let f = filling_polynomial(-np).unwrap();
        let lf = LaurentPoly::from_poly(&f.poly).invert_var("z");
        let (g, shift) = laurent_normalize(&lf, "z");
        // F(1/z) z^(4n'+6) = F, less twice any stripped power of z
        assert_eq!(shift as i64, 4 * np + 6 - 2 * f.stripped_z_power as i64);
        assert_eq!(g, f.poly);
    }
}

#[test]
fn word_evaluation() {
    let images = generic_images();
    let id = word_matrix(&GroupWord::empty(), &images).unwrap();
    assert_eq!(id, holonomy_core::algebra::SymMatrix2::new(LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one()));
    let l = word_matrix(&GroupWord::parse("l").unwrap(), &images).unwrap();
    assert_eq!(&l, &images[&LONGITUDE]);
    let mut missing = BTreeMap::new();
    missing.insert(BETA, images[&BETA].clone());
    assert!(matches!(word_matrix(&GroupWord::parse("l").unwrap(), &missing), Err(Error::MissingGenerator('l'))));
    // the trivial representation (identity images) satisfies the relator
    let rel = Presentation::m137().relator();
    let one = holonomy_core::algebra::SymMatrix2::new(LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one());
    let trivial: BTreeMap<char, _> = [(LONGITUDE, one.clone()), (BETA, one.clone())].into_iter().collect();
    assert_eq!(word_matrix(&rel, &trivial).unwrap(), one);
    // in the normal form, z = x = 1, y = 0 leaves λ unipotent: the relator
    // reads λ⁻¹ = I and its (1,2) entry is off by -1
    let m = word_matrix(&rel, &images).unwrap();
    let at = |e: &LaurentPoly| e.eval(&[("z", int(1)), ("x", int(1)), ("y", int(0))]);
    let [a, b, c, d] = m.entries();
    assert_eq!((at(a), at(b), at(c), at(d)), (int(1), int(-1), int(0), int(1)));
}

#[test]
fn groebner_examples() {
    let order = MonomialOrder::lex(&["x", "y"]);
    let g = groebner_basis(&[p("x")], &order).unwrap();
    assert_eq!(g.generators, vec![p("x")]);
    assert!(normal_form(&p("x"), &g).is_zero());
    assert!(normal_form(&MultiPoly::zero(), &g).is_zero());
    let g = groebner_basis(&[p("x+y"), p("y")], &order).unwrap();
    let mut gens = g.generators.clone();
    gens.sort_by_key(|q| q.to_text());
    assert_eq!(gens, vec![p("x"), p("y")]);
}

#[test]
fn elimination_and_saturation_examples() {
    let e = eliminate(&[p("y-s"), p("y-t")], &["y"], &MonomialOrder::lex(&["y", "s", "t"])).unwrap();
    assert!(e.iter().any(|q| q.is_unit_multiple_of(&p("s-t")).is_some()));
    let e = eliminate(&[MultiPoly::one()], &["x"], &MonomialOrder::lex(&["x"])).unwrap();
    assert!(e.iter().all(|q| q.is_constant()) && !e.is_empty());

    let sat = saturate_units(&[p("z^2")], &["z"]);
    let drop: Vec<String> = sat.inverse_vars.clone();
    let order = MonomialOrder::elimination(&drop, &["z"]);
    let e = eliminate(&sat.generators, &drop, &order).unwrap();
    assert!(e.iter().any(|q| q.is_constant() && !q.is_zero()));

    let sat = saturate_units(&[], &["z"]);
    assert_eq!(sat.generators.len(), 1);
    assert_eq!(sat.generators[0], &(&MultiPoly::var("z") * &MultiPoly::var("inv_z")) - &MultiPoly::one());
}

#[test]
fn membership_examples() {
    let pp = curve_polynomial();
    assert!(ideal_member(&pp, std::slice::from_ref(&pp)).unwrap());
    assert!(!ideal_member(&MultiPoly::one(), &relator_entry_equations()).unwrap());
}

#[test]
fn entry_equations_at_unipotent_and_reconstructed_points() {
    let at_unipotent: Vec<_> = relator_entry_equations().iter().map(|e| e.eval(&[("z", int(1)), ("x", int(1)), ("y", int(0))])).collect();
    assert_eq!(at_unipotent.iter().filter(|v| !v.is_zero()).count(), 1);
    let pt = &CharacterPoint::above(&int(3)).unwrap()[0];
    let r = reconstruct_representation(pt, ReconstructionMode::Real).unwrap();
    assert!(r.residual < 1e-9 && r.all_real);
}

#[test]
fn curve_examples() {
    let c = CharacterCurve::m137();
    assert_eq!(c.poly, p("(s-2)*(s+1)^2*t^4 - (s-2)*(s+2)*(s+1)*t^2 - 1"));
    assert_eq!(c.at_s(&int(2)), p("-1"));
    assert_eq!(c.at_s(&int(-1)), p("-1"));
    assert_eq!(c.at_s(&int(0)), p("-2*t^4+4*t^2-1"));
    assert_eq!(w_coordinate(&int(0), &int(1)).unwrap(), int(0));
    assert_eq!(w_coordinate(&int(2), &int(1)).unwrap(), rat(2, 3));
    assert!(matches!(w_coordinate(&int(-1), &int(1)), Err(Error::Domain(_))));
}

#[test]
fn su2_criterion_examples() {
    assert!(su2_triangle_criterion(&int(0), &int(0), &int(0)).unwrap());
    assert!(su2_triangle_criterion(&int(0), &int(0), &int(2)).unwrap());
    assert!(!su2_triangle_criterion(&int(0), &int(0), &rat(21, 10)).unwrap());
}

#[test]
fn classification_examples() {
    for pt in CharacterPoint::above(&int(0)).unwrap() {
        assert_eq!(classify_character_point(&pt).unwrap(), CharacterClass::Su2);
        let r = reconstruct_representation(&pt, ReconstructionMode::Complex).unwrap();
        assert!(r.residual < 1e-9);
    }
    for s in [3, -3] {
        for pt in CharacterPoint::above(&int(s)).unwrap() {
            assert_eq!(classify_character_point(&pt).unwrap(), CharacterClass::Sl2r);
        }
    }
}

#[test]
fn sturm_examples() {
    assert_eq!(sturm_chain(&p("z^2-1"), "z").polys, vec![p("z^2-1"), p("2*z"), p("1")]);
    assert_eq!(sturm_chain(&p("7"), "z").polys, vec![p("7")]);
    assert_eq!(count_real_roots(&p("z^2-1"), "z", &RealInterval::open(int(0), int(2))), 1);
    assert_eq!(count_real_roots(&b_poly(), "z", &RealInterval::whole_line()), 6);
    assert_eq!(count_real_roots(&p("s^3+2*s^2-4*s-4"), "s", &RealInterval::whole_line()), 3);
}

#[test]
fn isolation_examples() {
    let r = isolate_real_roots(&p("x^2-2"), "x", &rat(1, 10000));
    assert_eq!(r.len(), 2);
    assert!(close(r[0].approx(), -2f64.sqrt()) && close(r[1].approx(), 2f64.sqrt()));
    let c = cubic_roots();
    for (iv, v) in c.iter().zip([-2.9032, -0.8061, 1.7093]) {
        assert!(close(iv.approx(), v));
    }
    let b = isolate_real_roots(&b_poly(), "z", &rat(1, 10000));
    for (iv, v) in b.iter().zip([-2.3396, -1.4121, -0.7082, -0.4274, 0.8684, 1.1516]) {
        assert!(close(iv.approx(), v));
    }
}

#[test]
fn bound_examples() {
    let tol = rat(1, 1000);
    let e = bound_on_interval(&p("z^2"), "z", &int(-1), &int(2), &tol);
    assert!(e.lo <= int(0) && e.hi >= int(4));
    assert!(&e.hi - int(4) <= tol && int(0) - &e.lo <= tol);
    assert!(bound_on_interval(&a_poly(), "z", &rat(-2, 5), &rat(8, 10), &tol).hi < int(0));
    assert!(bound_on_interval(&b_poly(), "z", &rat(-2, 5), &rat(8, 10), &tol).lo > int(0));
}

#[test]
fn domain_examples() {
    let u = compute_s_domain();
    assert_eq!(u.intervals.len(), 3);
    assert!(u.contains(&int(0)) && u.contains(&int(3)) && u.contains(&int(-3)));
    assert!(!u.contains(&rat(19, 10)));
    assert!(real_t_count(&int(0)) > 0);
    let v = v_endpoints();
    assert!(close(v[0].approx(), -2.5038) && close(v[1].approx(), -0.3994));
    assert!((v[0].approx() * v[1].approx() - 1.0).abs() < 1e-9);
}

#[test]
fn filling_polynomial_examples() {
    let a = a_poly();
    let b = b_poly();
    let z = |k: u32| MultiPoly::var("z").pow(k);
    // n = -2: A z^7 - B - A, with the common factor z stripped
    let f = filling_polynomial(-2).unwrap();
    let expect = &(&(&a * &z(7)) - &b) - &a;
    assert!(expect.constant_term().is_zero());
    assert_eq!(f.stripped_z_power, 1);
    assert_eq!(f.poly, expect.shift_down("z", 1));
    let f = filling_polynomial(2).unwrap();
    assert!(f.poly.is_unit_multiple_of(&(&(&(&a * &z(9)) + &(&b * &z(1))) - &a)).is_some());
    let f = filling_polynomial(-1).unwrap();
    assert!(f.poly.is_unit_multiple_of(&(&(&(&a * &z(5)) - &b) - &(&a * &z(2)))).is_some());
    assert_eq!(f.clearing_shift, 2);
}

#[test]
fn slope_examples() {
    assert_eq!(certify_slope(-50).unwrap().verdict, Verdict::NoRealSolutions);
    let c = certify_slope(1).unwrap();
    assert_eq!(c.verdict, Verdict::RealSolutionFound);
    let w = c.positive.unwrap().witness;
    assert!(w.lo >= rat(8684, 10000) && w.hi < int(1));
    let c = certify_slope(-2).unwrap();
    assert!(c.check());
    assert!(!positive_slope_witness(7).unwrap().witnesses.is_empty());
    assert_eq!(scan_slopes(-5, 5).unwrap().len(), 10);
    for n in 1..=12 {
        assert_eq!(filling_polynomial(n).unwrap().at_one(), int(-4));
    }
}

#[test]
fn alexander_examples() {
    assert!(!alexander_check_text("x^4-2*x^3+3*x^2-2*x+1").unwrap().1);
    assert!(alexander_check_text("1").unwrap().1);
    assert!(alexander_check_text("x^2-x+1").unwrap().1);
}
