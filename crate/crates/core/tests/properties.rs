//! Randomized invariants of the exact layers.

use holonomy_core::algebra::rational::{format_fraction, int, parse_rational, rat};
use holonomy_core::algebra::{parse_poly, LaurentPoly, MultiPoly, Rational};
use holonomy_core::filling::alexander::{alexander_coefficient_check, AlexanderPoly};
use holonomy_core::filling::filling_polynomial;
use holonomy_core::realroots::{bound_on_interval, count_real_roots, isolate_real_roots, RealInterval};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

/// Sums of up to five monomials in `x, y, z` with small exponents.
fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((small_rat(), 0u32..3, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (c, a, b, e) in terms {
            let m = &(&MultiPoly::var("x").pow(a) * &MultiPoly::var("y").pow(b)) * &MultiPoly::var("z").pow(e);
            p = &p + &m.scale(&c);
        }
        p
    })
}

fn univariate() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(small_rat(), 1..9).prop_map(|c| MultiPoly::univariate("x", &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_round_trip(a in poly()) {
        prop_assert_eq!(parse_poly(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn rational_round_trip(r in small_rat()) {
        prop_assert_eq!(parse_rational(&format_fraction(&r)).unwrap(), r);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly(), b in poly(), x in small_rat(), y in small_rat(), z in small_rat()) {
        let at = |p: &MultiPoly| p.eval(&[("x", x.clone()), ("y", y.clone()), ("z", z.clone())]);
        prop_assert_eq!(at(&(&a * &b)), at(&a) * at(&b));
        prop_assert_eq!(at(&(&a + &b)), at(&a) + at(&b));
    }

    #[test]
    fn inverting_twice_is_identity(a in poly()) {
        let l = LaurentPoly::from_poly(&a);
        prop_assert_eq!(l.invert_var("x").invert_var("x"), l);
    }

    #[test]
    fn sturm_counts_distinct_rational_roots(roots in prop::collection::vec(-12i64..=12, 1..7), lead in 1i64..5) {
        let x = MultiPoly::var("x");
        let mut p = MultiPoly::int(lead);
        for r in &roots {
            p = &p * &(&x - &MultiPoly::constant(rat(*r, 3)));
        }
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(count_real_roots(&p, "x", &RealInterval::whole_line()), distinct.len());
        // the isolated roots contain the known ones, in order
        let iv = isolate_real_roots(&p, "x", &rat(1, 100));
        prop_assert_eq!(iv.len(), distinct.len());
        for (w, r) in iv.iter().zip(&distinct) {
            let r = rat(*r, 3);
            prop_assert!(w.lo <= r && r <= w.hi);
        }
    }

    #[test]
    fn bound_encloses_samples(p in univariate(), a in -16i64..16, w in 1i64..16, u in 0i64..=32) {
        let (lo, hi) = (rat(a, 8), rat(a + w, 8));
        let e = bound_on_interval(&p, "x", &lo, &hi, &rat(1, 1000));
        let x = &lo + (&hi - &lo) * rat(u, 32);
        let v = p.eval(&[("x", x)]);
        prop_assert!(e.lo <= v && v <= e.hi);
    }

    #[test]
    fn alexander_check_is_unit_invariant(c in prop::collection::vec(-3i64..=3, 1..8), negate: bool, k in 0usize..6) {
        prop_assume!(c.iter().any(|v| *v != 0));
        let p = AlexanderPoly::from_i64(&c).unwrap();
        prop_assert_eq!(alexander_coefficient_check(&p), alexander_coefficient_check(&p.times_unit(negate, k)));
    }

    #[test]
    fn filling_polynomial_value_at_one(n in -60i64..=60) {
        prop_assume!(n != 0);
        let f = filling_polynomial(n).unwrap();
        prop_assert_eq!(f.at_one(), if n < 0 { int(4) } else { int(-4) });
        prop_assert!(!f.poly.constant_term().is_zero());
    }
}
