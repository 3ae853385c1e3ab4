//! Rational interval arithmetic and real algebraic numbers given either
//! exactly or as (defining polynomial, isolating interval).

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use super::isolate::IsolatingInterval;
use super::sturm::{squarefree_chain, RealInterval};
use crate::algebra::rational::{int, to_f64};
use crate::algebra::{MultiPoly, Rational};

/// A closed interval `[lo, hi]` of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatInterval {
    #[serde(with = "crate::certificate::rational_str")]
    pub lo: Rational,
    #[serde(with = "crate::certificate::rational_str")]
    pub hi: Rational,
}

impl RatInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        RatInterval { lo, hi }
    }

    pub fn point(r: Rational) -> Self {
        RatInterval { lo: r.clone(), hi: r }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// The sign of every point of the interval, if it is constant.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn neg(&self) -> Self {
        RatInterval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().cloned().expect("four products");
        let hi = c.iter().max().cloned().expect("four products");
        RatInterval { lo, hi }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul(&RatInterval::point(c.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return RatInterval::point(int(1));
        }
        if k.is_multiple_of(2) && self.contains_zero() {
            let m = self.lo.abs().max(self.hi.abs());
            return RatInterval { lo: Rational::zero(), hi: num_traits::pow(m, k as usize) };
        }
        let a = num_traits::pow(self.lo.clone(), k as usize);
        let b = num_traits::pow(self.hi.clone(), k as usize);
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    /// `1/x` for an interval not containing zero.
    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(RatInterval { lo: Rational::from_integer(1.into()) / &self.hi, hi: Rational::from_integer(1.into()) / &self.lo })
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }
}

/// Natural interval extension of `p`, term by term. Variables of `p` that
/// are missing from `vals` are an error.
pub fn eval_box(p: &MultiPoly, vals: &[(&str, RatInterval)]) -> RatInterval {
    let idx: Vec<Option<usize>> = p.vars().iter().map(|v| vals.iter().position(|(n, _)| n == v)).collect();
    let mut acc = RatInterval::point(Rational::zero());
    for (e, c) in p.terms() {
        let mut term = RatInterval::point(c.clone());
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                let j = idx[i].unwrap_or_else(|| panic!("no value for variable {}", p.vars()[i]));
                term = term.mul(&vals[j].1.pow(k));
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// A real algebraic number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RealAlg {
    Rational {
        #[serde(with = "crate::certificate::rational_str")]
        value: Rational,
    },
    Root { root: IsolatingInterval },
}

impl RealAlg {
    pub fn rational(r: Rational) -> Self {
        RealAlg::Rational { value: r }
    }

    pub fn root(iv: IsolatingInterval) -> Self {
        RealAlg::Root { root: iv }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealAlg::Rational { value } => Some(value),
            RealAlg::Root { .. } => None,
        }
    }

    /// A closed rational enclosure.
    pub fn enclosure(&self) -> RatInterval {
        match self {
            RealAlg::Rational { value } => RatInterval::point(value.clone()),
            RealAlg::Root { root } => RatInterval::new(root.lo.clone(), root.hi.clone()),
        }
    }

    /// The same number with its enclosure narrowed to at most `width`.
    pub fn refined(&self, width: &Rational) -> RealAlg {
        match self {
            RealAlg::Rational { .. } => self.clone(),
            RealAlg::Root { root } => RealAlg::Root { root: root.refine_to(width) },
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RealAlg::Rational { value } => to_f64(value),
            RealAlg::Root { root } => root.refine_to(&Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(2), 60))).approx(),
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        match self {
            RealAlg::Rational { value } => value.cmp(r),
            RealAlg::Root { root } => root.cmp_rational(r),
        }
    }

    /// Exact comparison with the root isolated by `other`.
    pub fn cmp_root(&self, other: &IsolatingInterval) -> Ordering {
        match self {
            RealAlg::Rational { value } => other.cmp_rational(value).reverse(),
            RealAlg::Root { root } => cmp_roots(root, other),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cmp_rational(&Rational::zero()) == Ordering::Equal
    }
}

fn int_part(iv: &IsolatingInterval) -> IntPoly {
    IntPoly::from_multi(&iv.poly, &iv.var).squarefree()
}

/// Exact comparison of two isolated roots: equal iff the gcd of the
/// defining polynomials has a root in the intersection of the intervals.
pub fn cmp_roots(a: &IsolatingInterval, b: &IsolatingInterval) -> Ordering {
    let lo = (&a.lo).max(&b.lo).clone();
    let hi = (&a.hi).min(&b.hi).clone();
    if lo < hi {
        let g = int_part(a).gcd(&int_part(b));
        if g.degree() > 0 && squarefree_chain(&g.squarefree(), "_").count(&RealInterval::open(lo, hi)) > 0 {
            return Ordering::Equal;
        }
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    loop {
        if x.hi <= y.lo {
            return Ordering::Less;
        }
        if y.hi <= x.lo {
            return Ordering::Greater;
        }
        x = x.bisect(1);
        y = y.bisect(1);
    }
}

/// Sign of `p` at a point with algebraic coordinates, by interval
/// evaluation on shrinking boxes. `None` means the enclosure still contains
/// zero at width `min_width` (the point is certified on `p = 0` to that
/// tolerance).
pub fn sign_at_point(p: &MultiPoly, point: &[(&str, &RealAlg)], min_width: &Rational) -> (Option<i32>, RatInterval) {
    let mut width = Rational::new(1.into(), 256.into());
    loop {
        let refined: Vec<(&str, RatInterval)> = point.iter().map(|(n, v)| (*n, v.refined(&width).enclosure())).collect();
        let e = eval_box(p, &refined);
        if let Some(s) = e.sign() {
            if s != 0 || refined.iter().all(|(_, iv)| iv.width().is_zero()) {
                return (Some(s), e);
            }
        }
        if &width < min_width {
            return (None, e);
        }
        width /= int(1 << 10);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::algebra::rational::rat;
    use crate::realroots::isolate::isolate_real_roots;

    #[test]
    fn interval_ops() {
        let a = RatInterval::new(int(-1), int(2));
        assert_eq!(a.pow(2), RatInterval::new(int(0), int(4)));
        assert_eq!(a.pow(3), RatInterval::new(int(-1), int(8)));
        assert_eq!(a.mul(&a), RatInterval::new(int(-2), int(4)));
        assert!(a.recip().is_none());
        assert_eq!(RatInterval::new(int(2), int(4)).recip().unwrap(), RatInterval::new(rat(1, 4), rat(1, 2)));
    }

    #[test]
    fn box_contains_true_value() {
        let p = parse_poly("x^2*y - 3*x + y^3").unwrap();
        let b = eval_box(&p, &[("x", RatInterval::new(rat(1, 2), int(1))), ("y", RatInterval::new(int(-1), int(0)))]);
        for (x, y) in [(rat(1, 2), int(-1)), (int(1), int(0)), (rat(3, 4), rat(-1, 2))] {
            let v = p.eval(&[("x", x), ("y", y)]);
            assert!(b.lo <= v && v <= b.hi);
        }
    }

    #[test]
    fn root_comparisons() {
        let w = Rational::new(1.into(), 1024.into());
        let r2 = isolate_real_roots(&parse_poly("x^2 - 2").unwrap(), "x", &w);
        let r2b = isolate_real_roots(&parse_poly("(x^2 - 2)*(x - 5)").unwrap(), "x", &w);
        let r3 = isolate_real_roots(&parse_poly("x^2 - 3").unwrap(), "x", &w);
        assert_eq!(cmp_roots(&r2[1], &r2b[1]), Ordering::Equal);
        assert_eq!(cmp_roots(&r2[1], &r3[1]), Ordering::Less);
        assert_eq!(cmp_roots(&r3[0], &r2[0]), Ordering::Less);
        assert_eq!(RealAlg::rational(int(1)).cmp_root(&r2[1]), Ordering::Less);
    }

    #[test]
    fn signs_at_algebraic_points() {
        let w = Rational::new(1.into(), 1024.into());
        let s2 = RealAlg::root(isolate_real_roots(&parse_poly("x^2 - 2").unwrap(), "x", &w)[1].clone());
        let tiny = Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(10), 12));
        let (s, _) = sign_at_point(&parse_poly("x^2 - 2").unwrap(), &[("x", &s2)], &tiny);
        assert_eq!(s, None);
        let (s, _) = sign_at_point(&parse_poly("x - 1414/1000").unwrap(), &[("x", &s2)], &tiny);
        assert_eq!(s, Some(1));
    }
}
