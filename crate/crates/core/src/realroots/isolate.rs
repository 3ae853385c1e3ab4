//! Real-root isolation and exact real algebraic numbers carried as
//! (defining polynomial, isolating interval).

use std::cmp::Ordering;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use super::sturm::{squarefree_chain, Bound, RealInterval, SturmChain};
use crate::algebra::rational::{int, to_f64};
use crate::algebra::{MultiPoly, Rational};

/// Exactly one real root of `poly` lies in the open interval `(lo, hi)`,
/// and neither endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "crate::certificate::rational_str")]
    pub lo: Rational,
    #[serde(with = "crate::certificate::rational_str")]
    pub hi: Rational,
    #[serde(with = "crate::certificate::poly_str")]
    pub poly: MultiPoly,
    pub var: String,
}

impl IsolatingInterval {
    fn int_poly(&self) -> IntPoly {
        IntPoly::from_multi(&self.poly, &self.var).squarefree()
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn approx(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    pub fn as_interval(&self) -> RealInterval {
        RealInterval::open(self.lo.clone(), self.hi.clone())
    }

    /// Re-checks the invariant with a fresh Sturm chain.
    pub fn verify(&self) -> bool {
        let p = self.int_poly();
        if p.degree() == 0 || self.lo >= self.hi {
            return false;
        }
        self.verify_with(&squarefree_chain(&p, &self.var))
    }

    /// `verify` against a prepared square-free chain of `poly`.
    pub fn verify_with(&self, chain: &SturmChain) -> bool {
        let Some(sf) = chain.int_polys().first() else { return false };
        sf.degree() > 0
            && self.lo < self.hi
            && sf.sign_at(&self.lo) != 0
            && sf.sign_at(&self.hi) != 0
            && chain.count(&self.as_interval()) == 1
    }

    /// Halves the interval `steps` times, keeping the root inside.
    pub fn bisect(&self, steps: usize) -> IsolatingInterval {
        let p = self.int_poly();
        let mut out = self.clone();
        for _ in 0..steps {
            out = refine_once(&p, &out);
        }
        out
    }

    /// Refines until the width is at most `width`.
    pub fn refine_to(&self, width: &Rational) -> IsolatingInterval {
        let p = self.int_poly();
        let mut out = self.clone();
        while &out.width() > width {
            out = refine_once(&p, &out);
        }
        out
    }

    /// Exact comparison of the root with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        let p = self.int_poly();
        if p.sign_at(r) == 0 && &self.lo < r && r < &self.hi {
            return Ordering::Equal;
        }
        let mut cur = self.clone();
        loop {
            if r <= &cur.lo {
                return Ordering::Greater;
            }
            if r >= &cur.hi {
                return Ordering::Less;
            }
            cur = refine_once(&p, &cur);
        }
    }
}

/// One bisection step. If the midpoint happens to be the root, the result
/// is a quarter-width interval centred on it.
fn refine_once(p: &IntPoly, iv: &IsolatingInterval) -> IsolatingInterval {
    let mid = iv.midpoint();
    let sm = p.sign_at(&mid);
    let sl = p.sign_at(&iv.lo);
    let mut out = iv.clone();
    if sm == 0 {
        let q = iv.width() / int(8);
        out.lo = &mid - &q;
        out.hi = &mid + &q;
    } else if sm == sl {
        out.lo = mid;
    } else {
        out.hi = mid;
    }
    out
}

/// A point of `(lo, hi)` that is not a root of `p`, close to the middle.
fn split_point(p: &IntPoly, lo: &Rational, hi: &Rational) -> Rational {
    let w = hi - lo;
    let mid = (lo + hi) / int(2);
    if p.sign_at(&mid) != 0 {
        return mid;
    }
    let mut k = 3u32;
    loop {
        let off = &w / Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(2), k as usize));
        for c in [&mid + &off, &mid - &off] {
            if p.sign_at(&c) != 0 {
                return c;
            }
        }
        k += 1;
    }
}

/// One isolating interval per distinct real root, each of width at most
/// `width`, sorted increasingly.
pub fn isolate_real_roots(p: &MultiPoly, var: &str, width: &Rational) -> Vec<IsolatingInterval> {
    let ip = IntPoly::from_multi(p, var);
    assert!(!ip.is_zero(), "isolate_real_roots: zero polynomial");
    if ip.degree() == 0 {
        return Vec::new();
    }
    let m = ip.root_bound();
    isolate_in(&ip, p, var, &(-m.clone()), &m, width)
}

/// Isolates the roots inside the open interval `(lo, hi)`; endpoints must
/// not be roots.
pub fn isolate_in(ip: &IntPoly, p: &MultiPoly, var: &str, lo: &Rational, hi: &Rational, width: &Rational) -> Vec<IsolatingInterval> {
    isolate_open(&squarefree_chain(ip, var), p, var, lo, hi, width)
}

fn isolate_open(chain: &SturmChain, p: &MultiPoly, var: &str, lo: &Rational, hi: &Rational, width: &Rational) -> Vec<IsolatingInterval> {
    let sf = &chain.int_polys()[0];
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = chain.count(&RealInterval::open(a.clone(), b.clone()));
        if n == 0 {
            continue;
        }
        if n == 1 {
            let iv = IsolatingInterval { lo: a, hi: b, poly: p.clone(), var: var.to_string() };
            out.push(shrink(sf, iv, width));
            continue;
        }
        let m = split_point(sf, &a, &b);
        // push right first so the left half is processed first
        stack.push((m.clone(), b));
        stack.push((a, m));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

fn shrink(sf: &IntPoly, mut iv: IsolatingInterval, width: &Rational) -> IsolatingInterval {
    while &iv.width() > width {
        iv = refine_once(sf, &iv);
    }
    iv
}

/// Roots of `p` in an arbitrary interval (finite or not), isolated.
pub fn isolate_in_interval(p: &MultiPoly, var: &str, interval: &RealInterval, width: &Rational) -> Vec<IsolatingInterval> {
    let ip = IntPoly::from_multi(p, var);
    if ip.degree() == 0 {
        return Vec::new();
    }
    isolate_in_interval_with(&squarefree_chain(&ip, var), p, var, interval, width)
}

/// `isolate_in_interval` with a prepared square-free chain of `p`.
pub fn isolate_in_interval_with(chain: &SturmChain, p: &MultiPoly, var: &str, interval: &RealInterval, width: &Rational) -> Vec<IsolatingInterval> {
    let sf = &chain.int_polys()[0];
    if sf.degree() == 0 {
        return Vec::new();
    }
    let m = sf.root_bound();
    let lo = match &interval.lo {
        Bound::Finite(r) => r.clone(),
        _ => -m.clone(),
    };
    let hi = match &interval.hi {
        Bound::Finite(r) => r.clone(),
        _ => m.clone(),
    };
    let mut out = Vec::new();
    // exact rational roots at the endpoints
    let eps = width.clone().min(Rational::one()) / int(4);
    let mut a = lo.clone();
    let mut b = hi.clone();
    if sf.sign_at(&lo) == 0 {
        if interval.lo_closed {
            out.push(tight_around(chain, p, var, &lo, &eps));
        }
        a = nudged(chain, &lo, &(&lo + &eps.clone().min((&hi - &lo) / int(4))));
    }
    if sf.sign_at(&hi) == 0 {
        if interval.hi_closed {
            out.push(tight_around(chain, p, var, &hi, &eps));
        }
        b = nudged(chain, &hi, &(&hi - &eps.clone().min((&hi - &lo) / int(4))));
    }
    // roots in (lo, a] and [b, hi) are excluded by construction of a, b
    if a < b {
        out.extend(isolate_open(chain, p, var, &a, &b, width));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Moves `cand` towards `root` until no other root lies between them.
fn nudged(chain: &SturmChain, root: &Rational, cand: &Rational) -> Rational {
    let sf = &chain.int_polys()[0];
    let mut c = cand.clone();
    loop {
        let (lo, hi) = if &c < root { (c.clone(), root.clone()) } else { (root.clone(), c.clone()) };
        let n = chain.count(&RealInterval::closed(lo, hi));
        if sf.sign_at(&c) != 0 && n == 1 {
            return c;
        }
        c = (&c + root) / int(2);
    }
}

fn tight_around(chain: &SturmChain, p: &MultiPoly, var: &str, r: &Rational, eps: &Rational) -> IsolatingInterval {
    let lo = nudged(chain, r, &(r - eps));
    let hi = nudged(chain, r, &(r + eps));
    IsolatingInterval { lo, hi, poly: p.clone(), var: var.to_string() }
}

/// Counting helper used by callers that hold a chain for the square-free
/// part of `p`.
pub fn chain_for(p: &MultiPoly, var: &str) -> SturmChain {
    squarefree_chain(&IntPoly::from_multi(p, var), var)
}

/// `true` if the rational is strictly inside the open isolating interval.
pub fn strictly_inside(iv: &IsolatingInterval, r: &Rational) -> bool {
    &iv.lo < r && r < &iv.hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::algebra::rational::ten_pow_neg;

    #[test]
    fn sqrt_two() {
        let p = parse_poly("x^2 - 2").unwrap();
        let r = isolate_real_roots(&p, "x", &ten_pow_neg(4));
        assert_eq!(r.len(), 2);
        assert!((r[0].approx() + std::f64::consts::SQRT_2).abs() < 1e-4);
        assert!((r[1].approx() - std::f64::consts::SQRT_2).abs() < 1e-4);
        assert!(r.iter().all(|i| i.verify() && i.width() <= ten_pow_neg(4)));
    }

    #[test]
    fn rational_roots_are_isolated() {
        let p = parse_poly("(x-1)*(x-1/2)*(x+3)").unwrap();
        let r = isolate_real_roots(&p, "x", &ten_pow_neg(3));
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|i| i.verify()));
        assert_eq!(r[1].cmp_rational(&Rational::new(1.into(), 2.into())), Ordering::Equal);
        assert_eq!(r[2].cmp_rational(&int(2)), Ordering::Less);
    }

    #[test]
    fn interval_with_root_endpoints() {
        let p = parse_poly("(x-1)*(x-2)*(x-3)").unwrap();
        let closed = isolate_in_interval(&p, "x", &RealInterval::closed(int(1), int(3)), &ten_pow_neg(2));
        assert_eq!(closed.len(), 3);
        let open = isolate_in_interval(&p, "x", &RealInterval::open(int(1), int(3)), &ten_pow_neg(2));
        assert_eq!(open.len(), 1);
        assert!(open[0].verify());
    }
}
