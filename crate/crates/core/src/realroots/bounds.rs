//! Certified two-sided bounds of a univariate polynomial on a closed
//! rational interval: centred-form interval evaluation with adaptive
//! bisection.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::int;
use crate::algebra::{MultiPoly, Rational};

/// `lo ≤ p(x) ≤ hi` for every `x` in `[a, b]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enclosure {
    #[serde(with = "crate::certificate::rational_str")]
    pub lo: Rational,
    #[serde(with = "crate::certificate::rational_str")]
    pub hi: Rational,
    /// Number of subintervals in the final cover.
    pub pieces: usize,
}

pub const DEFAULT_MAX_PIECES: usize = 4096;

/// Taylor coefficients of `p` at `m`: `p(m + h) = Σ q_k h^k`.
fn taylor_shift(c: &[Rational], m: &Rational) -> Vec<Rational> {
    let mut q = c.to_vec();
    let n = q.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &q[j + 1] * m;
            q[j] += t;
        }
    }
    q
}

/// Enclosure of `p` on `[a, b]` by the centred form.
fn centred(c: &[Rational], a: &Rational, b: &Rational) -> (Rational, Rational) {
    let m = (a + b) / int(2);
    let r = (b - a) / int(2);
    let q = taylor_shift(c, &m);
    let mut spread = Rational::zero();
    let mut rk = r.clone();
    for qk in q.iter().skip(1) {
        spread += qk.abs() * &rk;
        rk *= &r;
    }
    let q0 = q.first().cloned().unwrap_or_else(Rational::zero);
    (&q0 - &spread, &q0 + &spread)
}

fn eval(c: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for k in c.iter().rev() {
        acc = acc * x + k;
    }
    acc
}

struct Piece {
    a: Rational,
    b: Rational,
    lo: Rational,
    hi: Rational,
}

/// Certified enclosure of `p` on `[a, b]`. Bisection continues until both
/// sides are within `tol` of values actually attained at sample points, or
/// the cover reaches `max_pieces` (the result is sound either way).
pub fn bound_on_interval(p: &MultiPoly, var: &str, a: &Rational, b: &Rational, tol: &Rational) -> Enclosure {
    bound_on_interval_with(p, var, a, b, tol, DEFAULT_MAX_PIECES)
}

pub fn bound_on_interval_with(p: &MultiPoly, var: &str, a: &Rational, b: &Rational, tol: &Rational, max_pieces: usize) -> Enclosure {
    assert!(a <= b, "bound_on_interval: empty interval");
    let c = p.univariate_coeffs(var);
    if c.is_empty() {
        return Enclosure { lo: Rational::zero(), hi: Rational::zero(), pieces: 1 };
    }
    let (lo, hi) = centred(&c, a, b);
    let mut pieces = vec![Piece { a: a.clone(), b: b.clone(), lo, hi }];
    let mut best_max = eval(&c, a).max(eval(&c, b));
    let mut best_min = eval(&c, a).min(eval(&c, b));
    loop {
        let (imax, top) = pieces.iter().enumerate().max_by(|x, y| x.1.hi.cmp(&y.1.hi)).map(|(i, p)| (i, p.hi.clone())).unwrap();
        let (imin, bottom) = pieces.iter().enumerate().min_by(|x, y| x.1.lo.cmp(&y.1.lo)).map(|(i, p)| (i, p.lo.clone())).unwrap();
        let gap_hi = &top - &best_max;
        let gap_lo = &best_min - &bottom;
        if (&gap_hi <= tol && &gap_lo <= tol) || pieces.len() >= max_pieces {
            return Enclosure { lo: bottom, hi: top, pieces: pieces.len() };
        }
        let i = if gap_hi >= gap_lo { imax } else { imin };
        let pc = pieces.swap_remove(i);
        let m = (&pc.a + &pc.b) / int(2);
        let vm = eval(&c, &m);
        if vm > best_max {
            best_max = vm.clone();
        }
        if vm < best_min {
            best_min = vm;
        }
        for (x, y) in [(pc.a.clone(), m.clone()), (m, pc.b)] {
            let (lo, hi) = centred(&c, &x, &y);
            pieces.push(Piece { a: x, b: y, lo, hi });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::algebra::rational::{rat, ten_pow_neg};

    #[test]
    fn square_on_interval() {
        let p = parse_poly("z^2").unwrap();
        let tol = ten_pow_neg(3);
        let e = bound_on_interval(&p, "z", &int(-1), &int(2), &tol);
        assert!(e.lo <= int(0) && e.hi >= int(4));
        assert!(&e.hi - int(4) <= tol && int(0) - &e.lo <= tol);
    }

    #[test]
    fn taylor_shift_matches() {
        let c = vec![int(1), int(2), int(3)];
        // 1 + 2(m+h) + 3(m+h)^2 at m = 1: 6 + 8h + 3h^2
        assert_eq!(taylor_shift(&c, &int(1)), vec![int(6), int(8), int(3)]);
        let (lo, hi) = centred(&c, &rat(0, 1), &rat(2, 1));
        assert!(lo <= int(1) && hi >= int(17));
    }
}
