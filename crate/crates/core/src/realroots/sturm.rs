//! Sturm chains and exact real-root counting.

use serde::{Deserialize, Serialize};

use super::intpoly::IntPoly;
use crate::algebra::{MultiPoly, Rational};

/// An endpoint of a real interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bound {
    NegInf,
    PosInf,
    Finite(#[serde(with = "crate::certificate::rational_str")] Rational),
}

impl Bound {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }
}

/// A real interval with rational or infinite endpoints. Infinite ends are
/// always open.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealInterval {
    pub lo: Bound,
    pub lo_closed: bool,
    pub hi: Bound,
    pub hi_closed: bool,
}

impl RealInterval {
    pub fn open(lo: Rational, hi: Rational) -> Self {
        RealInterval { lo: Bound::Finite(lo), lo_closed: false, hi: Bound::Finite(hi), hi_closed: false }
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        RealInterval { lo: Bound::Finite(lo), lo_closed: true, hi: Bound::Finite(hi), hi_closed: true }
    }

    pub fn with_closure(lo: Bound, lo_closed: bool, hi: Bound, hi_closed: bool) -> Self {
        let lo_closed = lo_closed && matches!(lo, Bound::Finite(_));
        let hi_closed = hi_closed && matches!(hi, Bound::Finite(_));
        RealInterval { lo, lo_closed, hi, hi_closed }
    }

    pub fn whole_line() -> Self {
        RealInterval { lo: Bound::NegInf, lo_closed: false, hi: Bound::PosInf, hi_closed: false }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let above = match &self.lo {
            Bound::NegInf => true,
            Bound::PosInf => false,
            Bound::Finite(a) => x > a || (self.lo_closed && x == a),
        };
        let below = match &self.hi {
            Bound::PosInf => true,
            Bound::NegInf => false,
            Bound::Finite(b) => x < b || (self.hi_closed && x == b),
        };
        above && below
    }
}

/// Sturm chain of a univariate polynomial: `p`, `p'`, then the negated
/// remainders. Elements after `p'` are stored primitive (a positive
/// rational multiple of the classical remainder), which leaves every sign
/// and therefore every count unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    pub var: String,
    pub polys: Vec<MultiPoly>,
    ints: Vec<IntPoly>,
}

impl SturmChain {
    fn from_ints(var: &str, p: &MultiPoly, ints: Vec<IntPoly>) -> Self {
        let mut polys = vec![p.clone()];
        if ints.len() > 1 {
            polys.push(p.derivative(var));
        }
        polys.extend(ints.iter().skip(2).map(|q| q.to_multi(var)));
        SturmChain { var: var.to_string(), polys, ints }
    }

    pub fn len(&self) -> usize {
        self.ints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ints.is_empty()
    }

    pub fn int_polys(&self) -> &[IntPoly] {
        &self.ints
    }

    /// Number of sign variations at a finite point (zeros skipped).
    pub fn variations_at(&self, x: &Rational) -> usize {
        variations(self.ints.iter().map(|q| q.sign_at(x)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.ints.iter().map(|q| q.sign_at_infinity(positive)))
    }

    fn variations_at_bound(&self, b: &Bound) -> usize {
        match b {
            Bound::NegInf => self.variations_at_infinity(false),
            Bound::PosInf => self.variations_at_infinity(true),
            Bound::Finite(x) => self.variations_at(x),
        }
    }

    /// Distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Bound, b: &Bound) -> usize {
        let va = self.variations_at_bound(a);
        let vb = self.variations_at_bound(b);
        va.saturating_sub(vb)
    }

    /// Distinct real roots in `interval`, honouring its open/closed flags.
    pub fn count(&self, interval: &RealInterval) -> usize {
        if let (Bound::Finite(a), Bound::Finite(b)) = (&interval.lo, &interval.hi) {
            if a > b || (a == b && !(interval.lo_closed && interval.hi_closed)) {
                return 0;
            }
            if a == b {
                return usize::from(self.ints[0].sign_at(a) == 0);
            }
        }
        let mut n = self.count_half_open(&interval.lo, &interval.hi) as i64;
        if let Bound::Finite(a) = &interval.lo {
            if interval.lo_closed && self.ints[0].sign_at(a) == 0 {
                n += 1;
            }
        }
        if let Bound::Finite(b) = &interval.hi {
            if !interval.hi_closed && self.ints[0].sign_at(b) == 0 {
                n -= 1;
            }
        }
        n.max(0) as usize
    }

    /// Sign of the chained polynomial (its squarefree part) at `x`.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        self.ints[0].sign_at(x)
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Integer Sturm chain: `p`, `p'`, and sign-corrected primitive negated
/// pseudo-remainders.
pub fn int_sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
    let mut chain = vec![p.clone()];
    if p.degree() == 0 {
        return chain;
    }
    chain.push(p.derivative());
    loop {
        let n = chain.len();
        let r = chain[n - 2].signed_prem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().primitive());
    }
    chain
}

/// Sturm chain of a univariate polynomial.
pub fn sturm_chain(p: &MultiPoly, var: &str) -> SturmChain {
    let ip = IntPoly::from_multi(p, var);
    let ints = int_sturm_chain(&ip);
    SturmChain::from_ints(var, p, ints)
}

/// Sturm chain of the squarefree part, the one used for counting.
pub fn squarefree_chain(p: &IntPoly, var: &str) -> SturmChain {
    let sf = p.squarefree();
    let ints = int_sturm_chain(&sf);
    SturmChain::from_ints(var, &sf.to_multi(var), ints)
}

/// Exact number of distinct real roots of `p` in `interval`.
pub fn count_real_roots(p: &MultiPoly, var: &str, interval: &RealInterval) -> usize {
    let ip = IntPoly::from_multi(p, var);
    if ip.is_zero() {
        panic!("count_real_roots: zero polynomial");
    }
    if ip.degree() == 0 {
        return 0;
    }
    squarefree_chain(&ip, var).count(interval)
}

/// Distinct real-root count via a square-free chain prepared once.
pub fn count_with(chain: &SturmChain, interval: &RealInterval) -> usize {
    if chain.ints[0].degree() == 0 {
        return 0;
    }
    chain.count(interval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;
    use crate::algebra::rational::int;

    #[test]
    fn chain_of_difference_of_squares() {
        let c = sturm_chain(&parse_poly("z^2 - 1").unwrap(), "z");
        assert_eq!(c.polys, vec![parse_poly("z^2-1").unwrap(), parse_poly("2*z").unwrap(), parse_poly("1").unwrap()]);
        let k = sturm_chain(&parse_poly("5").unwrap(), "z");
        assert_eq!(k.polys.len(), 1);
    }

    #[test]
    fn simple_counts() {
        let p = parse_poly("z^2 - 1").unwrap();
        assert_eq!(count_real_roots(&p, "z", &RealInterval::open(int(0), int(2))), 1);
        assert_eq!(count_real_roots(&p, "z", &RealInterval::whole_line()), 2);
        assert_eq!(count_real_roots(&p, "z", &RealInterval::open(int(-1), int(1))), 0);
        assert_eq!(count_real_roots(&p, "z", &RealInterval::closed(int(-1), int(1))), 2);
        let cubic = parse_poly("s^3 + 2*s^2 - 4*s - 4").unwrap();
        assert_eq!(count_real_roots(&cubic, "s", &RealInterval::whole_line()), 3);
        // repeated roots counted once
        let rep = parse_poly("(z-1)^3*(z+2)").unwrap();
        assert_eq!(count_real_roots(&rep, "z", &RealInterval::whole_line()), 2);
    }
}
