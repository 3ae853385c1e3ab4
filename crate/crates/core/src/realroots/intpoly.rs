//! Dense univariate polynomials with integer coefficients, the working
//! representation for Sturm chains and sign evaluation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{MultiPoly, Rational};

/// Coefficients in ascending order; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    pub coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Positive rational multiple of a univariate rational polynomial with
    /// integer coefficients (denominators cleared, sign kept).
    pub fn from_rational(c: &[Rational]) -> Self {
        let mut l = BigInt::one();
        for x in c {
            l = l.lcm(x.denom());
        }
        IntPoly::new(c.iter().map(|x| x.numer() * (&l / x.denom())).collect())
    }

    /// `p` must be univariate in `var` (or constant).
    pub fn from_multi(p: &MultiPoly, var: &str) -> Self {
        IntPoly::from_rational(&p.univariate_coeffs(var))
    }

    pub fn to_multi(&self, var: &str) -> MultiPoly {
        let c: Vec<Rational> = self.coeffs.iter().map(|x| Rational::from_integer(x.clone())).collect();
        MultiPoly::univariate(var, &c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the (positive) content; signs are preserved.
    pub fn primitive(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::new(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Pseudo-remainder scaled by `|lc(b)|^(deg a - deg b + 1)`, so the
    /// result is a positive multiple of the true remainder.
    pub fn signed_prem(&self, b: &IntPoly) -> IntPoly {
        assert!(!b.is_zero());
        let mut r = self.coeffs.clone();
        let db = b.degree();
        if self.is_zero() || self.degree() < db {
            return self.clone();
        }
        let lb = b.lc().clone();
        let lb_abs = lb.abs();
        let steps = self.degree() - db + 1;
        let mut done = 0;
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1;
            let lr = r[k].clone();
            // r <- |lb| * r - sign(lb) * lr * x^(k-db) * b
            for c in r.iter_mut() {
                *c *= &lb_abs;
            }
            let f = if lb.is_negative() { -&lr } else { lr };
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k - db + j] -= &f * bc;
            }
            debug_assert!(r[k].is_zero());
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            done += 1;
        }
        // complete the scaling so the multiplier is |lb|^steps exactly
        let mut out = IntPoly::new(r);
        if done < steps {
            let f = num_traits::pow(lb_abs, steps - done);
            out = IntPoly { coeffs: out.coeffs.iter().map(|c| c * &f).collect() };
        }
        out
    }

    /// Exact division; panics if `b` does not divide `self` over Q with an
    /// integral quotient after making both primitive.
    pub fn exact_div(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree();
        if self.is_zero() {
            return self.clone();
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.degree() - db + 1];
        let lb = b.lc();
        // work over Q through scaling, then make primitive
        let mut scale = BigInt::one();
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1;
            let (qq, rem) = r[k].div_rem(lb);
            if !rem.is_zero() {
                for c in r.iter_mut() {
                    *c *= lb;
                }
                for c in q.iter_mut() {
                    *c *= lb;
                }
                scale *= lb;
                continue;
            }
            q[k - db] = qq.clone();
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k - db + j] -= &qq * bc;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        assert!(r.is_empty(), "exact_div: nonzero remainder");
        let _ = scale;
        IntPoly::new(q).primitive()
    }

    /// gcd over Q, primitive with positive leading coefficient.
    pub fn gcd(&self, o: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_prem(&b).primitive();
            a = b;
            b = r;
        }
        if !a.is_zero() && a.lc().is_negative() {
            a = a.neg();
        }
        a
    }

    /// Squarefree part, primitive with the sign of the input's leading
    /// coefficient.
    pub fn squarefree(&self) -> IntPoly {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let q = if g.degree() == 0 { self.primitive() } else { self.exact_div(&g) };
        if q.lc().is_negative() != self.lc().is_negative() {
            q.neg()
        } else {
            q
        }
    }

    /// `Σ c_i n^i d^(deg-i)`, which has the sign of `p(n/d)` for `d > 0`.
    pub fn eval_homogeneous(&self, n: &BigInt, d: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut dp = BigInt::one();
        // Horner from the top: acc = acc*n + c_i * d^(deg-i)
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dp;
            dp *= d;
        }
        // the loop above multiplied the leading term by d^0 and the constant
        // by d^deg, which is the homogenisation we want
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let v = self.eval_homogeneous(x.numer(), x.denom());
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sign as `x → +∞` (`at_pos = true`) or `x → −∞`.
    pub fn sign_at_infinity(&self, at_pos: bool) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let s = if self.lc().is_positive() { 1 } else { -1 };
        if at_pos || self.degree().is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    /// Cauchy bound: every real root has absolute value below the result.
    pub fn root_bound(&self) -> Rational {
        let lc = Rational::from_integer(self.lc().abs());
        let m = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .map(|c| Rational::from_integer(c.abs()))
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + m / lc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn homogeneous_sign() {
        let p = IntPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(p.sign_at(&rat(1, 2)), -1);
        assert_eq!(p.sign_at(&int(1)), 0);
        assert_eq!(p.sign_at(&rat(-3, 2)), 1);
        assert_eq!(p.eval(&rat(3, 2)), rat(5, 4));
        assert_eq!(p.sign_at_infinity(false), 1);
        assert_eq!(IntPoly::from_i64(&[0, 1]).sign_at_infinity(false), -1);
    }

    #[test]
    fn squarefree_and_gcd() {
        // (x-1)^2 (x+2)
        let p = IntPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree(), IntPoly::from_i64(&[-2, 1, 1]));
        let q = IntPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(p.gcd(&q), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(p.exact_div(&IntPoly::from_i64(&[-1, 1])), IntPoly::from_i64(&[-2, 1, 1]));
    }

    #[test]
    fn prem_is_positive_multiple() {
        let a = IntPoly::from_i64(&[1, 2, 3, 4]);
        let b = IntPoly::from_i64(&[1, 0, -2]);
        // a mod b over Q: 4x^3+3x^2+2x+1 = (-2x^2+1)(-2x - 3/2) + 4x + 5/2
        let r = a.signed_prem(&b);
        assert_eq!(r.primitive(), IntPoly::from_i64(&[5, 8]));
        assert!(r.lc().is_positive());
    }
}
