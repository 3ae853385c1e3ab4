//! Laurent polynomials: signed exponents, cleared back to ordinary
//! polynomials by multiplying with the smallest monomial that makes every
//! exponent nonnegative.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{make_vars, var_rank, MultiPoly, Vars};
use super::rational::Rational;

#[derive(Clone)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::from_poly(&MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(&MultiPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(&MultiPoly::constant(c))
    }

    pub fn from_poly(p: &MultiPoly) -> Self {
        let terms = p
            .terms()
            .map(|(e, c)| (e.iter().map(|&k| k as i64).collect(), c.clone()))
            .collect();
        LaurentPoly { vars: p.vars().clone(), terms }
    }

    /// `c * name^k` with `k` of either sign.
    pub fn monomial(c: Rational, name: &str, k: i64) -> Self {
        let vars = make_vars(&[name]);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![k], c);
        }
        LaurentPoly { vars, terms }
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(Rational::one(), name, 1)
    }

    pub fn inv_var(name: &str) -> Self {
        Self::monomial(Rational::one(), name, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    fn embed(&self, target: &Vars) -> LaurentPoly {
        if self.vars[..] == target[..] {
            return self.clone();
        }
        let map: Vec<usize> =
            self.vars.iter().map(|v| target.iter().position(|t| t == v).expect("target context")).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0i64; target.len()];
                for (i, &k) in e.iter().enumerate() {
                    ne[map[i]] = k;
                }
                (ne, c.clone())
            })
            .collect();
        LaurentPoly { vars: target.clone(), terms }
    }

    fn unify(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        if a.vars[..] == b.vars[..] {
            return (a.clone(), b.clone());
        }
        let mut all: Vec<String> = a.vars.iter().chain(b.vars.iter()).cloned().collect();
        all.sort_by_key(|s| var_rank(s));
        all.dedup();
        let u: Vars = all.into();
        (a.embed(&u), b.embed(&u))
    }

    /// Per-variable clearing exponents and the cleared polynomial:
    /// `self = result * prod var_i^(-shift_i)`, with each `shift_i` the
    /// smallest nonnegative value making all exponents nonnegative.
    pub fn clear(&self) -> (MultiPoly, Vec<(String, u32)>) {
        let n = self.vars.len();
        let mut shifts = vec![0i64; n];
        for e in self.terms.keys() {
            for i in 0..n {
                shifts[i] = shifts[i].max(-e[i]);
            }
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let ne: Vec<u32> = e.iter().zip(&shifts).map(|(&k, &s)| (k + s) as u32).collect();
            (ne, c.clone())
        });
        let p = MultiPoly::from_terms(self.vars.clone(), terms);
        let shifts = self.vars.iter().cloned().zip(shifts.into_iter().map(|s| s as u32)).collect();
        (p, shifts)
    }

    /// Cleared polynomial, discarding the shift record.
    pub fn cleared(&self) -> MultiPoly {
        self.clear().0
    }

    /// Returns the polynomial if no exponent is negative.
    pub fn to_poly(&self) -> Option<MultiPoly> {
        if self.terms.keys().any(|e| e.iter().any(|&k| k < 0)) {
            return None;
        }
        Some(self.cleared())
    }

    /// `p(1/name)`
    pub fn invert_var(&self, name: &str) -> LaurentPoly {
        let Some(i) = self.vars.iter().position(|v| v == name) else {
            return self.clone();
        };
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[i] = -ne[i];
                (ne, c.clone())
            })
            .collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// `name -> name^k` for an integer `k` (used for `m = z^(-n)`).
    pub fn power_substitute(&self, name: &str, target: &str, k: i64) -> LaurentPoly {
        let Some(i) = self.vars.iter().position(|v| v == name) else {
            return self.clone();
        };
        let mut acc = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let p = rest[i];
            rest[i] = 0;
            let base = LaurentPoly { vars: self.vars.clone(), terms: BTreeMap::from([(rest, c.clone())]) };
            let m = LaurentPoly::monomial(Rational::one(), target, p * k);
            acc = &acc + &(&base * &m);
        }
        acc.drop_unused()
    }

    fn drop_unused(&self) -> LaurentPoly {
        let keep: Vec<usize> =
            (0..self.vars.len()).filter(|&i| self.terms.keys().any(|e| e[i] != 0)).collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Vars = keep.iter().map(|&i| self.vars[i].clone()).collect::<Vec<_>>().into();
        let terms = self.terms.iter().map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone())).collect();
        LaurentPoly { vars, terms }
    }

    pub fn eval_complex(&self, values: &[(&str, num_complex::Complex64)]) -> num_complex::Complex64 {
        use num_complex::Complex64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = Complex64::new(super::rational::to_f64(c), 0.0);
            for (i, &k) in e.iter().enumerate() {
                if k != 0 {
                    let z = values
                        .iter()
                        .find(|(n, _)| *n == self.vars[i])
                        .map(|(_, z)| *z)
                        .unwrap_or_else(|| panic!("no value for {}", self.vars[i]));
                    t *= z.powi(k as i32);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval(&self, values: &[(&str, Rational)]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k != 0 {
                    let v = values
                        .iter()
                        .find(|(n, _)| *n == self.vars[i])
                        .map(|(_, v)| v.clone())
                        .unwrap_or_else(|| panic!("no value for {}", self.vars[i]));
                    t *= v.pow(k as i32);
                }
            }
            acc += t;
        }
        acc
    }
}

/// One-variable clearing: `p = name^(-shift) * result`. The zero
/// expression maps to `(0, 0)`.
pub fn laurent_normalize(p: &LaurentPoly, name: &str) -> (MultiPoly, u32) {
    if p.is_zero() {
        return (MultiPoly::zero(), 0);
    }
    let (q, shifts) = p.clear();
    let shift = shifts.iter().find(|(n, _)| n == name).map(|(_, s)| *s).unwrap_or(0);
    for (n, s) in &shifts {
        assert!(n == name || *s == 0, "laurent_normalize: {n} also has negative exponents");
    }
    (q, shift)
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = LaurentPoly::unify(self, other);
        a.terms == b.terms
    }
}

impl Eq for LaurentPoly {}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, shifts) = self.clear();
        let den: Vec<String> =
            shifts.iter().filter(|(_, s)| *s > 0).map(|(n, s)| format!("{n}^{s}")).collect();
        if den.is_empty() {
            write!(f, "{p}")
        } else {
            write!(f, "({p})/({})", den.join("*"))
        }
    }
}

fn add_into(acc: &mut BTreeMap<Vec<i64>, Rational>, e: &[i64], c: Rational) {
    let slot = acc.entry(e.to_vec()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        acc.remove(e);
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut a, b) = LaurentPoly::unify(self, rhs);
        for (e, c) in b.terms {
            add_into(&mut a.terms, &e, c);
        }
        a
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut a, b) = LaurentPoly::unify(self, rhs);
        for (e, c) in b.terms {
            add_into(&mut a.terms, &e, -c);
        }
        a
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (a, b) = LaurentPoly::unify(self, rhs);
        let mut acc = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_into(&mut acc, &e, ca * cb);
            }
        }
        LaurentPoly { vars: a.vars, terms: acc }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    #[test]
    fn clears_negative_powers() {
        let p = &LaurentPoly::var("z") + &LaurentPoly::inv_var("z");
        let (q, k) = laurent_normalize(&p, "z");
        assert_eq!(q, parse_poly("z^2+1").unwrap());
        assert_eq!(k, 1);
    }

    #[test]
    fn leaves_positive_powers_alone() {
        let p = LaurentPoly::from_poly(&parse_poly("z^5").unwrap());
        let (q, k) = laurent_normalize(&p, "z");
        assert_eq!(q, parse_poly("z^5").unwrap());
        assert_eq!(k, 0);
    }

    #[test]
    fn zero_is_zero() {
        assert_eq!(laurent_normalize(&LaurentPoly::zero(), "z"), (MultiPoly::zero(), 0));
    }

    #[test]
    fn power_substitution() {
        // m^2 * z with m -> z^-3 is z^-5
        let p = LaurentPoly::from_poly(&parse_poly("m^2*z").unwrap());
        let q = p.power_substitute("m", "z", -3);
        let (c, k) = laurent_normalize(&q, "z");
        assert_eq!((c, k), (MultiPoly::one(), 5));
    }
}
