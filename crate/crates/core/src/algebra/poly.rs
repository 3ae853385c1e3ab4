//! Sparse multivariate polynomials over the rationals.
//!
//! A polynomial carries its own ordered variable context. Exponent vectors are
//! dense over that context. Binary operations on polynomials with different
//! contexts first embed both into the union context, whose order is fixed by
//! [`var_rank`], so results never depend on argument order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};

pub type Exponents = Vec<u32>;

/// Preferred variable order: the character-variety coordinates first.
const PREFERRED: &[&str] = &["z", "x", "y", "m", "s", "t", "w"];

pub fn var_rank(name: &str) -> (usize, String) {
    match PREFERRED.iter().position(|p| *p == name) {
        Some(i) => (i, String::new()),
        None => (PREFERRED.len(), name.to_string()),
    }
}

pub type Vars = Arc<[String]>;

pub fn make_vars<S: AsRef<str>>(names: &[S]) -> Vars {
    let mut v: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    v.sort_by_key(|a| var_rank(a));
    v.dedup();
    v.into()
}

fn union_vars(a: &Vars, b: &Vars) -> Vars {
    if Arc::ptr_eq(a, b) || a[..] == b[..] {
        return a.clone();
    }
    let mut all: Vec<&String> = a.iter().chain(b.iter()).collect();
    all.sort_by_key(|s| var_rank(s));
    all.dedup();
    all.into_iter().cloned().collect::<Vec<_>>().into()
}

#[derive(Clone)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Arc::from(Vec::<String>::new()), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: Arc::from(Vec::<String>::new()), terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(super::rational::int(n))
    }

    pub fn var(name: &str) -> Self {
        let vars: Vars = Arc::from(vec![name.to_string()]);
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MultiPoly { vars, terms }
    }

    /// `c * name^k`
    pub fn monomial(c: Rational, name: &str, k: u32) -> Self {
        if k == 0 {
            return Self::constant(c);
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![k], c);
        }
        MultiPoly { vars: Arc::from(vec![name.to_string()]), terms }
    }

    /// Builds from raw terms; zero coefficients are dropped and repeated
    /// exponents summed.
    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut map: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length must match context");
            if c.is_zero() {
                continue;
            }
            let slot = map.entry(e).or_insert_with(Rational::zero);
            *slot += c;
        }
        map.retain(|_, c| !c.is_zero());
        MultiPoly { vars, terms: map }
    }

    /// Univariate polynomial from ascending coefficients.
    pub fn univariate(name: &str, coeffs: &[Rational]) -> Self {
        let vars: Vars = Arc::from(vec![name.to_string()]);
        let terms = coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone()));
        Self::from_terms(vars, terms)
    }

    pub fn univariate_i64(name: &str, coeffs: &[i64]) -> Self {
        let c: Vec<Rational> = coeffs.iter().map(|&x| super::rational::int(x)).collect();
        Self::univariate(name, &c)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    pub fn constant_term(&self) -> Rational {
        let zero = vec![0; self.vars.len()];
        self.terms.get(&zero).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Variables that actually occur with a positive exponent.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn contains_var(&self, name: &str) -> bool {
        match self.var_index(name) {
            Some(i) => self.terms.keys().any(|e| e[i] > 0),
            None => false,
        }
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable in use.
    pub fn embed(&self, target: &Vars) -> MultiPoly {
        if self.vars[..] == target[..] {
            return MultiPoly { vars: target.clone(), terms: self.terms.clone() };
        }
        let map: Vec<Option<usize>> =
            self.vars.iter().map(|v| target.iter().position(|t| t == v)).collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].unwrap_or_else(|| panic!("variable {} missing from target context", self.vars[i]));
                ne[j] = k;
            }
            terms.insert(ne, c.clone());
        }
        MultiPoly { vars: target.clone(), terms }
    }

    /// Drops variables that do not occur.
    pub fn compact(&self) -> MultiPoly {
        let used = self.used_vars();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let target: Vars = used.into();
        let idx: Vec<usize> = target.iter().map(|v| self.var_index(v).unwrap()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (idx.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect();
        MultiPoly { vars: target, terms }
    }

    pub fn unify(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let u = union_vars(&a.vars, &b.vars);
        (a.embed(&u), b.embed(&u))
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one().embed(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, name: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|e| e[i]).max(),
            None => Some(0),
        }
    }

    /// Lowest exponent of `name` across terms.
    pub fn low_degree_in(&self, name: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|e| e[i]).min(),
            None => Some(0),
        }
    }

    /// Coefficient of `name^k`, as a polynomial in the remaining variables
    /// (same context, with `name` at exponent zero).
    pub fn coeff_in(&self, name: &str, k: u32) -> MultiPoly {
        let Some(i) = self.var_index(name) else {
            return if k == 0 { self.clone() } else { MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() } };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[i] == k)
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[i] = 0;
                (ne, c.clone())
            })
            .collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn derivative(&self, name: &str) -> MultiPoly {
        let Some(i) = self.var_index(name) else {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        };
        let terms = self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut ne = e.clone();
            let k = ne[i];
            ne[i] -= 1;
            (ne, c * Rational::from_integer(k.into()))
        });
        MultiPoly::from_terms(self.vars.clone(), terms)
    }

    /// Multiplies by `name^k`.
    pub fn shift_up(&self, name: &str, k: u32) -> MultiPoly {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let p = if self.var_index(name).is_none() {
            let (p, _) = MultiPoly::unify(self, &MultiPoly::var(name));
            p
        } else {
            self.clone()
        };
        let i = p.var_index(name).unwrap();
        let terms = p
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                ne[i] += k;
                (ne, c.clone())
            })
            .collect();
        MultiPoly { vars: p.vars.clone(), terms }
    }

    /// Divides by `name^k`; panics unless every term is divisible.
    pub fn shift_down(&self, name: &str, k: u32) -> MultiPoly {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let i = self.var_index(name).expect("variable present");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                assert!(ne[i] >= k, "term not divisible by {name}^{k}");
                ne[i] -= k;
                (ne, c.clone())
            })
            .collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// Substitutes rational values for some variables. Unassigned variables
    /// stay symbolic.
    pub fn eval_partial(&self, values: &[(&str, Rational)]) -> MultiPoly {
        let idx: Vec<(usize, &Rational)> =
            values.iter().filter_map(|(n, v)| self.var_index(n).map(|i| (i, v))).collect();
        let mut pow_cache: Vec<Vec<Rational>> = vec![vec![Rational::one()]; idx.len()];
        let terms: Vec<(Exponents, Rational)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = e.clone();
                let mut k = c.clone();
                for (slot, &(i, v)) in idx.iter().enumerate() {
                    let p = e[i] as usize;
                    let cache = &mut pow_cache[slot];
                    while cache.len() <= p {
                        let next = cache.last().unwrap() * v;
                        cache.push(next);
                    }
                    k *= &cache[p];
                    ne[i] = 0;
                }
                (ne, k)
            })
            .collect();
        MultiPoly::from_terms(self.vars.clone(), terms).compact()
    }

    /// Full evaluation; variables not listed evaluate as zero.
    pub fn eval(&self, values: &[(&str, Rational)]) -> Rational {
        let p = self.eval_partial(values);
        assert!(p.is_constant(), "eval: unassigned variables {:?}", p.used_vars());
        p.constant_term()
    }

    /// Numeric evaluation at complex points.
    pub fn eval_complex(&self, values: &[(&str, num_complex::Complex64)]) -> num_complex::Complex64 {
        use num_complex::Complex64;
        let idx: Vec<Option<Complex64>> = self
            .vars
            .iter()
            .map(|v| values.iter().find(|(n, _)| n == v).map(|(_, z)| *z))
            .collect();
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = Complex64::new(super::rational::to_f64(c), 0.0);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let z = idx[i].unwrap_or_else(|| panic!("eval_complex: no value for {}", self.vars[i]));
                    t *= z.powu(k);
                }
            }
            acc += t;
        }
        acc
    }

    /// Replaces `name` by another polynomial.
    pub fn compose(&self, name: &str, q: &MultiPoly) -> MultiPoly {
        let Some(i) = self.var_index(name) else {
            return self.clone();
        };
        let maxd = self.degree_in(name).unwrap_or(0);
        let mut powers = vec![MultiPoly::one()];
        for _ in 0..maxd {
            let next = powers.last().unwrap() * q;
            powers.push(next);
        }
        let mut acc = MultiPoly::zero();
        // group terms by exponent of `name`
        for k in 0..=maxd {
            let mut rest = BTreeMap::new();
            for (e, c) in &self.terms {
                if e[i] == k {
                    let mut ne = e.clone();
                    ne[i] = 0;
                    rest.insert(ne, c.clone());
                }
            }
            if rest.is_empty() {
                continue;
            }
            let cpoly = MultiPoly { vars: self.vars.clone(), terms: rest }.compact();
            acc = &acc + &(&cpoly * &powers[k as usize]);
        }
        acc
    }

    /// Substitutes `name -> num/den` and clears denominators: returns
    /// `(den^d * p(num/den), d)` with `d` the degree of `p` in `name`.
    /// If `name` does not occur, returns `(p, 0)`.
    pub fn substitute(&self, name: &str, num: &MultiPoly, den: &MultiPoly) -> (MultiPoly, u32) {
        assert!(!den.is_zero(), "substitute: zero denominator");
        let d = match self.degree_in(name) {
            Some(d) if self.contains_var(name) => d,
            _ => return (self.clone(), 0),
        };
        let i = self.var_index(name).unwrap();
        let mut num_pows = vec![MultiPoly::one()];
        let mut den_pows = vec![MultiPoly::one()];
        for _ in 0..d {
            let n = num_pows.last().unwrap() * num;
            num_pows.push(n);
            let m = den_pows.last().unwrap() * den;
            den_pows.push(m);
        }
        let mut acc = MultiPoly::zero();
        for k in 0..=d {
            let terms: BTreeMap<Exponents, Rational> = self
                .terms
                .iter()
                .filter(|(e, _)| e[i] == k)
                .map(|(e, c)| {
                    let mut ne = e.clone();
                    ne[i] = 0;
                    (ne, c.clone())
                })
                .collect();
            if terms.is_empty() {
                continue;
            }
            let cpoly = MultiPoly { vars: self.vars.clone(), terms }.compact();
            let piece = &(&cpoly * &num_pows[k as usize]) * &den_pows[(d - k) as usize];
            acc = &acc + &piece;
        }
        (acc, d)
    }

    /// Leading coefficient under lexicographic order of the context.
    pub fn lex_leading(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Ascending univariate coefficients in `name`; panics if other
    /// variables occur.
    pub fn univariate_coeffs(&self, name: &str) -> Vec<Rational> {
        let others: Vec<String> = self.used_vars().into_iter().filter(|v| v != name).collect();
        assert!(others.is_empty(), "not univariate in {name}: also uses {others:?}");
        let Some(d) = self.degree_in(name) else {
            return Vec::new();
        };
        let mut out = vec![Rational::zero(); d as usize + 1];
        let i = self.var_index(name);
        for (e, c) in &self.terms {
            let k = i.map(|i| e[i]).unwrap_or(0) as usize;
            out[k] = c.clone();
        }
        out
    }

    /// Multiplies by the lcm of denominators and divides by the gcd of
    /// numerators, fixing the sign so the lex-leading coefficient is positive.
    pub fn primitive(&self) -> MultiPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut l = num_bigint::BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&l / c.denom());
            g = g.gcd(&n);
        }
        let mut f = Rational::new(l, g);
        if self.lex_leading().unwrap().1.is_negative() {
            f = -f;
        }
        self.scale(&f)
    }

    /// True if `self = c * other` for a nonzero rational `c`.
    pub fn is_unit_multiple_of(&self, other: &MultiPoly) -> Option<Rational> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        let (a, b) = MultiPoly::unify(self, other);
        if a.terms.len() != b.terms.len() {
            return None;
        }
        let (ea, ca) = a.lex_leading().unwrap();
        let (eb, cb) = b.lex_leading().unwrap();
        if ea != eb {
            return None;
        }
        let c = ca / cb;
        if a == b.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// Trailing zeros of a univariate polynomial in `name`: returns the power
    /// of `name` dividing every term.
    pub fn divisible_power(&self, name: &str) -> u32 {
        self.low_degree_in(name).unwrap_or(0)
    }

    /// Text form with terms in descending graded order.
    pub fn to_text(&self) -> String {
        format!("{self}")
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars[..] == other.vars[..] {
            return self.terms == other.terms;
        }
        let (a, b) = MultiPoly::unify(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ts: Vec<(&Exponents, &Rational)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (n, (e, c)) in ts.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

fn add_into(acc: &mut BTreeMap<Exponents, Rational>, e: &Exponents, c: &Rational, negate: bool) {
    match acc.get_mut(e) {
        Some(v) => {
            if negate {
                *v -= c;
            } else {
                *v += c;
            }
            if v.is_zero() {
                acc.remove(e);
            }
        }
        None => {
            acc.insert(e.clone(), if negate { -c.clone() } else { c.clone() });
        }
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::unify(self, rhs);
        for (e, c) in &b.terms {
            add_into(&mut a.terms, e, c, false);
        }
        a
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::unify(self, rhs);
        for (e, c) in &b.terms {
            add_into(&mut a.terms, e, c, true);
        }
        a
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unify(self, rhs);
        let mut acc: BTreeMap<Exponents, Rational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                add_into(&mut acc, &e, &c, false);
            }
        }
        MultiPoly { vars: a.vars, terms: acc }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                self.$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Which of the three ring operations [`poly_arith`] performs.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &MultiPoly, b: &MultiPoly, op: ArithOp) -> MultiPoly {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn v(n: &str) -> MultiPoly {
        MultiPoly::var(n)
    }

    #[test]
    fn difference_of_squares() {
        let s = v("s");
        let one = MultiPoly::one();
        let p = poly_arith(&(&s + &one), &(&s - &one), ArithOp::Mul);
        assert_eq!(p, &s.pow(2) - &one);
        assert_eq!(p.to_text(), "s^2 - 1");
    }

    #[test]
    fn self_subtraction_is_zero() {
        let p = &(&v("s") * &v("t")) + &MultiPoly::constant(rat(3, 7));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn a_factorization() {
        let z = v("z");
        let one = MultiPoly::one();
        let lhs = &(&z - &one) * &(&(&z.pow(2) + &z) + &one).pow(3);
        let a = MultiPoly::univariate_i64("z", &[-1, -2, -3, -1, 1, 3, 2, 1]);
        assert_eq!(lhs, a);
    }

    #[test]
    fn contexts_unify_in_canonical_order() {
        let p = &v("t") + &v("s");
        assert_eq!(p.vars()[..], ["s".to_string(), "t".to_string()]);
        assert_eq!(&v("s") + &v("t"), p);
    }

    #[test]
    fn substitution_clears_denominator() {
        // p = w^2 + 1, w -> 1/t  gives t^2 * (1/t^2 + 1) = 1 + t^2
        let p = &v("w").pow(2) + &MultiPoly::one();
        let (q, d) = p.substitute("w", &MultiPoly::one(), &v("t"));
        assert_eq!(d, 2);
        assert_eq!(q, &v("t").pow(2) + &MultiPoly::one());
        // identity substitution
        let r = &v("s").pow(3) + &v("t");
        let (q, d) = r.substitute("s", &v("s"), &MultiPoly::one());
        assert_eq!(q, r);
        assert_eq!(d, 3);
        // absent variable
        let (q, d) = r.substitute("m", &v("z"), &MultiPoly::one());
        assert_eq!((q, d), (r.clone(), 0));
    }

    #[test]
    fn evaluation_and_coefficients() {
        let p = &(&v("s") * &v("t").pow(2)) - &v("t");
        assert_eq!(p.eval(&[("s", int(2)), ("t", int(3))]), int(15));
        assert_eq!(p.coeff_in("t", 2), v("s").embed(p.vars()));
        assert_eq!(p.degree_in("t"), Some(2));
        assert!(!p.eval_partial(&[("s", int(0))]).contains_var("s"));
    }

    #[test]
    fn primitive_part() {
        let p = &v("z").scale(&rat(2, 3)) - &MultiPoly::constant(rat(4, 9));
        assert_eq!(p.primitive().to_text(), "3*z - 2");
    }
}
