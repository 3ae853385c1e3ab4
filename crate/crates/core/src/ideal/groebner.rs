//! Buchberger's algorithm over the rationals with integer (fraction-free)
//! internal arithmetic, the Gebauer–Möller pair update (coprime and chain
//! criteria) and sugar-degree pair selection.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use crate::algebra::{MultiPoly, Rational};
use crate::error::GroebnerError;

pub type Mono = Box<[u16]>;

/// Dense integer polynomial with terms in strictly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub terms: Vec<(Mono, BigInt)>,
}

#[derive(Clone, Debug)]
pub struct GroebnerConfig {
    pub max_pairs: usize,
    pub max_coeff_bits: u64,
}

pub const DEFAULT_MAX_PAIRS: usize = 200_000;
pub const DEFAULT_MAX_COEFF_BITS: u64 = 1 << 20;

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: DEFAULT_MAX_PAIRS, max_coeff_bits: DEFAULT_MAX_COEFF_BITS }
    }
}

impl GroebnerConfig {
    /// Default caps, with `HOLONOMY_CERT_MAX_PAIRS` overriding the pair cap.
    pub fn from_env() -> Self {
        let mut c = GroebnerConfig::default();
        if let Ok(v) = std::env::var("HOLONOMY_CERT_MAX_PAIRS") {
            if let Ok(n) = v.trim().parse::<usize>() {
                c.max_pairs = n;
            }
        }
        c
    }
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm_mono(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn mono_div(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mono_mul(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn deg(a: &[u16]) -> u32 {
    a.iter().map(|&x| x as u32).sum()
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &[u16] {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    /// From a rational polynomial already embedded in priority order.
    pub fn from_poly(p: &MultiPoly, order: &MonomialOrder) -> IPoly {
        let idx: Vec<usize> = order
            .priority
            .iter()
            .map(|v| p.var_index(v).unwrap_or(usize::MAX))
            .collect();
        for u in p.used_vars() {
            assert!(order.priority.contains(&u), "variable {u} not covered by the monomial order");
        }
        let mut l = BigInt::one();
        for (_, c) in p.terms() {
            l = l.lcm(c.denom());
        }
        let mut terms: Vec<(Mono, BigInt)> = p
            .terms()
            .map(|(e, c)| {
                let m: Mono = idx
                    .iter()
                    .map(|&i| if i == usize::MAX { 0 } else { u16::try_from(e[i]).expect("exponent fits u16") })
                    .collect();
                (m, c.numer() * (&l / c.denom()))
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut q = IPoly { terms };
        q.make_primitive();
        q
    }

    pub fn to_poly(&self, order: &MonomialOrder, monic: bool) -> MultiPoly {
        let vars = crate::algebra::poly::make_vars(&order.priority);
        let pos: Vec<usize> = order.priority.iter().map(|v| vars.iter().position(|w| w == v).unwrap()).collect();
        let lc = if monic && !self.is_zero() { self.lc().clone() } else { BigInt::one() };
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; vars.len()];
            for (i, &k) in m.iter().enumerate() {
                e[pos[i]] = k as u32;
            }
            (e, Rational::new(c.clone(), lc.clone()))
        }).collect::<Vec<_>>();
        MultiPoly::from_terms(vars, terms).compact()
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    /// Returns the factor divided by (with sign).
    fn make_primitive(&mut self) -> BigInt {
        if self.terms.is_empty() {
            return BigInt::one();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
        }
        g
    }

    fn max_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }
}

/// `a*p - b*mono*g`, both operands sorted; used with matching leading terms.
fn combine(p: &[(Mono, BigInt)], a: &BigInt, b: &BigInt, mono: &[u16], g: &[(Mono, BigInt)], order: &MonomialOrder) -> Vec<(Mono, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let shifted: Vec<(Mono, &BigInt)> = g.iter().map(|(m, c)| (mono_mul(m, mono), c)).collect();
    while i < p.len() || j < shifted.len() {
        let o = if i == p.len() {
            Ordering::Less
        } else if j == shifted.len() {
            Ordering::Greater
        } else {
            order.cmp(&p[i].0, &shifted[j].0)
        };
        match o {
            Ordering::Greater => {
                out.push((p[i].0.clone(), a * &p[i].1));
                i += 1;
            }
            Ordering::Less => {
                out.push((shifted[j].0.clone(), -(b * shifted[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = a * &p[i].1 - b * shifted[j].1;
                if !c.is_zero() {
                    out.push((p[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Full reduction of `p` by `basis`. Returns `(r, mult)` with
/// `mult * p - r` in the ideal and `mult` a nonzero rational.
pub(crate) fn reduce_full(p: &IPoly, basis: &[&IPoly], order: &MonomialOrder, cap_bits: u64) -> Result<(IPoly, Rational), GroebnerError> {
    let mut mult = Rational::one();
    // remaining part, sorted descending
    let mut rest: Vec<(Mono, BigInt)> = p.terms.clone();
    let mut done: Vec<(Mono, BigInt)> = Vec::new();
    let mut steps = 0usize;
    while !rest.is_empty() {
        let lead = &rest[0].0;
        let reducer = basis.iter().find(|g| divides(g.lm(), lead));
        match reducer {
            Some(g) => {
                let gcd = g.lc().gcd(&rest[0].1);
                let a = g.lc() / &gcd;
                let b = &rest[0].1 / &gcd;
                let mono = mono_div(lead, g.lm());
                let mut next = combine(&rest, &a, &b, &mono, &g.terms, order);
                debug_assert!(next.first().is_none_or(|t| order.cmp(&t.0, lead) == Ordering::Less));
                if next.first().is_some_and(|t| &t.0 == lead) {
                    next.remove(0);
                }
                rest = next;
                if !a.is_one() {
                    for (_, c) in done.iter_mut() {
                        *c *= &a;
                    }
                    mult *= Rational::from_integer(a);
                }
                steps += 1;
                if steps.is_multiple_of(16) {
                    let mut gg = BigInt::zero();
                    for (_, c) in done.iter().chain(rest.iter()) {
                        gg = gg.gcd(c);
                        if gg.is_one() {
                            break;
                        }
                    }
                    if !gg.is_one() && !gg.is_zero() {
                        for (_, c) in done.iter_mut().chain(rest.iter_mut()) {
                            *c /= &gg;
                        }
                        mult /= Rational::from_integer(gg);
                    }
                    let bits = rest.iter().chain(done.iter()).map(|(_, c)| c.bits()).max().unwrap_or(0);
                    if bits > cap_bits {
                        return Err(GroebnerError::CoefficientCap { cap: cap_bits });
                    }
                }
            }
            None => {
                done.push(rest.remove(0));
            }
        }
    }
    let mut r = IPoly { terms: done };
    let g = r.make_primitive();
    mult /= Rational::from_integer(g);
    if r.max_bits() > cap_bits {
        return Err(GroebnerError::CoefficientCap { cap: cap_bits });
    }
    Ok((r, mult))
}

fn spoly(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> IPoly {
    let l = lcm_mono(f.lm(), g.lm());
    let mf = mono_div(&l, f.lm());
    let mg = mono_div(&l, g.lm());
    let gcd = f.lc().gcd(g.lc());
    let a = g.lc() / &gcd;
    let b = f.lc() / &gcd;
    let fs: Vec<(Mono, BigInt)> = f.terms.iter().map(|(m, c)| (mono_mul(m, &mf), c.clone())).collect();
    let mut terms = combine(&fs, &a, &b, &mg, &g.terms, order);
    if terms.first().is_some_and(|t| t.0 == l) {
        terms.remove(0);
    }
    let mut s = IPoly { terms };
    s.make_primitive();
    s
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

/// Raw Buchberger output before interreduction.
pub(crate) struct Run {
    pub polys: Vec<IPoly>,
    pub active: Vec<bool>,
    pub pairs_processed: usize,
}

pub(crate) fn buchberger(input: Vec<IPoly>, order: &MonomialOrder, cfg: &GroebnerConfig) -> Result<Run, GroebnerError> {
    let mut polys: Vec<IPoly> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed = 0usize;

    let mut pending: Vec<IPoly> = input.into_iter().filter(|p| !p.is_zero()).collect();
    // smaller leading terms first keeps early reducers small
    pending.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for p in pending {
        let refs: Vec<&IPoly> = polys.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
        let (h, _) = reduce_full(&p, &refs, order, cfg.max_coeff_bits)?;
        if h.is_zero() {
            continue;
        }
        let s = h.terms.iter().map(|(m, _)| deg(m)).max().unwrap_or(0);
        insert(&mut polys, &mut sugar, &mut active, &mut pairs, h, s);
    }

    while !pairs.is_empty() {
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm)))
            .unwrap();
        let pr = pairs.swap_remove(k);
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(GroebnerError::PairCap { cap: cfg.max_pairs });
        }
        let s = spoly(&polys[pr.i], &polys[pr.j], order);
        if s.is_zero() {
            continue;
        }
        let refs: Vec<&IPoly> = polys.iter().zip(&active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
        let (h, _) = reduce_full(&s, &refs, order, cfg.max_coeff_bits)?;
        if h.is_zero() {
            continue;
        }
        if trace_enabled() {
            eprintln!(
                "[groebner] pairs={processed} queue={} basis={} sugar={} new: terms={} bits={} lm={:?}",
                pairs.len(),
                polys.len(),
                pr.sugar,
                h.terms.len(),
                h.max_bits(),
                h.lm()
            );
        }
        insert(&mut polys, &mut sugar, &mut active, &mut pairs, h, pr.sugar);
    }
    Ok(Run { polys, active, pairs_processed: processed })
}

fn trace_enabled() -> bool {
    std::env::var_os("HOLONOMY_CERT_TRACE").is_some()
}

/// Gebauer–Möller update.
fn insert(polys: &mut Vec<IPoly>, sugar: &mut Vec<u32>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, h: IPoly, h_sugar: u32) {
    let hi = polys.len();
    let hlm: Mono = h.lm().into();
    let new: Vec<(usize, Mono)> = (0..hi).filter(|&g| active[g]).map(|g| (g, lcm_mono(polys[g].lm(), &hlm))).collect();

    // chain criterion among the new pairs
    let mut keep: Vec<(usize, Mono)> = Vec::new();
    for (idx, (g, l)) in new.iter().enumerate() {
        if coprime(polys[*g].lm(), &hlm) {
            keep.push((*g, l.clone()));
            continue;
        }
        let dominated = new.iter().enumerate().any(|(jdx, (_, l2))| {
            jdx != idx && divides(l2, l) && (l2 != l || jdx < idx)
        });
        if !dominated {
            keep.push((*g, l.clone()));
        }
    }
    // coprime criterion
    keep.retain(|(g, _)| !coprime(polys[*g].lm(), &hlm));

    // drop old pairs whose lcm is divisible by lm(h) unless h shares that lcm
    pairs.retain(|p| {
        if !divides(&hlm, &p.lcm) {
            return true;
        }
        let li = lcm_mono(polys[p.i].lm(), &hlm);
        let lj = lcm_mono(polys[p.j].lm(), &hlm);
        li == p.lcm || lj == p.lcm
    });

    for g in 0..hi {
        if active[g] && divides(&hlm, polys[g].lm()) {
            active[g] = false;
        }
    }

    for (g, l) in keep {
        let s = (sugar[g] + deg(&l) - deg(polys[g].lm())).max(h_sugar + deg(&l) - deg(&hlm));
        pairs.push(Pair { i: g, j: hi, lcm: l, sugar: s });
    }
    polys.push(h);
    sugar.push(h_sugar);
    active.push(true);
}

/// Reduced basis: minimal leading terms, tails reduced, sorted by increasing
/// leading monomial.
pub(crate) fn interreduce(run: Run, order: &MonomialOrder, cap_bits: u64) -> Result<Vec<IPoly>, GroebnerError> {
    let mut basis: Vec<IPoly> = run.polys.into_iter().zip(run.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    // minimality
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<IPoly> = Vec::new();
    for p in basis {
        if !minimal.iter().any(|q| divides(q.lm(), p.lm())) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<&IPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p).collect();
        // the leading term is irreducible by minimality, so it survives
        let (r, _) = reduce_full(&minimal[i], &others, order, cap_bits)?;
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    Ok(out)
}

/// Checks every S-polynomial of `basis` (no criteria) reduces to zero.
pub(crate) fn all_spolys_reduce(basis: &[IPoly], order: &MonomialOrder) -> bool {
    let refs: Vec<&IPoly> = basis.iter().collect();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = spoly(&basis[i], &basis[j], order);
            match reduce_full(&s, &refs, order, u64::MAX) {
                Ok((r, _)) if r.is_zero() => {}
                _ => return false,
            }
        }
    }
    true
}
