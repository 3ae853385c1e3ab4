//! Polynomial ideals: division, Gröbner bases, elimination, saturation by
//! units and membership.

mod groebner;
pub mod order;

use serde::{Deserialize, Serialize};

pub use groebner::{GroebnerConfig, DEFAULT_MAX_COEFF_BITS, DEFAULT_MAX_PAIRS};
pub use order::{MonomialOrder, OrderKind};

use crate::algebra::{make_vars, MultiPoly};
use crate::error::GroebnerError;
use groebner::IPoly;

/// Generators of an ideal together with the order they were computed in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    pub generators: Vec<MultiPoly>,
    pub order: MonomialOrder,
    pub is_groebner: bool,
}

impl IdealBasis {
    pub fn new(generators: Vec<MultiPoly>, order: MonomialOrder) -> Self {
        IdealBasis { generators, order, is_groebner: false }
    }

    /// One generator per line in the polynomial text format.
    pub fn to_text(&self) -> String {
        self.generators.iter().map(|g| g.to_text()).collect::<Vec<_>>().join("\n")
    }

    fn ipolys(&self) -> Vec<IPoly> {
        self.generators.iter().map(|g| IPoly::from_poly(g, &self.order)).collect()
    }
}

/// Statistics of one Buchberger run, kept for certificates.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroebnerStats {
    pub pairs_processed: usize,
    pub basis_size: usize,
}

/// All distinct variable names of a generator list in canonical order.
pub fn context_of(gens: &[MultiPoly]) -> Vec<String> {
    let mut all: Vec<String> = gens.iter().flat_map(|g| g.used_vars()).collect();
    all.sort();
    all.dedup();
    make_vars(&all).to_vec()
}

/// Completes an order so every variable of `gens` is covered; missing
/// variables are appended as a trailing lowest block.
fn covering(order: &MonomialOrder, gens: &[MultiPoly]) -> MonomialOrder {
    let missing: Vec<String> =
        context_of(gens).into_iter().filter(|v| !order.priority.contains(v)).collect();
    if missing.is_empty() {
        return order.clone();
    }
    let mut o = order.clone();
    match &mut o.kind {
        OrderKind::Lex | OrderKind::GrevLex => {}
        OrderKind::Block(sizes) => sizes.push(missing.len()),
    }
    if o.kind == OrderKind::GrevLex {
        o.kind = OrderKind::Block(vec![o.priority.len(), missing.len()]);
    }
    o.priority.extend(missing);
    o
}

/// Remainder of `p` on division by the basis. When the basis is a Gröbner
/// basis this is the unique normal form.
pub fn normal_form(p: &MultiPoly, basis: &IdealBasis) -> MultiPoly {
    let mut all = basis.generators.clone();
    all.push(p.clone());
    let order = covering(&basis.order, &all);
    let b = IdealBasis { generators: basis.generators.clone(), order: order.clone(), is_groebner: basis.is_groebner };
    let gs = b.ipolys();
    let refs: Vec<&IPoly> = gs.iter().collect();
    let ip = IPoly::from_poly(p, &order);
    let (r, mult) = groebner::reduce_full(&ip, &refs, &order, u64::MAX).expect("uncapped reduction");
    // express remainder for p itself: p ~ r / mult, and from_poly scaled by content
    let scale = content_scale(p, &ip, &order);
    r.to_poly(&order, false).scale(&(scale / mult))
}

/// Factor `c` with `p = c * to_poly(ip)`.
fn content_scale(p: &MultiPoly, ip: &IPoly, order: &MonomialOrder) -> crate::algebra::Rational {
    use num_traits::Zero;
    if p.is_zero() {
        return crate::algebra::Rational::zero();
    }
    let q = ip.to_poly(order, false);
    p.is_unit_multiple_of(&q).expect("primitive part is a unit multiple")
}

pub fn groebner_basis(gens: &[MultiPoly], order: &MonomialOrder) -> Result<IdealBasis, GroebnerError> {
    groebner_basis_with(gens, order, &GroebnerConfig::from_env()).map(|(b, _)| b)
}

pub fn groebner_basis_with(gens: &[MultiPoly], order: &MonomialOrder, cfg: &GroebnerConfig) -> Result<(IdealBasis, GroebnerStats), GroebnerError> {
    let order = covering(order, gens);
    let input: Vec<IPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| IPoly::from_poly(g, &order)).collect();
    let run = groebner::buchberger(input, &order, cfg)?;
    let pairs_processed = run.pairs_processed;
    let reduced = groebner::interreduce(run, &order, cfg.max_coeff_bits)?;
    let generators: Vec<MultiPoly> = reduced.iter().map(|p| p.to_poly(&order, true)).collect();
    let stats = GroebnerStats { pairs_processed, basis_size: generators.len() };
    Ok((IdealBasis { generators, order, is_groebner: true }, stats))
}

/// Exhaustive post-hoc check: every S-polynomial reduces to zero.
pub fn verify_groebner(basis: &IdealBasis) -> bool {
    let gs = basis.ipolys();
    groebner::all_spolys_reduce(&gs, &basis.order)
}

/// Generators of the elimination ideal `I ∩ k[remaining]`.
pub fn eliminate<S: AsRef<str>>(gens: &[MultiPoly], drop: &[S], order: &MonomialOrder) -> Result<Vec<MultiPoly>, GroebnerError> {
    eliminate_with(gens, drop, order, &GroebnerConfig::from_env()).map(|(g, _)| g)
}

pub fn eliminate_with<S: AsRef<str>>(gens: &[MultiPoly], drop: &[S], order: &MonomialOrder, cfg: &GroebnerConfig) -> Result<(Vec<MultiPoly>, GroebnerStats), GroebnerError> {
    assert!(order.eliminates(drop), "order {order:?} is not an elimination order for the dropped variables");
    let (basis, stats) = groebner_basis_with(gens, order, cfg)?;
    let kept = basis
        .generators
        .into_iter()
        .filter(|g| drop.iter().all(|d| !g.contains_var(d.as_ref())))
        .collect();
    Ok((kept, stats))
}

/// Generators extended by `u * inv_u - 1` for each unit `u`, with fresh
/// inverse variables.
#[derive(Clone, Debug)]
pub struct Saturated {
    pub generators: Vec<MultiPoly>,
    pub inverse_vars: Vec<String>,
}

pub fn inverse_var_name(u: &str) -> String {
    format!("inv_{u}")
}

pub fn saturate_units<S: AsRef<str>>(gens: &[MultiPoly], units: &[S]) -> Saturated {
    let mut generators = gens.to_vec();
    let mut inverse_vars = Vec::new();
    for u in units {
        let name = inverse_var_name(u.as_ref());
        let rel = &(&MultiPoly::var(u.as_ref()) * &MultiPoly::var(&name)) - &MultiPoly::one();
        generators.push(rel);
        inverse_vars.push(name);
    }
    Saturated { generators, inverse_vars }
}

/// Membership test through a grevlex Gröbner basis of `gens`.
pub fn ideal_member(p: &MultiPoly, gens: &[MultiPoly]) -> Result<bool, GroebnerError> {
    let mut all = gens.to_vec();
    all.push(p.clone());
    let order = MonomialOrder::grevlex(&context_of(&all));
    let basis = groebner_basis(gens, &order)?;
    Ok(normal_form(p, &basis).is_zero())
}

/// Membership in an already computed Gröbner basis.
pub fn member_of(p: &MultiPoly, basis: &IdealBasis) -> bool {
    debug_assert!(basis.is_groebner);
    normal_form(p, basis).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn self_reduction() {
        let g = p("x^2*y - 3*x + 1");
        let b = groebner_basis(std::slice::from_ref(&g), &MonomialOrder::grevlex(&["x", "y"])).unwrap();
        assert!(normal_form(&g, &b).is_zero());
        assert!(normal_form(&MultiPoly::zero(), &b).is_zero());
    }

    #[test]
    fn tiny_bases() {
        let b = groebner_basis(&[p("x")], &MonomialOrder::lex(&["x"])).unwrap();
        assert_eq!(b.generators, vec![p("x")]);
        let b = groebner_basis(&[p("x+y"), p("y")], &MonomialOrder::lex(&["x", "y"])).unwrap();
        assert_eq!(b.generators, vec![p("y"), p("x")]);
    }

    #[test]
    fn textbook_cyclic() {
        // x^2 - y, x^3 - x under lex x > y (Cox-Little-O'Shea style)
        let gens = [p("x^3 - 2*x*y"), p("x^2*y - 2*y^2 + x")];
        let order = MonomialOrder::grevlex(&["x", "y"]);
        let b = groebner_basis(&gens, &order).unwrap();
        assert!(verify_groebner(&b));
        for g in &gens {
            assert!(member_of(g, &b));
        }
        // known reduced grevlex basis {x^2, x*y, y^2 - x/2}
        assert_eq!(b.generators.len(), 3);
        assert!(b.generators.contains(&p("x^2")));
        assert!(b.generators.contains(&p("x*y")));
        assert!(b.generators.contains(&p("y^2 - 1/2*x")));
    }

    #[test]
    fn linear_elimination() {
        let gens = [p("y - s"), p("y - t")];
        let order = MonomialOrder::lex(&["y", "s", "t"]);
        let e = eliminate(&gens, &["y"], &order).unwrap();
        assert!(ideal_member(&p("s - t"), &e).unwrap());
        assert!(e.iter().all(|g| !g.contains_var("y")));
    }

    #[test]
    fn unit_ideal_stays_unit() {
        let e = eliminate(&[MultiPoly::one()], &["x"], &MonomialOrder::lex(&["x", "y"])).unwrap();
        assert_eq!(e, vec![MultiPoly::one()]);
    }

    #[test]
    fn saturation_kills_nilpotent_unit() {
        let sat = saturate_units(&[p("z^2")], &["z"]);
        let mut prio = sat.inverse_vars.clone();
        prio.push("z".into());
        let e = eliminate(&sat.generators, &sat.inverse_vars, &MonomialOrder::lex(&prio)).unwrap();
        assert_eq!(e, vec![MultiPoly::one()]);
        let empty = saturate_units(&[], &["z"]);
        assert_eq!(empty.generators, vec![p("z") * MultiPoly::var("inv_z") - MultiPoly::one()]);
    }

    #[test]
    fn membership_of_generators() {
        let gens = [p("x*y - 1"), p("y^2 - x")];
        for g in &gens {
            assert!(ideal_member(g, &gens).unwrap());
        }
        assert!(!ideal_member(&MultiPoly::one(), &gens).unwrap());
    }

    #[test]
    fn pair_cap_is_typed() {
        let gens = [p("x^3 - 2*x*y"), p("x^2*y - 2*y^2 + x")];
        let cfg = GroebnerConfig { max_pairs: 1, max_coeff_bits: 1 << 20 };
        let r = groebner_basis_with(&gens, &MonomialOrder::grevlex(&["x", "y"]), &cfg);
        assert_eq!(r.unwrap_err(), GroebnerError::PairCap { cap: 1 });
    }

    #[test]
    fn normal_form_is_idempotent_and_rational() {
        let gens = [p("2*x^2 - 3*y"), p("3*y^2 - x")];
        let b = groebner_basis(&gens, &MonomialOrder::grevlex(&["x", "y"])).unwrap();
        let f = p("x^3*y + 1/5*y^3 - 7");
        let r = normal_form(&f, &b);
        assert_eq!(normal_form(&r, &b), r);
        assert!(ideal_member(&(&f - &r), &gens).unwrap());
    }
}
