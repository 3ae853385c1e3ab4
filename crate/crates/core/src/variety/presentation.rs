//! The two-generator presentation of the knot-complement group, the generic
//! upper/lower triangular images of its generators, and the entry equations
//! of the relator.

use std::collections::BTreeMap;

use crate::algebra::{word_matrix, GroupWord, LaurentPoly, MultiPoly, SymMatrix2};

/// Generator letters: `l` is the longitude λ, `b` is β.
pub const LONGITUDE: char = 'l';
pub const BETA: char = 'b';

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<char>,
    /// Relator as the equation `lhs = rhs`.
    pub relator_lhs: GroupWord,
    pub relator_rhs: GroupWord,
    pub meridian: GroupWord,
    pub longitude: GroupWord,
}

impl Presentation {
    /// `β⁻¹λ⁻¹β⁻¹λ⁻¹β²λ = λβ⁻²λ⁻¹β²`, meridian `β²λ⁻¹β⁻³λ⁻¹β²`.
    pub fn m137() -> Self {
        Presentation {
            generators: vec![LONGITUDE, BETA],
            relator_lhs: GroupWord::new([('b', -1), ('l', -1), ('b', -1), ('l', -1), ('b', 2), ('l', 1)]),
            relator_rhs: GroupWord::new([('l', 1), ('b', -2), ('l', -1), ('b', 2)]),
            meridian: GroupWord::new([('b', 2), ('l', -1), ('b', -3), ('l', -1), ('b', 2)]),
            longitude: GroupWord::new([('l', 1)]),
        }
    }

    /// The relator as a single word `lhs · rhs⁻¹`.
    pub fn relator(&self) -> GroupWord {
        self.relator_lhs.concat(&self.relator_rhs.inverse())
    }
}

/// `ρ(λ) = [[z, 1], [0, 1/z]]`, `ρ(β) = [[x, 0], [y, 1/x]]`.
pub fn generic_images() -> BTreeMap<char, SymMatrix2> {
    let mut m = BTreeMap::new();
    m.insert(
        LONGITUDE,
        SymMatrix2::new(LaurentPoly::var("z"), LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::inv_var("z")),
    );
    m.insert(
        BETA,
        SymMatrix2::new(LaurentPoly::var("x"), LaurentPoly::zero(), LaurentPoly::var("y"), LaurentPoly::inv_var("x")),
    );
    m
}

/// The four entries of `ρ(lhs) − ρ(rhs)`, each cleared of negative powers
/// of `z` and `x`.
pub fn relator_entry_equations() -> Vec<MultiPoly> {
    let pres = Presentation::m137();
    let images = generic_images();
    let lhs = word_matrix(&pres.relator_lhs, &images).expect("images cover the generators");
    let rhs = word_matrix(&pres.relator_rhs, &images).expect("images cover the generators");
    lhs.sub(&rhs).entries().iter().map(|e| e.cleared().primitive()).collect()
}

/// Trace relations `s = z + 1/z`, `t = x + 1/x`, `w = zx + 1/(zx) + y`,
/// cleared of denominators.
pub fn trace_relations() -> Vec<MultiPoly> {
    let v = MultiPoly::var;
    let one = MultiPoly::one();
    let (z, x, y, s, t, w) = (v("z"), v("x"), v("y"), v("s"), v("t"), v("w"));
    let zx = &z * &x;
    vec![
        &(&(&s * &z) - &(&z * &z)) - &one,
        &(&(&t * &x) - &(&x * &x)) - &one,
        &(&(&(&w * &zx) - &(&zx * &zx)) - &one) - &(&y * &zx),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::algebra::Mat2;
    use num_traits::Zero;

    #[test]
    fn identity_images_satisfy_relator() {
        let pres = Presentation::m137();
        let mut images = BTreeMap::new();
        images.insert(LONGITUDE, SymMatrix2::identity());
        images.insert(BETA, SymMatrix2::identity());
        let r = word_matrix(&pres.relator(), &images).unwrap();
        assert_eq!(r, SymMatrix2::identity());
    }

    #[test]
    fn unipotent_longitude_is_not_a_solution() {
        // z = x = 1, y = 0 makes β trivial while λ stays unipotent; the
        // relator then reads λ⁻¹ = I, so one entry equation is nonzero.
        let eqs = relator_entry_equations();
        assert_eq!(eqs.len(), 4);
        let vals: Vec<_> = eqs.iter().map(|e| e.eval(&[("z", int(1)), ("x", int(1)), ("y", int(0))])).collect();
        assert_eq!(vals.iter().filter(|v| !v.is_zero()).count(), 1);
    }

    #[test]
    fn words_have_expected_shape() {
        let p = Presentation::m137();
        assert_eq!(p.meridian.letters().len(), 5);
        assert_eq!(p.meridian.len(), 9);
        assert_eq!(p.relator_lhs.letters().len(), 6);
    }
}
