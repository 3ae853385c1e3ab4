//! 2×2 matrices over Laurent polynomials, plus a small numeric twin over
//! complex doubles used for residual checks.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::Zero;

use super::laurent::LaurentPoly;
use super::word::GroupWord;
use crate::error::{Error, Result};

/// Ring operations a word evaluator needs. Inverses are taken through the
/// adjugate, so every image must have determinant one.
pub trait Mat2: Clone {
    fn identity() -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn adjugate(&self) -> Self;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix2 {
    pub e11: LaurentPoly,
    pub e12: LaurentPoly,
    pub e21: LaurentPoly,
    pub e22: LaurentPoly,
}

impl SymMatrix2 {
    pub fn new(e11: LaurentPoly, e12: LaurentPoly, e21: LaurentPoly, e22: LaurentPoly) -> Self {
        SymMatrix2 { e11, e12, e21, e22 }
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.e11 * &self.e22) - &(&self.e12 * &self.e21)
    }

    pub fn trace(&self) -> LaurentPoly {
        &self.e11 + &self.e22
    }

    pub fn entries(&self) -> [&LaurentPoly; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    pub fn sub(&self, other: &SymMatrix2) -> SymMatrix2 {
        SymMatrix2 {
            e11: &self.e11 - &other.e11,
            e12: &self.e12 - &other.e12,
            e21: &self.e21 - &other.e21,
            e22: &self.e22 - &other.e22,
        }
    }

    pub fn to_complex(&self, values: &[(&str, Complex64)]) -> ComplexMatrix2 {
        ComplexMatrix2([
            [self.e11.eval_complex(values), self.e12.eval_complex(values)],
            [self.e21.eval_complex(values), self.e22.eval_complex(values)],
        ])
    }
}

impl Mat2 for SymMatrix2 {
    fn identity() -> Self {
        SymMatrix2::new(LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero(), LaurentPoly::one())
    }

    fn mul(&self, o: &Self) -> Self {
        SymMatrix2 {
            e11: &(&self.e11 * &o.e11) + &(&self.e12 * &o.e21),
            e12: &(&self.e11 * &o.e12) + &(&self.e12 * &o.e22),
            e21: &(&self.e21 * &o.e11) + &(&self.e22 * &o.e21),
            e22: &(&self.e21 * &o.e12) + &(&self.e22 * &o.e22),
        }
    }

    fn adjugate(&self) -> Self {
        SymMatrix2 { e11: self.e22.clone(), e12: -&self.e12, e21: -&self.e21, e22: self.e11.clone() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMatrix2(pub [[Complex64; 2]; 2]);

impl ComplexMatrix2 {
    pub fn from_real(a: [[f64; 2]; 2]) -> Self {
        ComplexMatrix2([
            [Complex64::new(a[0][0], 0.0), Complex64::new(a[0][1], 0.0)],
            [Complex64::new(a[1][0], 0.0), Complex64::new(a[1][1], 0.0)],
        ])
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    /// Max-norm of `self - other`.
    pub fn dist(&self, other: &Self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                m = m.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        m
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.0.iter().flatten().all(|z| z.im.abs() <= tol)
    }
}

impl Mat2 for ComplexMatrix2 {
    fn identity() -> Self {
        let o = Complex64::new(1.0, 0.0);
        let z = Complex64::zero();
        ComplexMatrix2([[o, z], [z, o]])
    }

    fn mul(&self, o: &Self) -> Self {
        let a = &self.0;
        let b = &o.0;
        ComplexMatrix2([
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ])
    }

    fn adjugate(&self) -> Self {
        let a = &self.0;
        ComplexMatrix2([[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]])
    }
}

/// Product of generator images along `w`; negative exponents use the
/// adjugate.
pub fn word_matrix<M: Mat2>(w: &GroupWord, images: &BTreeMap<char, M>) -> Result<M> {
    let mut acc = M::identity();
    for &(g, k) in w.letters() {
        let img = images.get(&g).ok_or(Error::MissingGenerator(g))?;
        let base = if k < 0 { img.adjugate() } else { img.clone() };
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
    }
    Ok(acc)
}

/// Symbolic word product, after checking that every used image has
/// determinant one.
pub fn word_matrix_checked(w: &GroupWord, images: &BTreeMap<char, SymMatrix2>) -> Result<SymMatrix2> {
    for (g, _) in w.letters() {
        let img = images.get(g).ok_or(Error::MissingGenerator(*g))?;
        if img.det() != LaurentPoly::one() {
            return Err(Error::Domain(format!("image of {g} does not have determinant 1")));
        }
    }
    word_matrix(w, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::LaurentPoly as L;
    use num_traits::One;

    fn lambda() -> SymMatrix2 {
        SymMatrix2::new(L::var("z"), L::one(), L::zero(), L::inv_var("z"))
    }

    fn beta() -> SymMatrix2 {
        SymMatrix2::new(L::var("x"), L::zero(), L::var("y"), L::inv_var("x"))
    }

    fn images() -> BTreeMap<char, SymMatrix2> {
        BTreeMap::from([('l', lambda()), ('b', beta())])
    }

    #[test]
    fn empty_word_is_identity() {
        let m = word_matrix(&GroupWord::empty(), &images()).unwrap();
        assert_eq!(m, SymMatrix2::identity());
    }

    #[test]
    fn single_letter_is_image() {
        let m = word_matrix(&GroupWord::parse("l").unwrap(), &images()).unwrap();
        assert_eq!(m, lambda());
        assert_eq!(lambda().det(), L::one());
    }

    #[test]
    fn inverse_cancels() {
        let w = GroupWord::parse("l b b^-1 l^-1").unwrap();
        let m = word_matrix_checked(&w, &images()).unwrap();
        assert_eq!(m, SymMatrix2::identity());
    }

    #[test]
    fn missing_generator_reported() {
        let w = GroupWord::parse("a").unwrap();
        assert!(matches!(word_matrix(&w, &images()), Err(Error::MissingGenerator('a'))));
    }

    #[test]
    fn complex_twin_agrees() {
        let w = GroupWord::parse("b^-1 l^2 b^3 l^-1").unwrap();
        let sym = word_matrix(&w, &images()).unwrap();
        let vals = [("z", Complex64::new(1.3, 0.2)), ("x", Complex64::new(-0.7, 0.5)), ("y", Complex64::new(0.25, -1.0))];
        let imgs: BTreeMap<char, ComplexMatrix2> =
            images().into_iter().map(|(k, m)| (k, m.to_complex(&vals))).collect();
        let num = word_matrix(&w, &imgs).unwrap();
        assert!(sym.to_complex(&vals).dist(&num) < 1e-12);
        assert!((num.det() - Complex64::one()).norm() < 1e-12);
    }
}
