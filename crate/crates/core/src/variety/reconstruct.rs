//! Numeric reconstruction of a representation from a curve point, with
//! relator residuals.
//!
//! Complex mode uses the triangular normal form `ρ(λ) = [[z,1],[0,1/z]]`,
//! `ρ(β) = [[x,0],[y,1/x]]`. Real mode (for `s² ≥ 4`) keeps `ρ(λ)` and uses
//! the real conjugate `ρ(β) = [[0, −1/r],[r, t]]` with `r = w − t/z`, which
//! has trace `t` and gives `tr ρ(λβ) = w`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::classify::CharacterPoint;
use super::presentation::{relator_entry_equations, Presentation, BETA, LONGITUDE};
use crate::algebra::{word_matrix, ComplexMatrix2, Mat2};
use crate::error::{Error, Result};

/// Entries near zero are treated as real below this imaginary part.
pub const REAL_TOLERANCE: f64 = 1e-12;
/// Relator residual accepted for a certified point.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReconstructionMode {
    Real,
    Complex,
}

/// Eigenvalue data of a representation in the triangular normal form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationParams {
    pub z: Complex64,
    pub x: Complex64,
    pub y: Complex64,
    /// Eigenvalue of `ρ(μ)` on the common eigenvector with `z`.
    pub m: Complex64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reconstruction {
    pub mode: ReconstructionMode,
    pub s: f64,
    pub t: f64,
    pub w: f64,
    pub params: RepresentationParams,
    pub lambda: [[Complex64; 2]; 2],
    pub beta: [[Complex64; 2]; 2],
    /// `‖ρ(lhs) − ρ(rhs)‖∞` for the relator written as `lhs = rhs`.
    pub residual: f64,
    /// `|w − (zx + 1/(zx) + y)|`.
    pub trace_residual: f64,
    pub all_real: bool,
}

impl Reconstruction {
    pub fn certified(&self) -> bool {
        self.residual < RESIDUAL_TOLERANCE
            && self.trace_residual < RESIDUAL_TOLERANCE
            && (self.mode == ReconstructionMode::Complex || self.all_real)
    }
}

fn images(lambda: ComplexMatrix2, beta: ComplexMatrix2) -> BTreeMap<char, ComplexMatrix2> {
    let mut m = BTreeMap::new();
    m.insert(LONGITUDE, lambda);
    m.insert(BETA, beta);
    m
}

/// Relator residual of a pair of images.
pub fn relator_residual(lambda: &ComplexMatrix2, beta: &ComplexMatrix2) -> f64 {
    let pres = Presentation::m137();
    let im = images(*lambda, *beta);
    let l = word_matrix(&pres.relator_lhs, &im).expect("both generators have images");
    let r = word_matrix(&pres.relator_rhs, &im).expect("both generators have images");
    l.dist(&r)
}

/// Normal-form images for `(z, x, y)`.
pub fn normal_form_images(z: Complex64, x: Complex64, y: Complex64) -> (ComplexMatrix2, ComplexMatrix2) {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    (ComplexMatrix2([[z, one], [zero, one / z]]), ComplexMatrix2([[x, zero], [y, one / x]]))
}

/// Relator residual of the normal-form images for `(z, x, y)`.
pub fn params_residual(z: Complex64, x: Complex64, y: Complex64) -> f64 {
    let (l, b) = normal_form_images(z, x, y);
    relator_residual(&l, &b)
}

/// Largest modulus of the four entry equations at `(z, x, y)`.
pub fn entry_residual(z: Complex64, x: Complex64, y: Complex64) -> f64 {
    relator_entry_equations()
        .iter()
        .map(|e| e.eval_complex(&[("z", z), ("x", x), ("y", y)]).norm())
        .fold(0.0, f64::max)
}

/// The root of `u² − tr·u + 1` with modulus at most one (either root when
/// both have modulus one).
fn eigenvalue(tr: f64) -> Complex64 {
    let disc = Complex64::new(tr * tr - 4.0, 0.0).sqrt();
    let a = (Complex64::new(tr, 0.0) + disc) / 2.0;
    let b = (Complex64::new(tr, 0.0) - disc) / 2.0;
    if a.norm() <= b.norm() {
        a
    } else {
        b
    }
}

pub fn reconstruct_representation(pt: &CharacterPoint, mode: ReconstructionMode) -> Result<Reconstruction> {
    let (s, t) = pt.approx();
    if t == 0.0 {
        return Err(Error::Domain("t = 0".into()));
    }
    if mode == ReconstructionMode::Real && s * s < 4.0 {
        return Err(Error::Domain(format!("real reconstruction needs s^2 >= 4, got s = {s}")));
    }
    let w = t - 1.0 / (t * (s + 1.0));
    let z = eigenvalue(s);
    let x = eigenvalue(t);
    let y = Complex64::new(w, 0.0) - z * x - 1.0 / (z * x);
    let (nl, nb) = normal_form_images(z, x, y);
    let (lambda, beta) = match mode {
        ReconstructionMode::Complex => (nl, nb),
        ReconstructionMode::Real => {
            let zr = z.re;
            let r = w - t / zr;
            if r.abs() < 1e-12 {
                return Err(Error::Domain("degenerate real normal form (w = t/z)".into()));
            }
            (nl, ComplexMatrix2::from_real([[0.0, -1.0 / r], [r, t]]))
        }
    };
    let im = images(lambda, beta);
    let mu = word_matrix(&Presentation::m137().meridian, &im).expect("both generators have images");
    let m = mu.0[0][0];
    let residual = relator_residual(&lambda, &beta);
    let trace_residual = (Complex64::new(w, 0.0) - (z * x + 1.0 / (z * x) + y)).norm()
        .max((lambda.mul(&beta).trace() - Complex64::new(w, 0.0)).norm());
    let all_real = lambda.is_real(REAL_TOLERANCE) && beta.is_real(REAL_TOLERANCE);
    Ok(Reconstruction {
        mode,
        s,
        t,
        w,
        params: RepresentationParams { z, x, y, m },
        lambda: lambda.0,
        beta: beta.0,
        residual,
        trace_residual,
        all_real,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn real_reconstruction_at_s_3() {
        for pt in CharacterPoint::above(&int(3)).unwrap() {
            let r = reconstruct_representation(&pt, ReconstructionMode::Real).unwrap();
            assert!(r.all_real);
            assert!(r.residual < RESIDUAL_TOLERANCE, "{}", r.residual);
            assert!(r.certified());
            let c = reconstruct_representation(&pt, ReconstructionMode::Complex).unwrap();
            assert!(entry_residual(c.params.z, c.params.x, c.params.y) < RESIDUAL_TOLERANCE);
        }
    }

    #[test]
    fn complex_reconstruction_at_s_0() {
        let pt = &CharacterPoint::above(&int(0)).unwrap()[0];
        let r = reconstruct_representation(pt, ReconstructionMode::Complex).unwrap();
        assert!((r.params.z.norm() - 1.0).abs() < 1e-12);
        assert!(r.residual < RESIDUAL_TOLERANCE);
        assert!(matches!(reconstruct_representation(pt, ReconstructionMode::Real), Err(Error::Domain(_))));
    }

    #[test]
    fn unipotent_params_have_unit_residual() {
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(params_residual(one, one, Complex64::new(0.0, 0.0)), 1.0);
    }
}
