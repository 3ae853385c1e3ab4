//! The slope-`n` filling polynomial: the compact A-polynomial with
//! `m = z^(−n)`, divided by `z⁴`, cleared to a polynomial with nonzero
//! constant term.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::algebra::rational::int;
use crate::algebra::{laurent_normalize, LaurentPoly, MultiPoly};
use crate::certificate::Fact;
use crate::error::{Error, Result};
use crate::variety::apoly::{a_poly, b_poly};

/// The `(1, n)` filling slope: the extra relation `μλⁿ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slope(i64);

impl Slope {
    pub fn new(n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("the (1, 0) slope is excluded; n must be nonzero".into()));
        }
        Ok(Slope(n))
    }

    pub fn n(self) -> i64 {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingPolynomial {
    pub n: i64,
    #[serde(with = "crate::certificate::poly_str")]
    pub poly: MultiPoly,
    /// Power of `z` multiplied in to clear negative exponents.
    pub clearing_shift: u32,
    /// Power of `z` divided out when the cleared form vanished at `0`.
    pub stripped_z_power: u32,
    /// `+1` for `n < 0` (the form `A(z^(4n′−1) − 1) − Bz^(2n′−4)`), `−1` for
    /// `n > 0` (the form `A(z^(4n+1) − 1) + Bz^(2n−3)`).
    pub orientation: i32,
}

impl FillingPolynomial {
    /// Value at `z = 1`; `A(1) = 0` leaves `∓B(1) = ±4`.
    pub fn at_one(&self) -> crate::algebra::Rational {
        self.poly.eval(&[("z", int(1))])
    }
}

fn mono(name: &str, k: i64) -> LaurentPoly {
    LaurentPoly::monomial(int(1), name, k)
}

/// `−A − B·z^(−2n−4) + A·z^(−4n−1)`: the substitution `m = z^(−n)` into
/// `−z⁴A − Bm² + z³Am⁴`, divided by `z⁴`.
pub fn substituted(n: i64) -> LaurentPoly {
    let a = LaurentPoly::from_poly(&a_poly());
    let b = LaurentPoly::from_poly(&b_poly());
    let compact = &(&(-&(&mono("z", 4) * &a)) - &(&b * &mono("m", 2))) + &(&(&mono("z", 3) * &a) * &mono("m", 4));
    &compact.power_substitute("m", "z", -n) * &mono("z", -4)
}

pub fn filling_polynomial(n: i64) -> Result<FillingPolynomial> {
    let n = Slope::new(n)?.n();
    let orientation = if n < 0 { 1 } else { -1 };
    let oriented = &substituted(n) * &LaurentPoly::constant(int(orientation as i64));
    let (cleared, clearing_shift) = laurent_normalize(&oriented, "z");
    let stripped_z_power = cleared.divisible_power("z");
    let poly = cleared.shift_down("z", stripped_z_power);
    debug_assert!(!poly.constant_term().is_zero());
    Ok(FillingPolynomial { n, poly, clearing_shift, stripped_z_power, orientation })
}

/// `A·z^(4n′−1) − B·z^(2n′−4) − A` for `n = −n′`, `n′ ≥ 2`.
pub fn displayed_negative(n_prime: u32) -> MultiPoly {
    assert!(n_prime >= 2);
    let z = MultiPoly::var("z");
    let (a, b) = (a_poly(), b_poly());
    &(&(&a * &z.pow(4 * n_prime - 1)) - &(&b * &z.pow(2 * n_prime - 4))) - &a
}

/// `A·z^(4n+1) + B·z^(2n−3) − A` for `n ≥ 2`.
pub fn displayed_positive(n: u32) -> MultiPoly {
    assert!(n >= 2);
    let z = MultiPoly::var("z");
    let (a, b) = (a_poly(), b_poly());
    &(&(&a * &z.pow(4 * n + 1)) + &(&b * &z.pow(2 * n - 3))) - &a
}

/// The two root symmetries of the A-polynomial and the induced symmetry of
/// the negative-slope filling polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PalindromeRecord {
    pub n: i64,
    pub a_antipalindromic: bool,
    pub b_palindromic: bool,
    /// `4n′ + 6`.
    pub f_degree_shift: u32,
    pub f_symmetric: bool,
}

impl PalindromeRecord {
    pub fn verified(&self) -> bool {
        self.a_antipalindromic && self.b_palindromic && self.f_symmetric
    }

    pub fn facts(&self) -> Vec<Fact> {
        vec![
            Fact::new("z^7 A(1/z) + A(z) = 0", "exact Laurent expansion", json!({"holds": self.a_antipalindromic})),
            Fact::new("z^14 B(1/z) - B(z) = 0", "exact Laurent expansion", json!({"holds": self.b_palindromic})),
            Fact::new(
                format!("z^{} F(1/z) - F(z) = 0 for F = -A - B z^(2n'-4) + A z^(4n'-1), n' = {}", self.f_degree_shift, -self.n),
                "exact Laurent expansion",
                json!({"holds": self.f_symmetric}),
            ),
        ]
    }
}

/// `z^k·p(1/z)` as a Laurent polynomial.
fn reflected(p: &LaurentPoly, k: i64) -> LaurentPoly {
    &p.invert_var("z") * &mono("z", k)
}

pub fn verify_palindrome_symmetries(n: i64) -> Result<PalindromeRecord> {
    if n >= 0 {
        return Err(Error::Domain(format!("the palindrome symmetry concerns negative slopes, got n = {n}")));
    }
    let a = LaurentPoly::from_poly(&a_poly());
    let b = LaurentPoly::from_poly(&b_poly());
    let a_antipalindromic = (&reflected(&a, 7) + &a).is_zero();
    let b_palindromic = (&reflected(&b, 14) - &b).is_zero();
    let f = substituted(n);
    let shift = (4 * (-n) + 6) as u32;
    let f_symmetric = (&reflected(&f, shift as i64) - &f).is_zero();
    let rec = PalindromeRecord { n, a_antipalindromic, b_palindromic, f_degree_shift: shift, f_symmetric };
    if !rec.verified() {
        return Err(Error::Verification(format!("palindrome identities fail at n = {n}")));
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_slope_is_rejected() {
        assert!(matches!(filling_polynomial(0), Err(Error::Domain(_))));
    }

    #[test]
    fn n_minus_two() {
        let f = filling_polynomial(-2).unwrap();
        let (a, b, z) = (a_poly(), b_poly(), MultiPoly::var("z"));
        let displayed = &(&(&a * &z.pow(7)) - &b) - &a;
        assert_eq!(displayed, displayed_negative(2));
        // −A(0) − B(0) = 0, so one power of z is stripped
        assert_eq!(f.stripped_z_power, 1);
        assert_eq!(f.clearing_shift, 0);
        assert_eq!(f.poly, displayed.shift_down("z", 1));
    }

    #[test]
    fn n_plus_two() {
        let f = filling_polynomial(2).unwrap();
        let (a, b, z) = (a_poly(), b_poly(), MultiPoly::var("z"));
        assert_eq!(f.poly, &(&(&a * &z.pow(9)) + &(&b * &z)) - &a);
        assert_eq!((f.clearing_shift, f.stripped_z_power), (9, 0));
    }

    #[test]
    fn n_minus_one() {
        let f = filling_polynomial(-1).unwrap();
        let (a, b, z) = (a_poly(), b_poly(), MultiPoly::var("z"));
        assert_eq!(f.poly, &(&(&a * &z.pow(5)) - &b) - &(&a * &z.pow(2)));
        assert_eq!(f.clearing_shift, 2);
    }

    #[test]
    fn displayed_forms_are_the_general_rule() {
        for np in 2..=12u32 {
            let f = filling_polynomial(-(np as i64)).unwrap();
            let d = displayed_negative(np);
            assert_eq!(f.poly.shift_up("z", f.stripped_z_power), d, "n' = {np}");
        }
        for n in 2..=12u32 {
            let f = filling_polynomial(n as i64).unwrap();
            assert_eq!(f.poly.shift_up("z", f.stripped_z_power), displayed_positive(n), "n = {n}");
        }
    }

    #[test]
    fn constant_term_and_value_at_one() {
        for n in (-30..=30).filter(|&n| n != 0) {
            let f = filling_polynomial(n).unwrap();
            assert!(!f.poly.constant_term().is_zero(), "n = {n}");
            assert_eq!(f.at_one(), int(if n < 0 { 4 } else { -4 }), "n = {n}");
        }
    }

    #[test]
    fn symmetries() {
        for np in [1, 2, 3, 10] {
            let r = verify_palindrome_symmetries(-np).unwrap();
            assert_eq!(r.f_degree_shift as i64, 4 * np + 6);
        }
        assert!(matches!(verify_palindrome_symmetries(3), Err(Error::Domain(_))));
    }
}
