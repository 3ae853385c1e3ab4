//! Dehn fillings `(1, n)`: filling polynomials, per-slope Sturm
//! certificates on `V`, the explicit negative-slope threshold, and the
//! Alexander-coefficient check.

pub mod alexander;
pub mod polynomial;
pub mod slope;
pub mod threshold;

pub use alexander::{alexander_check_text, alexander_coefficient_check, AlexanderPoly};
pub use polynomial::{filling_polynomial, verify_palindrome_symmetries, FillingPolynomial, PalindromeRecord, Slope};
pub use slope::{
    certify_slope, positive_slope_witness, scan_csv, scan_slopes, scan_slopes_with_jobs, SlopeCertificate, Verdict,
};
pub use threshold::{b_real_roots, derive_threshold, derive_threshold_tol, derive_threshold_with, ThresholdCertificate};
