//! Exact rationals, sparse multivariate and Laurent polynomials, and 2×2
//! matrices over them.

pub mod laurent;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod word;

pub use laurent::{laurent_normalize, LaurentPoly};
pub use matrix::{word_matrix, word_matrix_checked, ComplexMatrix2, Mat2, SymMatrix2};
pub use parse::parse_poly;
pub use poly::{make_vars, poly_arith, ArithOp, MultiPoly, Vars};
pub use rational::Rational;
pub use word::GroupWord;
