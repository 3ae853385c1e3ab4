use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("malformed number {0:?}")]
    BadNumber(String),
    #[error("division by zero")]
    ZeroDenominator,
    #[error("only division by a nonzero constant is supported")]
    NonConstantDivisor,
    #[error("exponent {0:?} is not a nonnegative integer")]
    BadExponent(String),
}

/// Resource caps of the Buchberger driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("pair cap exceeded: more than {cap} critical pairs processed")]
    PairCap { cap: usize },
    #[error("coefficient cap exceeded: a coefficient needs more than {cap} bits")]
    CoefficientCap { cap: u64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    /// Input outside the domain of an operation (poles, out-of-range traces).
    #[error("domain error: {0}")]
    Domain(String),
    /// A fact that should hold by exact computation did not.
    #[error("verification failed: {0}")]
    Verification(String),
    /// Data that is internally inconsistent (e.g. a point in a gap of the s-domain).
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("missing image for generator {0:?}")]
    MissingGenerator(char),
}

pub type Result<T> = std::result::Result<T, Error>;
