use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A Q(ω) coefficient had a nonzero ω-component where a rational was required.
    #[error("coefficient {0} is not rational")]
    NonRationalResult(usize),

    #[error("operator word needs {needed} orders but the series only has order {available}")]
    OrderUnderflow { needed: usize, available: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("a Pochhammer denominator vanishes at the sample point: {0}")]
    PoleAtSample(String),

    #[error("index is not admissible: {0}")]
    InadmissibleIndex(String),

    #[error("tolerance {tol:e} is tighter than the tail estimate {tail:e}")]
    ToleranceTooTight { tol: f64, tail: f64 },

    /// The polynomial has a t-exponent that is not a multiple of three.
    #[error("exponent {0} is not divisible by 3")]
    NotInT3(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
