use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: String },
    #[error("{what} must be non-negative, got {value}")]
    Negative { what: &'static str, value: String },
    #[error("invalid Zeckendorf representation: {0}")]
    InvalidZeckendorf(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("slope must be non-negative, got {0}")]
    NegativeSlope(String),
    #[error("convergent index {index} must be at least {min}")]
    IndexTooSmall { index: usize, min: usize },
    #[error("no even index within bound {bound}")]
    NotFoundWithinBound { bound: usize },
    #[error("search exhausted its cap of {cap} steps")]
    CapExceeded { cap: u64 },
    #[error("variable `{0}` is not assigned")]
    Unbound(String),
    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn not_positive(what: &'static str, value: impl ToString) -> Self {
        Error::NotPositive { what, value: value.to_string() }
    }

    pub(crate) fn negative(what: &'static str, value: impl ToString) -> Self {
        Error::Negative { what, value: value.to_string() }
    }
}
