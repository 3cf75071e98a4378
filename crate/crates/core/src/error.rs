use thiserror::Error;

/// Errors raised by the spectrum computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A user-supplied parameter is outside its domain (e.g. an even `d`).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A family index violates the admissibility constraint of its family.
    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("binomial coefficient with negative top {top}")]
    NegativeBinomialTop { top: i64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("weight has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    /// The Weyl dimension product of a weight is not a positive integer.
    #[error("inadmissible weight {weight}: Weyl product is {value}")]
    InadmissibleWeight { weight: String, value: String },

    /// An exact computation produced a value that cannot occur for admissible
    /// input, e.g. a non-integral multiplicity.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    /// True for errors caused by bad input rather than by a broken invariant.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter(_) | Error::Constraint(_) | Error::LengthMismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
