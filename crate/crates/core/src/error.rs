use thiserror::Error;

/// Errors produced by the free-fall, orbit and numerics routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    #[error("unknown body '{0}'")]
    UnknownBody(String),

    /// The root finder was given endpoints whose function values share a sign.
    #[error("root not bracketed: f({lo}) = {f_lo}, f({hi}) = {f_hi}")]
    NoBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("root finder did not converge within {0} iterations")]
    MaxIterations(usize),

    #[error("integrator exhausted its budget of {0} steps")]
    StepLimit(usize),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for failures of the numerical machinery rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::MaxIterations(_) | Error::StepLimit(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
