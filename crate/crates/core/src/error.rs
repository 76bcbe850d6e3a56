use thiserror::Error;

/// Errors raised by the arithmetic layers and the verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// An argument outside the domain where the quantity is defined.
    #[error("{0}")]
    Domain(String),

    #[error("{what} = {got} exceeds the budget of {max}")]
    Budget {
        what: &'static str,
        got: usize,
        max: usize,
    },

    /// A step that must be exact by construction was not (an inexact
    /// division, a coefficient outside A). Never expected to fire.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    /// An identity checked by a verification routine does not hold.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
