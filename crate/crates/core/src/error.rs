use thiserror::Error;

/// Errors raised by the cyclotomic, quadratic and Pell routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    InvalidModulus(u64),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("sigma_{k} is not an automorphism of Z[zeta_{p}]")]
    InvalidAutomorphism { k: i64, p: u32 },

    #[error("element is not prime to lambda = 1 - zeta")]
    NotPrimeToLambda,

    #[error("element is not a unit (norm {0})")]
    NotAUnit(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("{0} is not squarefree")]
    NotSquarefree(u64),

    #[error("{0} is a perfect square")]
    PerfectSquare(u64),

    #[error("solution is not a power of the given fundamental solution")]
    NotInGroup,

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An identity that must hold by construction failed; always a bug.
    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
