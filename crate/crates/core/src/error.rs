use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero has no inverse modulo {0}")]
    ZeroInverse(u32),
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("index out of range: {0}")]
    Index(String),
    #[error("cycle index {l} outside 1..={r}")]
    CycleOutOfRange { l: usize, r: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vector is not in the singular subspace")]
    NotSingular,
    #[error("linear system has {unknowns} unknowns, cap is {cap}")]
    ResourceLimit { unknowns: usize, cap: usize },
    #[error("input is not a solution of the KZ system")]
    NotASolution,
    #[error("malformed document: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
