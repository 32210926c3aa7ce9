use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group enumeration exceeded the bound of {bound} elements")]
    EnumerationBoundExceeded { bound: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("groups have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("isomorphism oracle limited to order {limit}, got {order}")]
    OracleBoundExceeded { order: usize, limit: usize },
    #[error("exponent {k} is not a unit modulo {e}")]
    NonUnitExponent { k: u64, e: u32 },
    #[error("inexact division in the cyclotomic ring")]
    InexactDivision,
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("q = {0} is too small (need q > 2)")]
    QTooSmall(u64),
    #[error("classification verdict does not support this operation")]
    WrongVerdict,
    #[error("partition sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cycle type {0} is not that of an even permutation")]
    NotEvenCycleType(String),
    #[error("n = {0} is too small (need n >= 6)")]
    NTooSmall(usize),
    #[error("no witness partition found for cycle type {0}")]
    NoWitness(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("cannot parse group spec '{0}'")]
    BadGroupSpec(String),
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("character table computation failed: {0}")]
    TableDefect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
