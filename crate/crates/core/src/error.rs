use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group closure exceeded the order cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("subgroup enumeration exceeded the lattice cap of {cap}")]
    LatticeCapExceeded { cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup of the ambient group")]
    NotSubgroup,
    #[error("{0} is not a prime number")]
    NotPrime(u64),
    #[error("matrix has {found} columns, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("row is not contained in the ambient lattice")]
    NotSublattice,
    #[error("mark system has a non-integral solution; the table of marks is corrupt")]
    IntegralityViolation,
    #[error("parse error at byte {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
    #[error("unsupported group size: {0}")]
    UnsupportedSize(String),
    #[error("element does not belong to the group")]
    UnknownElement,
    #[error("elements live on different groups")]
    GroupMismatch,
    #[error("invalid cycle notation: {0}")]
    BadCycle(String),
    #[error("cache io: {0}")]
    CacheIo(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
