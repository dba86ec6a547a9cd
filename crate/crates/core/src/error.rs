use thiserror::Error;

/// Errors raised by the algebra, poset and reliability routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("exponent vector has length {found}, ring has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },

    #[error("cap exceeded: exponent {exponent} of variable {var} is above cap {cap}")]
    CapExceeded { var: usize, exponent: u32, cap: u32 },

    #[error("the zero ideal is not accepted here")]
    ZeroIdeal,

    #[error("the unit ideal <1> is not accepted here")]
    ImproperIdeal,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("betti computation limited to {limit} generators, ideal has {found}; use Mayer-Vietoris tree bounds instead")]
    GeneratorLimit { limit: usize, found: usize },

    #[error("invalid path partition: {0}")]
    InvalidPartition(String),

    #[error("invalid variable order: {0}")]
    InvalidOrder(String),

    #[error("isomorphism search inconclusive after {0} steps")]
    Inconclusive(u64),

    #[error("enumeration limit exceeded: {found} above limit {limit}; use min_path_partition instead")]
    EnumerationLimit { limit: usize, found: usize },

    #[error("cover sets violate condition: {0}")]
    CoverSets(String),

    #[error("path lengths rejected: {0}")]
    PathLengths(String),

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("level {level} out of range 1..={max}")]
    LevelOutOfRange { level: u32, max: u32 },

    #[error("invalid probability table: {0}")]
    InvalidProbabilities(String),

    #[error("slot pattern of component {component} is not a prefix of its slots")]
    NonPrefixSlots { component: usize },

    #[error("state space of {0} vectors is too large for exhaustive enumeration")]
    StateSpaceTooLarge(u128),

    #[error("ideal is not invariant under permutations of its variables")]
    NotSymmetric,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
