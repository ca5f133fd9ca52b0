use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto the CLI exit-code contract: configuration and usage
/// problems exit with 2, scale caps with 3.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown root system family `{0}` (expected one of A, B, C, D, E, F, G)")]
    UnknownFamily(String),

    #[error("rank {rank} is out of bounds for type {family} ({bounds})")]
    RankOutOfBounds {
        family: char,
        rank: usize,
        bounds: &'static str,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("node index {index} is out of range 1..={rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("{0:?} is not a positive root of this system")]
    NotAPositiveRoot(Vec<i32>),

    #[error("{0:?} is not a root of this system")]
    NotARoot(Vec<i32>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("scale cap exceeded: {0}")]
    ScaleCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
