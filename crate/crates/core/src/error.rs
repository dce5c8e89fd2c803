use thiserror::Error;

/// Errors raised by the computations in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape {shape} is not admissible for {truncation}")]
    InadmissibleShape { shape: String, truncation: String },

    #[error("malformed shape {0:?}: rows must be positive and weakly decreasing")]
    MalformedShape(Vec<usize>),

    #[error("position {index} out of range 1..={len}")]
    PositionOutOfRange { index: usize, len: usize },

    #[error("positions must be strictly increasing, got {0:?}")]
    UnsortedPositions(Vec<usize>),

    #[error("invalid Grassmannian Gr({k},{n}): need k <= n")]
    InvalidGrassmannian { k: i64, n: i64 },

    #[error("an untruncated computation needs an explicit degree bound")]
    MissingDegreeBound,

    #[error("incompatible operands: {0}")]
    Incompatible(String),

    #[error("operation requires coefficients mod 2")]
    RequiresMod2,

    #[error("{0} is even, no eta class is attached to it")]
    EvenTableau(String),

    #[error("eta class condition Sq2(a) = b mod 2 fails")]
    EtaCondition,

    #[error("count vectors are not those of a split motive: {0}")]
    InconsistentCounts(String),

    #[error("no solution to Sq2(u) = target in degree {0}")]
    NoSolution(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
