use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("rank deficient: matrix has rank {rank}, need at least {required}")]
    RankDeficient { rank: usize, required: usize },

    #[error("the all-ones vector is not in the row span")]
    OnesNotInRowSpan,

    #[error("first row is not all ones (normalize the configuration first)")]
    NotNormalized,

    #[error("negative exponent {value} at row {row}, column {col}")]
    NegativeExponent {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("order k = {0} is not supported here (need k >= 1)")]
    InvalidOrder(usize),

    #[error("torus point coordinate {0} is zero")]
    ZeroCoordinate(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),

    #[error("point ({0}) is not a vertex of the polygon")]
    NotAVertex(String),

    #[error("sequence is not strictly increasing from 0: {0}")]
    NotStrictlyIncreasing(String),

    #[error("corank is {0}, expected 1")]
    CorankNotOne(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// True for errors caused by unparseable input rather than by a violated
    /// mathematical precondition.
    pub fn is_malformed_input(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
