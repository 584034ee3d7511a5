use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Two interpolation nodes coincide. Positions index the list
    /// `[target, others...]` as handed to the projector builder.
    #[error("degenerate spectrum: roots at positions {first} and {second} both equal {value}")]
    DegenerateSpectrum {
        first: usize,
        second: usize,
        value: String,
    },

    #[error("weight {0} is not dominant (consecutive differences must be nonnegative integers)")]
    NonDominant(String),

    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    #[error("module dimension {dim} exceeds the cap {cap}")]
    DimensionCapExceeded { dim: u128, cap: usize },

    #[error("operator is outside the projective subalgebra: {0}")]
    UnsupportedOperator(String),

    #[error("exponent vector {0} is not in the Pieri index set")]
    NotInPieriSet(String),

    #[error("expected a one-dimensional space of maximal vectors for {weight}, found dimension {found}")]
    MultiplicityAnomaly { weight: String, found: usize },

    #[error("consistency violation: {0}")]
    ConsistencyViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_consistency_violation(&self) -> bool {
        matches!(
            self,
            Error::ConsistencyViolation(_) | Error::MultiplicityAnomaly { .. }
        )
    }
}
