use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} do not form a partition (must be positive and weakly decreasing)")]
    InvalidPartition(Vec<usize>),

    #[error("{0:?} is not a permutation of 0..{1}")]
    InvalidPermutation(Vec<usize>, usize),

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("exponent vector of length {got} used with {expected} variables")]
    ExponentLength { expected: usize, got: usize },

    #[error("polynomial is not homogeneous of degree {0}")]
    NotHomogeneous(u32),

    #[error("partition {partition:?} has more than {max_parts} parts")]
    TooManyParts { partition: Vec<usize>, max_parts: usize },

    #[error("expected a partition of {expected}, got {partition:?}")]
    WeightMismatch { expected: usize, partition: Vec<usize> },

    #[error("degree bound {requested} exceeds the series truncation {available}")]
    DegreeBoundExceeded { requested: u32, available: u32 },

    #[error("series coefficients must be positive integers")]
    NotAMonomialSeries,

    #[error("{context}: expected an integer, got {value}")]
    NonIntegral { context: String, value: String },

    #[error("{context}: expected a nonnegative value, got {value}")]
    Negative { context: String, value: String },

    #[error("{0} has no convolution route; use the power-sum route")]
    NoConvolutionRoute(&'static str),
}
