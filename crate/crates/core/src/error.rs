use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} exponents, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("at least one probability coordinate is required")]
    EmptyProbabilities,

    #[error("probability x{index} = {value} is outside [0, 1]")]
    ProbabilityOutOfRange { index: usize, value: String },

    #[error("probabilities must lie in the simplex: sum of x_i = {sum} > 1")]
    SimplexViolation { sum: String },

    #[error("support has {points} points, above the enumeration limit of {limit}; use sampling instead")]
    EnumerationTooLarge { points: String, limit: u64 },

    #[error("sample count must be at least 2, got {0}")]
    InvalidSampleCount(u64),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("coordinate {0} is repeated")]
    RepeatedCoordinate(usize),

    #[error("coordinate {index} is out of range for {dim} probabilities")]
    CoordinateOutOfRange { index: usize, dim: usize },

    #[error("pattern has {expected} coordinates but {found} were given")]
    ArityMismatch { expected: usize, found: usize },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}
