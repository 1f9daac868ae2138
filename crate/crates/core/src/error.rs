use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point not in polytope")]
    PointNotInPolytope,

    #[error("zero vector where a nonzero direction is required")]
    ZeroVector,

    #[error("halfspace description is unbounded")]
    Unbounded,

    #[error("valuation hypotheses violated: `{name}` must be simple and normalized")]
    HypothesesViolated { name: String },

    #[error("ξ not generic for P: support set of the intersection of pieces {pieces:?} has dimension {dim}")]
    NotGeneric { pieces: Vec<usize>, dim: usize },

    #[error("inclusion-exclusion cap exceeded: {count} pieces (limit {limit}); refine the input into fewer local pieces")]
    CapExceeded { count: usize, limit: usize },

    #[error("invalid complex: missing face {face} of cell {cell}")]
    MissingFace { cell: String, face: String },

    #[error("invalid complex: improper intersection of cells {first} and {second}")]
    ImproperIntersection { first: String, second: String },

    #[error("face must be proper and nonempty")]
    ImproperFace,

    #[error("density returned a negative value {value} at a sampled direction")]
    NegativeDensity { value: f64 },

    #[error("too many non-generic samples: {resampled} resamples for {samples} samples")]
    TooManyResamples { resampled: u64, samples: u64 },

    #[error("invalid Monte Carlo configuration: {0}")]
    InvalidMonteCarlo(String),

    #[error("input error at {location}: {message}")]
    Input { location: String, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

impl Error {
    pub(crate) fn input(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Input {
            location: location.into(),
            message: message.into(),
        }
    }
}
