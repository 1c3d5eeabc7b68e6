use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("z-degree {degree} exceeds truncation order {order}")]
    DegreeOutOfRange { degree: usize, order: usize },

    #[error("invalid group parameters BS({n},{m}): both must be at least 1")]
    InvalidGroup { n: u64, m: u64 },

    #[error("malformed word: unexpected {found:?} at byte {position}")]
    MalformedWord { position: usize, found: String },

    #[error(
        "word length {requested} exceeds the oracle guard of {guard}; the number of reachable \
         states grows exponentially with length (override with {env_var})"
    )]
    GuardExceeded {
        requested: usize,
        guard: usize,
        env_var: &'static str,
    },

    #[error("length {n} is outside the table (nmax = {nmax})")]
    LengthOutOfRange { n: usize, nmax: usize },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("not enough usable terms: need {needed}, have {have}")]
    InsufficientTerms { needed: usize, have: usize },

    #[error("{name} = {value} lies outside [{low}, {high}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        low: f64,
        high: f64,
    },

    #[error("no singularity candidate in (0, 1/sqrt(12)] for N = {0}")]
    NoCandidate(u64),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
