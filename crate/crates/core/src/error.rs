use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty permutation")]
    Empty,
    #[error("value {value} is out of range for degree {degree}")]
    ValueOutOfRange { value: usize, degree: usize },
    #[error("value {0} appears more than once")]
    DuplicateValue(usize),
    #[error("cannot parse token {token:?}: {reason}")]
    Parse { token: String, reason: String },
    #[error("index {index} is out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("pattern of degree {pattern} is longer than host of degree {host}")]
    PatternTooLong { pattern: usize, host: usize },
    #[error("word is not reduced")]
    NotReduced,
    #[error("{what} exceeds the configured bound ({value} > {bound})")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("{0} is not fully commutative")]
    NotFullyCommutative(String),
    #[error("set is uncrowded")]
    Uncrowded,
    #[error("transition precondition failed: {0}")]
    Precondition(String),
    /// A structural property that the theory guarantees was observed to fail.
    #[error("invariant violated for {subject}: {detail}")]
    Invariant { subject: String, detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
