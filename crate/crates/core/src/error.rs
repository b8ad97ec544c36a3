use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: edge weight {weight} is not positive")]
    NonPositiveWeight { line: usize, weight: f64 },

    #[error("graph has no edges")]
    EmptyGraph,

    #[error("operation needs at least 2 vertices, graph has {0}")]
    TooFewVertices(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("scoring function returned a non-finite value {value} for d={dist}, sigma={sigma}")]
    NonFinite { dist: f64, sigma: f64, value: f64 },

    #[error("{candidates} candidate pairs exceed the configured cap of {cap}")]
    CandidateCapExceeded { candidates: usize, cap: usize },

    #[error("no test pairs to evaluate")]
    NoTestPairs,

    #[error("no negative pairs available for AUC sampling")]
    NoNegativePairs,
}

impl Error {
    /// True for failures caused by the input data rather than the computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Io { .. } | Error::Parse { .. } | Error::NonPositiveWeight { .. } | Error::EmptyGraph
        )
    }
}
