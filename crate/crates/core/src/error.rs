use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("odd degree sum {0}: stubs cannot be paired")]
    OddDegreeSum(u64),

    #[error("sample too small: {got} observations, need at least {need}")]
    SampleTooSmall { got: usize, need: usize },

    #[error("degenerate sample: tail has zero variance")]
    DegenerateSample,

    #[error("quadrature did not converge: error estimate {estimate:e} after {intervals} intervals")]
    QuadratureNonConvergence { estimate: f64, intervals: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
