use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("numeric failure: {0}")]
    NumericFailure(String),

    /// A sign test could not be decided because `<u|F|v>` was too close to zero.
    #[error(
        "indeterminate verdict: |<u|F|v>| = {magnitude:e} below threshold at eigenvalue {lambda}"
    )]
    IndeterminateVerdict { lambda: f64, magnitude: f64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
