use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error families for the whole pipeline. The CLI maps each family to a
/// distinct exit code, so keep variants coarse.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("pfm error in {path}: {reason}")]
    Pfm { path: PathBuf, reason: String },

    #[error("container error: {0}")]
    Container(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("linear solve failed: {0}")]
    Solve(String),

    #[error("metrics error: {0}")]
    Metrics(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn pfm(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::Pfm {
            path: path.into(),
            reason: reason.into(),
        }
    }
}
