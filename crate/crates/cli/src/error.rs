use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    File { path: String, source: k5edge::Error },
    #[error(transparent)]
    Core(#[from] k5edge::Error),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }

    pub fn file(path: &Path, source: k5edge::Error) -> Self {
        CliError::File {
            path: path.display().to_string(),
            source,
        }
    }
}
