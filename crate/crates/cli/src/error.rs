use std::io;
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },

    #[error("malformed matrix file {path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error("{path} is not a valid density matrix: {source}")]
    Validation {
        path: PathBuf,
        source: realign_core::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] realign_core::Error),
}
