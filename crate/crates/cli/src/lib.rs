//! Document I/O, the built-in corpus, the theorem suite and DOT output
//! behind the `rigframe` binary.

pub mod commands;
pub mod corpus;
pub mod document;
pub mod dot;
pub mod suite;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Library(#[from] rigframe::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Library(_) => 1,
        }
    }
}
