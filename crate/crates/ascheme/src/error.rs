//! CLI-side errors: file and parse diagnostics layered over the core
//! library's structural errors.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}line {line}, column {col}: {msg}")]
    Parse { path: String, line: usize, col: usize, msg: String },
    #[error("{0}")]
    Core(#[from] ascheme_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn parse(line: usize, col: usize, msg: String) -> CliError {
        CliError::Parse { path: String::new(), line, col, msg }
    }

    /// Prefixes parse diagnostics with the originating file.
    pub fn in_file(self, path: &str) -> CliError {
        match self {
            CliError::Parse { line, col, msg, .. } => {
                CliError::Parse { path: format!("{path}: "), line, col, msg }
            }
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
