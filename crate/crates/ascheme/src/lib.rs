//! Command-line front end and file formats for the exact
//! association-scheme verifier in `ascheme-core`.

pub mod acceptance;
pub mod commands;
pub mod error;
pub mod formats;
pub mod report;

pub use commands::{run, Cli, Command};
pub use error::{CliError, Result};
