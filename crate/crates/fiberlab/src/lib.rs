//! Standard-library companion to `fiberlab-core`: JSON bridges for every
//! value the toolkit certifies, preset data files, and the command-line
//! dispatcher behind the `fiberlab` binary.

pub mod cli;
pub mod json;
pub mod presets;

pub use cli::{execute, Cli, CommandOutput};

/// Errors surfaced to the command line: a rendered message, exit code 1.
#[derive(Debug)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CliError {}

impl From<fiberlab_core::Error> for CliError {
    fn from(e: fiberlab_core::Error) -> CliError {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> CliError {
        CliError(format!("bad JSON input: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;
