//! IO, report formats and command drivers on top of `chern-descent-core`.
//!
//! - [`input`] reads and writes the plain-text split-vector format.
//! - [`report`] is the versioned JSON report document.
//! - [`commands`] runs `verify`, `chain` and `check` and renders the human
//!   tables.

pub mod commands;
pub mod input;
pub mod report;

use thiserror::Error;

/// Process exit codes shared by every subcommand.
pub mod exit {
    /// Every check passed.
    pub const OK: i32 = 0;
    /// A mathematical check failed.
    pub const CHECK_FAILED: i32 = 1;
    /// Bad flags, parameters or input files.
    pub const USAGE: i32 = 2;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] input::InputError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] chern_descent_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        exit::USAGE
    }
}
