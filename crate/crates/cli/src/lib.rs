//! Command-line driver, file formats and report rendering for
//! `ford-disc-core`.

pub mod commands;
pub mod format;
pub mod output;

use std::fmt;
use std::io;

/// Environment variable overriding the streaming order cap.
pub const MAX_ORDER_ENV: &str = "FORD_DISC_MAX_ORDER";

/// Failure of a subcommand, carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Exit 1: a scoped verification check failed.
    Verification(String),
    /// Exit 2: invalid arguments.
    Usage(String),
    /// Exit 3: a parameter exceeds a capacity cap.
    Capacity(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Verification(msg) => write!(f, "verification failed: {msg}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Capacity(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ford_disc_core::Error> for CliError {
    fn from(e: ford_disc_core::Error) -> Self {
        match e {
            ford_disc_core::Error::Capacity { .. } => CliError::Capacity(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}
