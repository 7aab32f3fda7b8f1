use std::path::PathBuf;

use thiserror::Error;

/// Exit code for parse, I/O and usage failures.
pub const EXIT_ERROR: i32 = 3;
/// Exit code when an oracle or enumeration cap refuses the input.
pub const EXIT_CAP: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bitableau_core::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error("golden cases: {0}")]
    Golden(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(bitableau_core::Error::CapExceeded { .. }) => EXIT_CAP,
            _ => EXIT_ERROR,
        }
    }
}
