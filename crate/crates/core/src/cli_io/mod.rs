//! Command-line front end and file formats.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 for data or validation
//! errors.

#[cfg(feature = "cli")]
pub mod args;
pub mod commands;
pub mod formats;

pub use commands::{
    cmd_figure1, cmd_fit, cmd_generate, cmd_pmf, cmd_verify_ba, GenerateRequest, NetworkModel,
};
pub use formats::{FitResult, RunManifest};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Data(e.to_string())
    }
}
