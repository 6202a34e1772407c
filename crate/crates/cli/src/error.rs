use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    /// A specialization made a denominator vanish.
    #[error("pole: {0}")]
    Pole(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed document: {0}")]
    Document(String),
    #[error(transparent)]
    Core(jwverma::Error),
}

impl CliError {
    /// Process exit status. Zero and one are reserved for pass and
    /// verification failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Core(_) => 2,
            CliError::Pole(_) => 3,
            CliError::Io { .. } | CliError::Document(_) => 4,
        }
    }
}

impl From<jwverma::Error> for CliError {
    fn from(e: jwverma::Error) -> Self {
        match e {
            jwverma::Error::Pole { denominator } => {
                CliError::Pole(format!("denominator {denominator} vanishes"))
            }
            other => CliError::Core(other),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
