use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("could not parse state file: {0}")]
    Parse(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{command} failed its acceptance check: {detail}")]
    CheckFailed { command: String, detail: String },
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::InvalidState(_) => 3,
            CliError::Io { .. } => 4,
            CliError::CheckFailed { .. } => 5,
        }
    }
}

impl From<qmono_core::Error> for CliError {
    fn from(e: qmono_core::Error) -> Self {
        match e {
            qmono_core::Error::Parse(msg) => CliError::Parse(msg),
            other => CliError::InvalidState(other.to_string()),
        }
    }
}
