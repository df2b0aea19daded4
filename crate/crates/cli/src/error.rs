use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("{0}")]
    Cap(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("{0}")]
    Library(umfb::Error),
}

impl CliError {
    /// 0 ok, 1 verification mismatch, 2 usage, 3 resource cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) | CliError::Io(_) | CliError::Library(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<umfb::Error> for CliError {
    fn from(e: umfb::Error) -> Self {
        match e {
            umfb::Error::TermCapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Library(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
