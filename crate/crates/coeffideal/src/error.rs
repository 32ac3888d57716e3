use thiserror::Error;

/// Engine-wide error type. Verdicts ("fails", "indeterminate") are not
/// errors; they travel in reports. Errors are conditions that stop a
/// computation outright.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("ring context mismatch: {0}")]
    ContextMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("configuration error: {0}")]
    Config(String),

    /// A configured resource cap was hit. The message carries the partial
    /// state summary (basis size, pending pairs, offending degree, ...).
    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("parse error at {line}:{col}: {message}")]
    Parse { line: u32, col: u32, message: String },
}

impl Error {
    pub fn parse(line: u32, col: u32, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            message: message.into(),
        }
    }

    /// Process exit class for the CLI: 4 usage/parse, 5 budget exhaustion.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget(_) => 5,
            _ => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
