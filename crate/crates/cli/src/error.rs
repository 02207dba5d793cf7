use extensor_core::Error as CoreError;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SINGULAR: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid {name}: {source}")]
    Validation {
        name: String,
        #[source]
        source: CoreError,
    },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("`{name}` is a {found}, expected {expected}")]
    WrongObject {
        name: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
}

fn is_singular(e: &CoreError) -> bool {
    matches!(
        e,
        CoreError::SingularFrame | CoreError::SingularExtensor { .. } | CoreError::SingularMatrix
    )
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation { source, .. } if is_singular(source) => EXIT_SINGULAR,
            CliError::Core(e) if is_singular(e) => EXIT_SINGULAR,
            _ => EXIT_USAGE,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
