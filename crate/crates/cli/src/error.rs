use complex_dirac::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    NoConvergence(String),
    #[error("{0}")]
    Reality(String),
    #[error("{0}")]
    Tolerance(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 1,
            CliError::NoConvergence(_) => 2,
            CliError::Reality(_) => 3,
            CliError::Tolerance(_) => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match root(&e) {
            CoreError::RealityViolation { .. } => CliError::Reality(msg),
            CoreError::NoConvergence { .. } | CoreError::BlowUp { .. } => {
                CliError::NoConvergence(msg)
            }
            _ => CliError::Invalid(msg),
        }
    }
}

fn root(e: &CoreError) -> &CoreError {
    match e {
        CoreError::AtNode { source, .. } => root(source),
        other => other,
    }
}

pub type CliResult<T> = Result<T, CliError>;
