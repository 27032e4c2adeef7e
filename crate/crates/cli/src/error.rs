use indexbound_core::Error as CoreError;

/// Failure of a command, carrying its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// A verified property did not hold.
    #[error("{0}")]
    Invariant(String),
    /// Unreadable or malformed input.
    #[error("{0}")]
    Parse(String),
    /// Bad arguments or an invalid perturbation.
    #[error("{0}")]
    Usage(String),
    /// The input does not meet a structural precondition (for instance a
    /// disconnected final graph).
    #[error("{0}")]
    Structural(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Invariant(_) => 1,
            Self::Parse(_) => 2,
            Self::Usage(_) => 3,
            Self::Structural(_) => 4,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Graph(_) | CoreError::InvalidArgument { .. } | CoreError::KindMismatch { .. } => {
                Self::Usage(e.to_string())
            }
            CoreError::DisconnectedFinal | CoreError::Bound(_) => Self::Structural(e.to_string()),
            CoreError::Spectral(_) => Self::Invariant(e.to_string()),
        }
    }
}
