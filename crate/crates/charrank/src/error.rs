use thiserror::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    Mismatch = 1,
    InvalidInput = 2,
    Guard = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Engine(#[from] stiefel_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("witness registry: {0}")]
    Registry(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        use stiefel_core::Error as E;
        match self {
            CliError::Engine(E::BranchGuard { .. }) => ExitCode::Guard,
            CliError::Engine(
                E::ParameterRange { .. }
                | E::MaxDegree(_)
                | E::DegreeOutOfRange { .. }
                | E::DegreeOverflow { .. }
                | E::UnsupportedSquare { .. }
                | E::CorollaryParameters { .. },
            ) => ExitCode::InvalidInput,
            CliError::Engine(_) => ExitCode::Mismatch,
            CliError::Usage(_) | CliError::Io { .. } => ExitCode::InvalidInput,
            CliError::Registry(_) => ExitCode::InvalidInput,
        }
    }
}
