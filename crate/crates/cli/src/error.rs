use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("infeasible: {0}")]
    Infeasible(entransfer::Error),

    #[error("numerical failure: {0}")]
    Numerical(entransfer::Error),

    #[error("config file: {0}")]
    Config(#[from] toml::de::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Process exit status: 2 for bad input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config(_) => 2,
            _ => 1,
        }
    }
}

impl From<entransfer::Error> for CliError {
    fn from(e: entransfer::Error) -> Self {
        use entransfer::Error as E;
        match e {
            E::Domain(msg) | E::InvalidVector(msg) => CliError::Usage(msg),
            E::InfeasibleHeadroom { .. } | E::DegenerateDilution(_) => CliError::Infeasible(e),
            E::SingularPoint { .. } | E::Bracket { .. } => CliError::Numerical(e),
        }
    }
}
