//! Errors and the exit-code contract.

use degsim::algebra::AlgebraError;
use degsim::certify::CertifyError;
use degsim::graph::GraphError;
use degsim::zeta::ZetaError;
use thiserror::Error;

/// Exit status for a refuted or invalid verdict.
pub const EXIT_VERDICT: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Dimension(String),
    #[error("{0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Parse(_) => 2,
            Self::Dimension(_) => 3,
            Self::Precondition(_) => 4,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Parse(_) => "parse",
            Self::Dimension(_) => "dimension",
            Self::Precondition(_) => "precondition",
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::MalformedGraph6(_) | GraphError::MalformedJson(_) => {
                Self::Parse(e.to_string())
            }
            _ => Self::Precondition(e.to_string()),
        }
    }
}

impl From<CertifyError> for CliError {
    fn from(e: CertifyError) -> Self {
        match e {
            CertifyError::Graph(g) => g.into(),
            CertifyError::Malformed(_) | CertifyError::BadBlockStructure(_) => {
                Self::Parse(e.to_string())
            }
            CertifyError::DimensionMismatch(_) => Self::Dimension(e.to_string()),
            _ => Self::Precondition(e.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::DimensionMismatch(_) => Self::Dimension(e.to_string()),
            _ => Self::Parse(e.to_string()),
        }
    }
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        Self::Precondition(e.to_string())
    }
}
