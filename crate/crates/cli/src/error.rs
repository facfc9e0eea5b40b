use srt_core::geometry::GeometryError;
use srt_core::momentmap::MomentMapError;
use srt_core::repthy::RepthyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::VerificationFailed(_) => 3,
            CliError::ResourceBound(_) => 4,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<RepthyError> for CliError {
    fn from(e: RepthyError) -> Self {
        match e {
            RepthyError::ResourceBound { what, value, limit } => {
                CliError::ResourceBound(format!("{what} = {value} > {limit}"))
            }
            RepthyError::ExcludedCase { .. } | RepthyError::OddSymplectic(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::OddSymplecticDim(_) | GeometryError::Degenerate { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<MomentMapError> for CliError {
    fn from(e: MomentMapError) -> Self {
        match e {
            MomentMapError::OddSymplecticDim(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}
