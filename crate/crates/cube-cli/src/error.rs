use cube_core::CubeError;
use hardness::HardnessError;
use optimal_cxc::OptError;
use solver_n1::N1Error;
use solver_n3::N3Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("unsolvable: {0}")]
    Unsolvable(String),
    #[error("limit exceeded: {0}")]
    Cap(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Unsolvable(_) => 3,
            CliError::Cap(_) => 4,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<CubeError> for CliError {
    fn from(e: CubeError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<N1Error> for CliError {
    fn from(e: N1Error) -> Self {
        match e {
            N1Error::WrongShape(_) => CliError::Parse(e.to_string()),
            _ => CliError::Unsolvable(e.to_string()),
        }
    }
}

impl From<N3Error> for CliError {
    fn from(e: N3Error) -> Self {
        match e {
            N3Error::WrongShape(_) | N3Error::OutOfRange { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Unsolvable(e.to_string()),
        }
    }
}

impl From<OptError> for CliError {
    fn from(e: OptError) -> Self {
        match e {
            OptError::WrongShape(_) => CliError::Parse(e.to_string()),
            OptError::CapExceeded(m) => CliError::Cap(m),
            OptError::Unsolvable(m) => CliError::Unsolvable(m),
        }
    }
}

impl From<HardnessError> for CliError {
    fn from(e: HardnessError) -> Self {
        match e {
            HardnessError::CapExceeded(m) => CliError::Cap(m),
            HardnessError::Cube(c) => c.into(),
            _ => CliError::Parse(e.to_string()),
        }
    }
}
