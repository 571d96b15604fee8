use mathieu::MathieuError;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] MathieuError),
    #[error("reference data line {line}: {message}")]
    Data { line: usize, message: String },
    #[error("malformed record: {0}")]
    Parse(String),
    #[error("non-finite result {value} for t = {t}")]
    NonFinite { t: usize, value: f64 },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status: 2 for bad input, 1 for failures while computing.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Data { .. } | CliError::Parse(_) => 2,
            CliError::Math(e) => match e {
                MathieuError::NoConvergence { .. }
                | MathieuError::DegenerateNormalization { .. }
                | MathieuError::DegenerateLeadingCoefficient { .. } => 1,
                _ => 2,
            },
            CliError::NonFinite { .. } | CliError::Io(_) => 1,
        }
    }
}
