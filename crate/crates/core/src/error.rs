use thiserror::Error;

pub type Result<T> = std::result::Result<T, MathieuError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MathieuError {
    /// An argument lies outside the mathematical domain of the routine.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid tridiagonal system: {0}")]
    InvalidSystem(String),

    /// The implicit-shift iteration did not settle the eigenvalue at `index`.
    #[error("eigenvalue {index} did not converge within {iterations} iterations")]
    NoConvergence { index: usize, iterations: usize },

    #[error("normalization sum vanishes for order index {index} (|sum| = {magnitude:e})")]
    DegenerateNormalization { index: usize, magnitude: f64 },

    #[error("leading coefficient vanishes for order index {index}")]
    DegenerateLeadingCoefficient { index: usize },

    #[error("requested {requested} orders but only {available} are stored")]
    Range { requested: usize, available: usize },

    #[error("true order {t} not present for category {category}")]
    Lookup { category: u8, t: usize },

    #[error("category mismatch: {left} vs {right}")]
    CategoryMismatch { left: u8, right: u8 },

    #[error("singular coordinate: {0}")]
    SingularCoordinate(String),

    /// |k_z| > k gives an imaginary transverse wavenumber.
    #[error("evanescent regime: |k_z| = {k_z} exceeds k = {k}")]
    Evanescent { k: f64, k_z: f64 },
}
