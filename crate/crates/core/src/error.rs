use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |A - A^H| = {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: String, actual: String },
    #[error("invalid Hubbard parameters: {0}")]
    InvalidHubbardParams(String),
    #[error("mixing weight p = {0} is outside [0, 1]")]
    InvalidP(f64),
    #[error("time must be non-negative, got {0}")]
    NegativeTime(f64),
    #[error("decoherence rate must be non-negative, got {0}")]
    NegativeGamma(f64),
    #[error("Kraus series needs more than {cap} terms (Poisson mean {lambda})")]
    TailNotConverged { cap: usize, lambda: f64 },
    #[error("integration step {dt} is too large: stability measure {measure} exceeds {limit}")]
    StepTooLarge { dt: f64, measure: f64, limit: f64 },
    #[error("no steady state exists for gamma = 0")]
    NoSteadyState,
    #[error("degeneracy tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("not a valid density matrix: {0}")]
    InvalidState(String),
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("non-finite value in column `{column}` at row {row}")]
    NonFinite { column: String, row: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn dims(expected: impl ToString, actual: impl ToString) -> Self {
        Error::DimensionMismatch {
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}
