use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed input file; `line` is 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix of order {n} exceeds the dense limit of {cap}")]
    TooLarge { n: usize, cap: usize },

    /// `I - alpha*A` is not positive definite.
    #[error("alpha = {alpha} violates the constraint 0 < alpha < 1/lambda_1{}", .lambda1.map(|l| format!(" (lambda_1 = {l})")).unwrap_or_default())]
    AlphaOutOfRange { alpha: f64, lambda1: Option<f64> },

    #[error(transparent)]
    NonConvergence(Box<NonConvergence>),
}

/// An iterative method stopped before reaching its tolerance.
///
/// Carries the last iterate so callers can decide whether it is good enough.
#[derive(Debug, Clone, Error)]
#[error("{method} did not converge after {iterations} iterations (achieved {achieved:.3e}, wanted {tolerance:.3e})")]
pub struct NonConvergence {
    pub method: &'static str,
    pub iterations: usize,
    pub achieved: f64,
    pub tolerance: f64,
    pub last_iterate: Vec<f64>,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    pub fn is_non_convergence(&self) -> bool {
        matches!(self, Error::NonConvergence(_))
    }
}

impl From<NonConvergence> for Error {
    fn from(e: NonConvergence) -> Self {
        Error::NonConvergence(Box::new(e))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
