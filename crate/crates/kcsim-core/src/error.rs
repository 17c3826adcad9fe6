use alloc::string::String;

/// Errors shared by all engine modules.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoreError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("momentum {k} is not on the grid 2*pi*m/{n_sites}")]
    InvalidMomentum { k: f64, n_sites: usize },
    #[error("step size underflow at t = {t}")]
    StepSizeUnderflow { t: f64 },
    #[error("dt too large: per-step jump probability {p} exceeds 0.1")]
    DtTooLarge { p: f64 },
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

pub type Result<T> = core::result::Result<T, CoreError>;
