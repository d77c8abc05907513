use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    #[error("fields live on different grids ({left} vs {right} points)")]
    GridMismatch { left: usize, right: usize },

    #[error("grid of {size} points exceeds the configured cap of {cap} (dense matrix would need {bytes} bytes)")]
    ResourceCap { size: usize, cap: usize, bytes: usize },

    #[error("momentum grid too coarse: spacing {dp:.6e} exceeds the Nyquist bound {required:.6e} for the largest separation on the grid; at least {min_points} points are needed over the same extent")]
    NyquistViolation {
        dp: f64,
        required: f64,
        min_points: usize,
    },

    #[error("classically allowed region {{V < E}} is empty on the grid (E = {energy})")]
    EmptyAllowedRegion { energy: f64 },

    #[error("weight w[{index}] = {value:.6e} is not strictly positive; log-spectrum undefined")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("eigensolver failed to converge: {0}")]
    EigenFailure(String),

    #[error("decomposition violates its invariants: {0}")]
    InvariantViolation(String),

    #[error("lowest band is not separated: gap {gap:.3e} below threshold {threshold:.3e}")]
    BandNotSeparated { gap: f64, threshold: f64 },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed matrix file: {0}")]
    BadFormat(String),
}

impl Error {
    pub fn invalid(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            message: message.into(),
        }
    }
}
