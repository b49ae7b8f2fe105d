use thiserror::Error;

/// Errors raised by channel, geometry and resolution construction.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid parameter: {0}")]
    Invalid(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("outside model validity: {what}")]
    OutOfValidity { what: String },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("series truncation cap of {cap} terms exceeded (argument {argument})")]
    SeriesCapExceeded { cap: usize, argument: f64 },
}

/// Errors raised by the beamforming solvers.
#[derive(Debug, Error)]
pub enum SolveError {
    #[error("energy demand infeasible: EU power share {share} >= 1")]
    EnergyInfeasible { share: f64 },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("analog update degenerate: {0}")]
    DegenerateAnalog(String),
    #[error("effective beam has zero norm")]
    DegenerateBeam,
    #[error("least-squares system is rank deficient and ridge fallback failed")]
    SingularUpdate,
    #[error(transparent)]
    Model(#[from] ModelError),
}
