use thiserror::Error;

/// Errors raised by the Zeno laboratory.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZenoError {
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("Bloch vector is not physical: norm {norm} exceeds 1")]
    NonPhysicalBloch { norm: f64 },

    #[error("invalid pulse protocol: {0}")]
    InvalidProtocol(String),

    #[error("number of measurements must be at least 1")]
    ZeroMeasurements,

    #[error("integrator step count must be at least 1")]
    ZeroSteps,

    #[error("history has {got} levels but the kernel expects {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("N = {n} exceeds the enumeration cap of {cap}")]
    EnumerationCap { n: u32, cap: u32 },

    #[error("Monte Carlo trial count must be at least 1")]
    ZeroTrials,

    #[error("cannot merge estimates: {0}")]
    IncompatibleEstimates(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T, E = ZenoError> = std::result::Result<T, E>;
