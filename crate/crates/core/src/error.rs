use thiserror::Error;

/// Errors raised by the spectral calculus, the matrix oracle and the input parser.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectrumError {
    #[error("empty spectrum")]
    EmptySpectrum,
    #[error("multiplicity must be at least 1, got {0}")]
    ZeroMultiplicity(u64),
    #[error("duplicate eigenvalue {0}")]
    DuplicateValue(String),
    #[error("interval lower bound {lo} exceeds upper bound {hi}")]
    InvalidInterval { lo: String, hi: String },
    #[error("empty list of factor spectra")]
    NoFactors,
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("sector {n} out of range for dimension {dim}")]
    SectorOutOfRange { n: usize, dim: usize },
    #[error("eigenvalue and multiplicity lists differ in length ({eigs} vs {mults})")]
    LengthMismatch { eigs: usize, mults: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = SpectrumError> = std::result::Result<T, E>;
