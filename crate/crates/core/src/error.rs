use thiserror::Error;

use crate::rootfinder::SolveReport;

/// Errors produced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),

    #[error("non-finite value at position {0}")]
    NonFinite(usize),

    #[error("oracle size limit: n = {n} exceeds {limit}")]
    OracleSizeLimit { n: usize, limit: usize },

    #[error("permutation is not a bijection on 0..{0}")]
    NotABijection(usize),

    #[error("solver did not converge after {} iterations (max residual {:e})", .0.iterations, .0.max_residual)]
    NotConverged(Box<SolveReport>),

    #[error("coordinates not distinct")]
    CoordinatesNotDistinct,

    #[error("refinement depth limit exceeded on [{t0}, {t1}]")]
    DepthLimitExceeded { t0: f64, t1: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
