use thiserror::Error;

use crate::geometry::PolytopeViolation;
use crate::lp::LpError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid polytope: {0}")]
    InvalidPolytope(#[from] PolytopeViolation),

    #[error("unsupported body `{name}` in dimension {dim}")]
    UnsupportedBody { name: String, dim: usize },

    #[error("point is not on the boundary (gauge {gauge})")]
    NotOnBoundary { gauge: f64 },

    #[error("vector is not a unit vector (gauge {gauge})")]
    NotUnit { gauge: f64 },

    #[error("epsilon {eps} outside the admissible range (0, {upper})")]
    InvalidEpsilon { eps: f64, upper: f64 },

    #[error("homothety ratio {0} outside (0, 1)")]
    InvalidRatio(f64),

    #[error("subdivision depth must be at least 1, got {0}")]
    InvalidDepth(usize),

    #[error("{count} vertices need {partitions} partitions, above the cap of {cap}")]
    PartitionCapExceeded { count: usize, partitions: u128, cap: u128 },

    #[error("terminal count {0} outside the supported range")]
    TerminalCount(usize),

    #[error("operation requires a polyhedral gauge")]
    NotPolyhedral,

    #[error("degree bound violated: vertex degree {degree} exceeds B = {bound} on terminals {terminals}")]
    DegreeBoundViolated {
        degree: usize,
        bound: f64,
        terminals: String,
    },

    #[error("linear program failed: {0}")]
    Lp(#[from] LpError),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Short stable identifier for machine consumption.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::InvalidPolytope(_) => "invalid-polytope",
            Error::UnsupportedBody { .. } => "unsupported-body",
            Error::NotOnBoundary { .. } => "not-on-boundary",
            Error::NotUnit { .. } => "not-unit",
            Error::InvalidEpsilon { .. } => "invalid-epsilon",
            Error::InvalidRatio(_) => "invalid-ratio",
            Error::InvalidDepth(_) => "invalid-depth",
            Error::PartitionCapExceeded { .. } => "partition-cap-exceeded",
            Error::TerminalCount(_) => "terminal-count",
            Error::NotPolyhedral => "not-polyhedral",
            Error::DegreeBoundViolated { .. } => "degree-bound-violated",
            Error::Lp(_) => "lp-failure",
            Error::Internal(_) => "internal",
        }
    }
}
