use super::{SymmetricPolytope, Vector};
use crate::error::{Error, Result};

/// A norm on R^d: either the gauge of a centred polytope or the Euclidean norm.
#[derive(Clone, Debug, PartialEq)]
pub enum Gauge {
    Polyhedral(SymmetricPolytope),
    Euclidean(usize),
}

impl Gauge {
    pub fn dim(&self) -> usize {
        match self {
            Gauge::Polyhedral(p) => p.dim(),
            Gauge::Euclidean(d) => *d,
        }
    }

    pub fn polytope(&self) -> Option<&SymmetricPolytope> {
        match self {
            Gauge::Polyhedral(p) => Some(p),
            Gauge::Euclidean(_) => None,
        }
    }

    /// Norm of `x` without a dimension check.
    pub fn norm(&self, x: &[f64]) -> f64 {
        match self {
            Gauge::Polyhedral(p) => p.gauge(x),
            Gauge::Euclidean(_) => x.iter().map(|c| c * c).sum::<f64>().sqrt(),
        }
    }

    pub fn distance(&self, a: &Vector, b: &Vector) -> f64 {
        self.norm(&(a - b))
    }
}

impl From<SymmetricPolytope> for Gauge {
    fn from(p: SymmetricPolytope) -> Self {
        Gauge::Polyhedral(p)
    }
}

/// `‖x‖` for the given gauge, checking dimensions.
pub fn gauge_eval(x: &Vector, gauge: &Gauge) -> Result<f64> {
    if x.dim() != gauge.dim() {
        return Err(Error::DimensionMismatch {
            expected: gauge.dim(),
            found: x.dim(),
        });
    }
    Ok(gauge.norm(x))
}
