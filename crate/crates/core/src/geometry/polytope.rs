use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Vector, GEOM_TOL};
use crate::lp::{LinearProgram, LpOutcome, Relation};

/// The first invariant a candidate polytope fails.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolytopeViolation {
    #[error("dimension {0} outside 2..=4")]
    Dimension(usize),
    #[error("no normals given")]
    Empty,
    #[error("normal {index} has {found} coordinates, expected {expected}")]
    NormalLength { index: usize, expected: usize, found: usize },
    #[error("normal {0} has a non-finite coordinate")]
    NonFinite(usize),
    #[error("normal {0} is zero")]
    ZeroNormal(usize),
    #[error("normals {0} and {1} coincide")]
    Duplicate(usize, usize),
    #[error("centredness: normal {0} has no negated partner")]
    NotCentred(usize),
    #[error("boundedness: direction {sign}e_{axis} is unbounded")]
    Unbounded { axis: usize, sign: char },
}

/// A centred convex polytope `{x : a_i · x <= 1}` whose normals are closed under negation.
///
/// Construction validates every invariant, so a value of this type is always
/// a bounded, centred body usable as the unit ball of a norm.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(into = "PolytopeSpec")]
pub struct SymmetricPolytope {
    dim: usize,
    normals: Vec<Vector>,
}

/// Serialized facet form: `{"dim": d, "normals": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolytopeSpec {
    pub dim: usize,
    pub normals: Vec<Vec<f64>>,
}

impl From<SymmetricPolytope> for PolytopeSpec {
    fn from(p: SymmetricPolytope) -> Self {
        PolytopeSpec {
            dim: p.dim,
            normals: p.normals.into_iter().map(Vector::into_inner).collect(),
        }
    }
}

impl TryFrom<PolytopeSpec> for SymmetricPolytope {
    type Error = PolytopeViolation;

    fn try_from(spec: PolytopeSpec) -> Result<Self, Self::Error> {
        SymmetricPolytope::new(spec.dim, spec.normals.into_iter().map(Vector::new).collect())
    }
}

impl SymmetricPolytope {
    pub fn new(dim: usize, normals: Vec<Vector>) -> Result<Self, PolytopeViolation> {
        if !(2..=4).contains(&dim) {
            return Err(PolytopeViolation::Dimension(dim));
        }
        if normals.is_empty() {
            return Err(PolytopeViolation::Empty);
        }
        for (index, a) in normals.iter().enumerate() {
            if a.dim() != dim {
                return Err(PolytopeViolation::NormalLength {
                    index,
                    expected: dim,
                    found: a.dim(),
                });
            }
            if !a.is_finite() {
                return Err(PolytopeViolation::NonFinite(index));
            }
            if a.iter().all(|x| x.abs() <= GEOM_TOL) {
                return Err(PolytopeViolation::ZeroNormal(index));
            }
        }
        for i in 0..normals.len() {
            for j in i + 1..normals.len() {
                if normals[i].max_abs_diff(&normals[j]) <= GEOM_TOL {
                    return Err(PolytopeViolation::Duplicate(i, j));
                }
            }
        }
        for (i, a) in normals.iter().enumerate() {
            let neg = -a;
            if !normals.iter().any(|b| b.max_abs_diff(&neg) <= GEOM_TOL) {
                return Err(PolytopeViolation::NotCentred(i));
            }
        }
        let body = SymmetricPolytope { dim, normals };
        body.check_bounded()?;
        Ok(body)
    }

    fn check_bounded(&self) -> Result<(), PolytopeViolation> {
        for axis in 0..self.dim {
            for sign in [1.0, -1.0] {
                // max sign*x_axis  <=>  min -sign*x_axis
                let mut objective = vec![0.0; self.dim];
                objective[axis] = -sign;
                let mut lp = LinearProgram::new(objective);
                for a in &self.normals {
                    lp.add_constraint(a.coords().to_vec(), Relation::Le, 1.0);
                }
                let bounded = matches!(lp.solve(), Ok(LpOutcome::Optimal(_)));
                if !bounded {
                    return Err(PolytopeViolation::Unbounded {
                        axis,
                        sign: if sign > 0.0 { '+' } else { '-' },
                    });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vector] {
        &self.normals
    }

    pub fn num_facets(&self) -> usize {
        self.normals.len()
    }

    /// `max_i a_i · x`, clamped below at zero.
    pub fn gauge(&self, x: &[f64]) -> f64 {
        self.normals.iter().map(|a| a.dot(x)).fold(0.0, f64::max)
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.gauge(x) <= 1.0 + GEOM_TOL
    }

    pub fn to_spec(&self) -> PolytopeSpec {
        self.clone().into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec())
    }

    #[test]
    fn rejects_missing_negation() {
        let err = SymmetricPolytope::new(2, vec![v(&[1.0, 0.0]), v(&[-1.0, 0.0]), v(&[0.0, 1.0])]).unwrap_err();
        assert_eq!(err, PolytopeViolation::NotCentred(2));
    }

    #[test]
    fn rejects_unbounded_slab() {
        let err = SymmetricPolytope::new(2, vec![v(&[1.0, 0.0]), v(&[-1.0, 0.0])]).unwrap_err();
        assert!(matches!(err, PolytopeViolation::Unbounded { axis: 1, .. }));
    }

    #[test]
    fn rejects_duplicates_and_bad_dimensions() {
        let err = SymmetricPolytope::new(2, vec![v(&[1.0, 0.0]), v(&[1.0, 1e-12])]).unwrap_err();
        assert_eq!(err, PolytopeViolation::Duplicate(0, 1));
        assert_eq!(SymmetricPolytope::new(5, vec![v(&[1.0; 5])]).unwrap_err(), PolytopeViolation::Dimension(5));
        let err = SymmetricPolytope::new(2, vec![v(&[1.0, 0.0, 0.0])]).unwrap_err();
        assert!(matches!(err, PolytopeViolation::NormalLength { index: 0, .. }));
    }

    #[test]
    fn json_round_trip() {
        let square = SymmetricPolytope::new(
            2,
            vec![v(&[1.0, 0.0]), v(&[-1.0, 0.0]), v(&[0.0, 1.0]), v(&[0.0, -1.0])],
        )
        .unwrap();
        let text = serde_json::to_string(&square).unwrap();
        assert_eq!(text, r#"{"dim":2,"normals":[[1.0,0.0],[-1.0,0.0],[0.0,1.0],[0.0,-1.0]]}"#);
        let spec: PolytopeSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(SymmetricPolytope::try_from(spec).unwrap(), square);
    }
}
