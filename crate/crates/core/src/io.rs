//! JSON file formats shared by the command line and the examples.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::covering::{CertificateSpec, CoveringCertificate};
use crate::error::{Error, Result};
use crate::geometry::{standard_body, Gauge, PolytopeSpec, StandardBody, SymmetricPolytope, Vector};

/// `{"dim": d, "points": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    pub dim: usize,
    pub points: Vec<Vector>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vector>) -> Result<Self> {
        let set = PointSet { dim, points };
        set.validate()?;
        Ok(set)
    }

    pub fn validate(&self) -> Result<()> {
        for p in &self.points {
            if p.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: p.dim(),
                });
            }
        }
        Ok(())
    }
}

/// `{"lights": [[...], ...]}`; other fields are ignored on input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LightSet {
    pub lights: Vec<Vector>,
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl InputError {
    pub fn code(&self) -> &'static str {
        match self {
            InputError::Read { .. } => "unreadable-input",
            InputError::Json { .. } => "malformed-json",
            InputError::Invalid(e) => e.code(),
        }
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Read {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| InputError::Json {
        path: path.display().to_string(),
        source,
    })
}

/// A named standard body (`cube`, `crosspolytope`, `hexagon`) or a polytope JSON file.
pub fn load_body(spec: &str, dim: usize) -> Result<SymmetricPolytope, InputError> {
    match spec.parse::<StandardBody>() {
        Ok(name) => Ok(standard_body(name, dim)?),
        Err(_) => {
            let raw: PolytopeSpec = read_json(Path::new(spec))?;
            Ok(SymmetricPolytope::try_from(raw).map_err(Error::from)?)
        }
    }
}

/// Like [`load_body`], also accepting `euclidean`.
pub fn load_gauge(spec: &str, dim: usize) -> Result<Gauge, InputError> {
    if spec.eq_ignore_ascii_case("euclidean") {
        if !(2..=4).contains(&dim) {
            return Err(Error::UnsupportedBody {
                name: spec.into(),
                dim,
            }
            .into());
        }
        return Ok(Gauge::Euclidean(dim));
    }
    load_body(spec, dim).map(Gauge::Polyhedral)
}

pub fn load_certificate(path: &Path) -> Result<CoveringCertificate, InputError> {
    let raw: CertificateSpec = read_json(path)?;
    Ok(CoveringCertificate::try_from(raw)?)
}

pub fn load_points(path: &Path) -> Result<PointSet, InputError> {
    let set: PointSet = read_json(path)?;
    set.validate()?;
    Ok(set)
}

pub fn load_lights(path: &Path) -> Result<LightSet, InputError> {
    read_json(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_set_schema() {
        let set: PointSet = serde_json::from_str(r#"{"dim": 2, "points": [[0, 0], [1, 0.5]]}"#).unwrap();
        assert_eq!(set.points[1], Vector::from([1.0, 0.5]));
        let bad: PointSet = serde_json::from_str(r#"{"dim": 3, "points": [[0, 0]]}"#).unwrap();
        assert!(bad.validate().is_err());
    }

    #[test]
    fn unknown_body_file_is_reported() {
        let err = load_body("/nonexistent/body.json", 2).unwrap_err();
        assert_eq!(err.code(), "unreadable-input");
    }
}
