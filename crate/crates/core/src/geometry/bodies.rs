use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::{SymmetricPolytope, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StandardBody {
    /// `[-1, 1]^d`, the unit ball of the max norm.
    Cube,
    /// `{x : |x_1| + ... + |x_d| <= 1}`.
    CrossPolytope,
    /// Regular hexagon with unit inradius.
    Hexagon,
}

impl FromStr for StandardBody {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cube" | "square" => Ok(StandardBody::Cube),
            "cross" | "crosspolytope" | "cross-polytope" => Ok(StandardBody::CrossPolytope),
            "hexagon" => Ok(StandardBody::Hexagon),
            _ => Err(Error::UnsupportedBody {
                name: s.to_string(),
                dim: 0,
            }),
        }
    }
}

impl fmt::Display for StandardBody {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StandardBody::Cube => "cube",
            StandardBody::CrossPolytope => "crosspolytope",
            StandardBody::Hexagon => "hexagon",
        })
    }
}

pub fn standard_body(body: StandardBody, dim: usize) -> Result<SymmetricPolytope> {
    let unsupported = || Error::UnsupportedBody {
        name: body.to_string(),
        dim,
    };
    if !(2..=4).contains(&dim) {
        return Err(unsupported());
    }
    let normals = match body {
        StandardBody::Cube => (0..dim)
            .flat_map(|axis| [Vector::axis(dim, axis, 1.0), Vector::axis(dim, axis, -1.0)])
            .collect(),
        StandardBody::CrossPolytope => (0..1usize << dim)
            .map(|mask| {
                Vector::new(
                    (0..dim)
                        .map(|j| if mask >> j & 1 == 1 { -1.0 } else { 1.0 })
                        .collect(),
                )
            })
            .collect(),
        StandardBody::Hexagon => {
            if dim != 2 {
                return Err(unsupported());
            }
            (0..6)
                .map(|k| {
                    let angle = PI / 3.0 * k as f64;
                    Vector::new(vec![snap(angle.cos()), snap(angle.sin())])
                })
                .collect()
        }
    };
    SymmetricPolytope::new(dim, normals).map_err(Error::from)
}

// Keeps exact zeros exact so that negated normals match bit for bit.
fn snap(x: f64) -> f64 {
    if x.abs() < 1e-15 {
        0.0
    } else {
        x
    }
}
