use serde::Serialize;

use super::linalg;
use super::{SymmetricPolytope, Vector, GEOM_TOL};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Vertex {
    pub point: Vector,
    /// Indices of the facets `a_i · x <= 1` that are tight at `point`.
    pub active: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexList {
    pub vertices: Vec<Vertex>,
}

impl VertexList {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &Vector> {
        self.vertices.iter().map(|v| &v.point)
    }
}

fn active_set(body: &SymmetricPolytope, x: &[f64], tol: f64) -> Vec<usize> {
    body.normals()
        .iter()
        .enumerate()
        .filter(|(_, a)| (a.dot(x) - 1.0).abs() <= tol)
        .map(|(i, _)| i)
        .collect()
}

/// Vertices of the polytope, found by intersecting every `d`-subset of facet
/// hyperplanes and keeping the feasible, distinct solutions.
pub fn enumerate_vertices(body: &SymmetricPolytope) -> Result<VertexList> {
    let d = body.dim();
    let normals = body.normals();
    let mut vertices: Vec<Vertex> = Vec::new();
    let ones = vec![1.0; d];
    for_each_subset(normals.len(), d, &mut |subset| {
        let rows: Vec<&[f64]> = subset.iter().map(|&i| normals[i].coords()).collect();
        let Some(x) = linalg::solve(&rows, &ones) else {
            return;
        };
        if normals.iter().any(|a| a.dot(&x) > 1.0 + GEOM_TOL) {
            return;
        }
        let point = Vector::new(x);
        if vertices.iter().any(|v| v.point.max_abs_diff(&point) <= GEOM_TOL) {
            return;
        }
        let active = active_set(body, &point, GEOM_TOL);
        vertices.push(Vertex { point, active });
    });
    if vertices.len() < 2 * d {
        return Err(Error::Internal(format!(
            "degenerate polytope: only {} vertices in dimension {d}",
            vertices.len()
        )));
    }
    for v in &vertices {
        let rows: Vec<Vec<f64>> = v.active.iter().map(|&i| normals[i].coords().to_vec()).collect();
        if linalg::rank(&rows, GEOM_TOL) < d {
            return Err(Error::Internal(format!("vertex {} has a rank-deficient active set", v.point)));
        }
    }
    Ok(VertexList { vertices })
}

/// Facets tight at a boundary point `q`, within `tol`.
pub fn active_facets(q: &Vector, body: &SymmetricPolytope, tol: f64) -> Result<Vec<usize>> {
    if q.dim() != body.dim() {
        return Err(Error::DimensionMismatch {
            expected: body.dim(),
            found: q.dim(),
        });
    }
    let gauge = body.gauge(q);
    if (gauge - 1.0).abs() > tol {
        return Err(Error::NotOnBoundary { gauge });
    }
    let active = active_set(body, q, tol);
    if active.is_empty() {
        return Err(Error::NotOnBoundary { gauge });
    }
    Ok(active)
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if current.len() == k {
            f(current);
            return;
        }
        let remaining = k - current.len();
        for i in start..=n.saturating_sub(remaining) {
            if n < remaining {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, f);
            current.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), f);
    }
}
