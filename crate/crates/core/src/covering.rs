//! Homothetic covering certificates.
//!
//! A certificate lists homothets `λ_i K + t_i` with `0 < λ_i < 1` that are
//! claimed to cover `K`. Its cost is `∑ (1 - λ_i)^{-1}`. Verification is
//! one-sided: `K` is triangulated and simplices are bisected until every cell
//! fits inside a single homothet. Convexity makes a certified cell genuinely
//! covered, so a `Covered` verdict is never wrong; failure to certify within
//! the depth budget yields `Undetermined` together with the offending cells.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{enumerate_vertices, linalg, standard_body, StandardBody};
use crate::geometry::{PolytopeSpec, SymmetricPolytope, Vector, GEOM_TOL};

pub const DEFAULT_MAX_DEPTH: usize = 12;
/// Witness cells kept in an `Undetermined` verdict.
pub const MAX_WITNESSES: usize = 64;

/// The homothet `ratio · K + translate`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Homothet {
    #[serde(rename = "lambda")]
    pub ratio: f64,
    #[serde(rename = "t")]
    pub translate: Vector,
}

impl Homothet {
    pub fn new(ratio: f64, translate: Vector) -> Self {
        Homothet { ratio, translate }
    }

    pub fn contains(&self, body: &SymmetricPolytope, x: &Vector) -> bool {
        body.gauge(&(x - &self.translate)) <= self.ratio + GEOM_TOL
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cell {
    pub vertices: Vec<Vector>,
    pub centroid: Vector,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Unverified,
    Covered {
        /// Deepest subdivision level that was needed.
        depth: usize,
        cells: usize,
    },
    Undetermined {
        uncertified: usize,
        witnesses: Vec<Cell>,
    },
}

impl Verdict {
    pub fn is_covered(&self) -> bool {
        matches!(self, Verdict::Covered { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoveringCertificate {
    pub body: SymmetricPolytope,
    pub homothets: Vec<Homothet>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// On-disk form: `{"body": {...}, "homothets": [{"lambda": r, "t": [...]}]}`.
/// A stored verdict is ignored on load.
#[derive(Clone, Debug, Deserialize)]
pub struct CertificateSpec {
    pub body: PolytopeSpec,
    pub homothets: Vec<Homothet>,
}

impl TryFrom<CertificateSpec> for CoveringCertificate {
    type Error = Error;

    fn try_from(spec: CertificateSpec) -> Result<Self> {
        let body = SymmetricPolytope::try_from(spec.body)?;
        CoveringCertificate::new(body, spec.homothets)
    }
}

impl CoveringCertificate {
    pub fn new(body: SymmetricPolytope, homothets: Vec<Homothet>) -> Result<Self> {
        for h in &homothets {
            if !(h.ratio > 0.0 && h.ratio < 1.0) {
                return Err(Error::InvalidRatio(h.ratio));
            }
            if h.translate.dim() != body.dim() {
                return Err(Error::DimensionMismatch {
                    expected: body.dim(),
                    found: h.translate.dim(),
                });
            }
            if !h.translate.is_finite() {
                return Err(Error::Internal("non-finite translate".into()));
            }
        }
        Ok(CoveringCertificate {
            body,
            homothets,
            verdict: Verdict::Unverified,
        })
    }

    pub fn cost(&self) -> f64 {
        covering_cost(self)
    }

    /// Runs the verifier and stores its verdict.
    pub fn verify(&mut self, max_depth: usize) -> Result<&Verdict> {
        self.verdict = verify_covering(&self.body, self, max_depth)?;
        Ok(&self.verdict)
    }
}

/// `∑_i (1 - λ_i)^{-1}`.
pub fn covering_cost(cert: &CoveringCertificate) -> f64 {
    cert.homothets.iter().map(|h| 1.0 / (1.0 - h.ratio)).sum()
}

/// The `2^d` half-size cubes `½[-1,1]^d + (±½, ..., ±½)`, verified.
pub fn cube_halfcover(dim: usize) -> Result<CoveringCertificate> {
    if !(2..=4).contains(&dim) {
        return Err(Error::UnsupportedBody {
            name: "cube".into(),
            dim,
        });
    }
    let body = standard_body(StandardBody::Cube, dim)?;
    let homothets = (0..1usize << dim)
        .map(|mask| {
            let t = (0..dim).map(|j| if mask >> j & 1 == 1 { -0.5 } else { 0.5 }).collect();
            Homothet::new(0.5, Vector::new(t))
        })
        .collect();
    let mut cert = CoveringCertificate::new(body, homothets)?;
    cert.verify(DEFAULT_MAX_DEPTH)?;
    Ok(cert)
}

/// One homothet `λK + (1 - λ)v` per vertex `v`, each touching `K` at `v`.
/// Whether they cover depends on `λ`; run the verifier to find out.
pub fn vertex_homothets(body: &SymmetricPolytope, ratio: f64) -> Result<CoveringCertificate> {
    let verts = enumerate_vertices(body)?;
    let homothets = verts
        .points()
        .map(|v| Homothet::new(ratio, v.scaled(1.0 - ratio)))
        .collect();
    CoveringCertificate::new(body.clone(), homothets)
}

/// Decides `K ⊆ ⋃ homothets` soundly by simplex subdivision.
pub fn verify_covering(body: &SymmetricPolytope, cert: &CoveringCertificate, max_depth: usize) -> Result<Verdict> {
    if max_depth < 1 {
        return Err(Error::InvalidDepth(max_depth));
    }
    if cert.body.dim() != body.dim() {
        return Err(Error::DimensionMismatch {
            expected: body.dim(),
            found: cert.body.dim(),
        });
    }
    let mut stack: Vec<(Vec<Vector>, usize)> = triangulate(body)?.into_iter().map(|s| (s, 0)).collect();
    stack.reverse();
    let mut certified = 0;
    let mut deepest = 0;
    let mut uncertified = 0;
    let mut witnesses = Vec::new();
    while let Some((simplex, depth)) = stack.pop() {
        let fits = cert
            .homothets
            .iter()
            .any(|h| simplex.iter().all(|x| h.contains(body, x)));
        if fits {
            certified += 1;
            deepest = deepest.max(depth);
        } else if depth == max_depth {
            uncertified += 1;
            if witnesses.len() < MAX_WITNESSES {
                let centroid = Vector::centroid(&simplex).expect("simplex has vertices");
                witnesses.push(Cell {
                    vertices: simplex,
                    centroid,
                });
            }
        } else {
            let (a, b) = bisect(&simplex, body, &cert.homothets);
            stack.push((b, depth + 1));
            stack.push((a, depth + 1));
        }
    }
    Ok(if uncertified == 0 {
        Verdict::Covered {
            depth: deepest,
            cells: certified,
        }
    } else {
        Verdict::Undetermined {
            uncertified,
            witnesses,
        }
    })
}

/// Splits a simplex at the midpoint of its longest edge. Among edges of equal
/// length, one whose midpoint lies on the boundary of a homothet is
/// preferred, so cells line up with the certificate sooner; otherwise the
/// first such edge in index order is used.
fn bisect(simplex: &[Vector], body: &SymmetricPolytope, homothets: &[Homothet]) -> (Vec<Vector>, Vec<Vector>) {
    let mut longest = 0.0f64;
    for i in 0..simplex.len() {
        for j in i + 1..simplex.len() {
            longest = longest.max(simplex[i].distance2(&simplex[j]));
        }
    }
    let on_boundary = |m: &Vector| {
        homothets
            .iter()
            .any(|h| (body.gauge(&(m - &h.translate)) - h.ratio).abs() <= 1e-12)
    };
    let mut chosen = None;
    'search: for i in 0..simplex.len() {
        for j in i + 1..simplex.len() {
            if simplex[i].distance2(&simplex[j]) < longest * (1.0 - 1e-12) {
                continue;
            }
            let aligned = on_boundary(&simplex[i].midpoint(&simplex[j]));
            if chosen.is_none() || aligned {
                chosen = Some((i, j));
            }
            if aligned {
                break 'search;
            }
        }
    }
    let (i, j) = chosen.expect("simplex has an edge");
    let mid = simplex[i].midpoint(&simplex[j]);
    let mut left = simplex.to_vec();
    left[j] = mid.clone();
    let mut right = simplex.to_vec();
    right[i] = mid;
    (left, right)
}

/// Triangulates `K` as cones from the origin over a pulling triangulation of
/// each facet.
pub fn triangulate(body: &SymmetricPolytope) -> Result<Vec<Vec<Vector>>> {
    let d = body.dim();
    let verts = enumerate_vertices(body)?;
    let points: Vec<&Vector> = verts.points().collect();
    let incident: Vec<Vec<usize>> = (0..body.num_facets())
        .map(|i| {
            verts
                .vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| v.active.contains(&i))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let mut simplices = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for face in &incident {
        if face.len() < d || seen.contains(face) || affine_dim(&points, face) != d - 1 {
            continue;
        }
        seen.push(face.clone());
        for s in pull(face, d - 1, &points, &incident) {
            let mut simplex = vec![Vector::zeros(d)];
            simplex.extend(s.iter().map(|&k| points[k].clone()));
            simplices.push(simplex);
        }
    }
    Ok(simplices)
}

fn affine_dim(points: &[&Vector], face: &[usize]) -> usize {
    let base = points[face[0]];
    let rows: Vec<Vec<f64>> = face[1..].iter().map(|&k| (points[k] - base).into_inner()).collect();
    if rows.is_empty() {
        0
    } else {
        linalg::rank(&rows, GEOM_TOL)
    }
}

/// Pulling triangulation of a `dim`-dimensional face given by its sorted vertex indices.
fn pull(face: &[usize], dim: usize, points: &[&Vector], incident: &[Vec<usize>]) -> Vec<Vec<usize>> {
    if face.len() == dim + 1 {
        return vec![face.to_vec()];
    }
    let apex = face[0];
    let mut subfaces: Vec<Vec<usize>> = Vec::new();
    for facet in incident {
        let sub: Vec<usize> = face.iter().copied().filter(|k| facet.contains(k)).collect();
        if sub.len() < dim || sub.len() == face.len() || sub.contains(&apex) || subfaces.contains(&sub) {
            continue;
        }
        if affine_dim(points, &sub) == dim - 1 {
            subfaces.push(sub);
        }
    }
    subfaces
        .iter()
        .flat_map(|sub| pull(sub, dim - 1, points, incident))
        .map(|mut s| {
            s.insert(0, apex);
            s
        })
        .collect()
}
