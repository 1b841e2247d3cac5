//! Illumination of centred polytopes.
//!
//! A point `p` outside `K` illuminates a boundary point `q` when the ray from
//! `q` pointing away from `p` enters the interior of `K`. For a polytope this
//! happens exactly when `a_i · p > 1` for every facet `i` tight at `q`: moving
//! from `q` along `q - p` decreases each tight functional iff `p` lies beyond
//! its hyperplane, and the slack facets stay slack for a short step.
//!
//! Checking vertices suffices. Every boundary point `q` lies in the relative
//! interior of some face `F`, and the facets tight at `q` are exactly the
//! facets containing `F`, which are tight at every vertex of `F` too. So a
//! light that illuminates a vertex of `F` satisfies all of `q`'s facet
//! conditions as well.
//!
//! `B(K)` is computed by optimizing over assignments of vertices to lights.
//! For a group of vertices, the cheapest common light solves
//! `min ‖p‖_K  s.t.  a_i · p >= 1` over the union of their tight facets. The
//! closed constraints give the infimum of the strict problem (scale any
//! optimal `p` by `1 + δ`), and the reported witnesses are scaled by
//! `1 + 1e-7` so that they illuminate strictly. Enumerating set partitions
//! rather than covers loses nothing: shrinking a group only removes
//! constraints, so any cover can be turned into a partition of no greater cost.

use serde::Serialize;

use crate::covering::{covering_cost, CoveringCertificate};
use crate::error::{Error, Result};
use crate::geometry::{active_facets, enumerate_vertices, SymmetricPolytope, Vector, VertexList, GEOM_TOL};
use crate::lp::{min_polytope_gauge_subject_to, Constraint, LpOutcome, Relation};

/// Scale applied to closed-constraint optima so witnesses illuminate strictly.
pub const STRICTIFY: f64 = 1.0 + 1e-7;
/// Bell(8): partitions of an 8-vertex polytope.
pub const DEFAULT_PARTITION_CAP: u128 = 4140;
/// Vertex limit for the illumination number search.
pub const MAX_L_VERTICES: usize = 12;
pub const DEFAULT_EPSILON: f64 = 1e-6;

fn check_dim(x: &Vector, body: &SymmetricPolytope) -> Result<()> {
    if x.dim() != body.dim() {
        return Err(Error::DimensionMismatch {
            expected: body.dim(),
            found: x.dim(),
        });
    }
    Ok(())
}

/// Whether `p` illuminates the boundary point `q` of `body`.
pub fn illuminates_point(p: &Vector, q: &Vector, body: &SymmetricPolytope) -> Result<bool> {
    check_dim(p, body)?;
    let active = active_facets(q, body, GEOM_TOL)?;
    Ok(lights_facets(p, &active, body))
}

fn lights_facets(p: &Vector, facets: &[usize], body: &SymmetricPolytope) -> bool {
    facets.iter().all(|&i| body.normals()[i].dot(p) > 1.0 + GEOM_TOL)
}

/// Indices of vertices of `body` not illuminated by any light.
pub fn unlit_vertices(lights: &[Vector], body: &SymmetricPolytope) -> Result<Vec<usize>> {
    for p in lights {
        check_dim(p, body)?;
    }
    let verts = enumerate_vertices(body)?;
    Ok(verts
        .vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| !lights.iter().any(|p| lights_facets(p, &v.active, body)))
        .map(|(k, _)| k)
        .collect())
}

/// Whether the lights illuminate the whole boundary (checked on vertices).
pub fn illuminates_body(lights: &[Vector], body: &SymmetricPolytope) -> Result<bool> {
    if lights.is_empty() {
        return Ok(false);
    }
    Ok(unlit_vertices(lights, body)?.is_empty())
}

/// `(1 - ε) - ‖u - εp‖_K`; positive for all small `ε` when `p` illuminates `u`.
pub fn step_margin(u: &Vector, p: &Vector, body: &SymmetricPolytope, eps: f64) -> Result<f64> {
    check_dim(p, body)?;
    check_dim(u, body)?;
    let gauge = body.gauge(u);
    if (gauge - 1.0).abs() > GEOM_TOL {
        return Err(Error::NotOnBoundary { gauge });
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidEpsilon {
            eps,
            upper: f64::INFINITY,
        });
    }
    Ok((1.0 - eps) - body.gauge(&(u - &p.scaled(eps))))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LightConfiguration {
    pub lights: Vec<Vector>,
    /// `∑_j ‖p_j‖_K`.
    pub cost: f64,
    /// For each vertex of the body, the first light that illuminates it.
    pub assignment: Vec<Option<usize>>,
}

impl LightConfiguration {
    pub fn new(lights: Vec<Vector>, body: &SymmetricPolytope) -> Result<Self> {
        for p in &lights {
            check_dim(p, body)?;
        }
        let verts = enumerate_vertices(body)?;
        let assignment = verts
            .vertices
            .iter()
            .map(|v| lights.iter().position(|p| lights_facets(p, &v.active, body)))
            .collect();
        let cost = lights.iter().map(|p| body.gauge(p)).sum();
        Ok(LightConfiguration {
            lights,
            cost,
            assignment,
        })
    }

    pub fn illuminates(&self) -> bool {
        !self.lights.is_empty() && self.assignment.iter().all(Option::is_some)
    }
}

/// Cheapest light for each group of vertices, memoized by bitmask.
struct BlockCosts<'a> {
    body: &'a SymmetricPolytope,
    verts: &'a VertexList,
    memo: Vec<Option<Option<(f64, Vec<f64>)>>>,
    solves: usize,
}

impl<'a> BlockCosts<'a> {
    fn new(body: &'a SymmetricPolytope, verts: &'a VertexList) -> Self {
        BlockCosts {
            body,
            verts,
            memo: vec![None; 1 << verts.len()],
            solves: 0,
        }
    }

    /// `None` when no single light illuminates every vertex in `mask`.
    fn get(&mut self, mask: usize) -> Result<Option<&(f64, Vec<f64>)>> {
        if self.memo[mask].is_none() {
            let mut facets: Vec<usize> = (0..self.verts.len())
                .filter(|k| mask >> k & 1 == 1)
                .flat_map(|k| self.verts.vertices[k].active.iter().copied())
                .collect();
            facets.sort_unstable();
            facets.dedup();
            let constraints: Vec<Constraint> = facets
                .iter()
                .map(|&i| Constraint::new(self.body.normals()[i].coords().to_vec(), Relation::Ge, 1.0))
                .collect();
            self.solves += 1;
            let entry = match min_polytope_gauge_subject_to(self.body, &constraints)? {
                LpOutcome::Optimal(sol) => Some((sol.value, sol.point)),
                LpOutcome::Infeasible => None,
                LpOutcome::Unbounded => {
                    return Err(Error::Internal("gauge minimization unbounded".into()));
                }
            };
            self.memo[mask] = Some(entry);
        }
        Ok(self.memo[mask].as_ref().and_then(Option::as_ref))
    }

    fn feasible(&mut self, mask: usize) -> Result<bool> {
        Ok(self.get(mask)?.is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IlluminationReport {
    pub body: SymmetricPolytope,
    #[serde(rename = "L")]
    pub illumination_number: usize,
    #[serde(rename = "B")]
    pub bezdek: f64,
    pub witness: LightConfiguration,
    /// Vertex groups of the optimal partition, as vertex indices.
    pub blocks: Vec<Vec<usize>>,
    #[serde(rename = "partitionsExamined")]
    pub partitions_examined: u64,
    /// `witness.cost - B`, introduced by strictification.
    pub slack: f64,
}

/// Bell numbers, saturating.
pub fn bell_number(n: usize) -> u128 {
    // Bell triangle
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty")];
        for &x in &row {
            let last = *next.last().expect("nonempty");
            next.push(last.saturating_add(x));
        }
        row = next;
    }
    row[0]
}

/// Smallest number of lights that illuminate `body`.
pub fn illumination_number(body: &SymmetricPolytope) -> Result<usize> {
    let verts = enumerate_vertices(body)?;
    if verts.len() > MAX_L_VERTICES {
        return Err(Error::PartitionCapExceeded {
            count: verts.len(),
            partitions: bell_number(verts.len()),
            cap: bell_number(MAX_L_VERTICES),
        });
    }
    let mut costs = BlockCosts::new(body, &verts);
    min_feasible_cover(&mut costs)
}

fn min_feasible_cover(costs: &mut BlockCosts<'_>) -> Result<usize> {
    let n = costs.verts.len();
    let full = (1usize << n) - 1;
    // Feasible groups; feasibility is inherited by subgroups, so a minimum
    // cover can always be taken to be a partition.
    let mut feasible = vec![false; full + 1];
    let mut largest = 0;
    for mask in 1..=full {
        if costs.feasible(mask)? {
            feasible[mask] = true;
            largest = largest.max(mask.count_ones() as usize);
        }
    }

    fn search(uncovered: usize, k: usize, largest: usize, feasible: &[bool]) -> bool {
        if uncovered == 0 {
            return true;
        }
        if k == 0 || uncovered.count_ones() as usize > k * largest {
            return false;
        }
        let lowest = uncovered & uncovered.wrapping_neg();
        let rest = uncovered ^ lowest;
        // submasks of `rest`, each joined with the lowest uncovered vertex
        let mut sub = rest;
        loop {
            let group = sub | lowest;
            if feasible[group] && search(uncovered ^ group, k - 1, largest, feasible) {
                return true;
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & rest;
        }
    }

    (1..=n)
        .find(|&k| search(full, k, largest, &feasible))
        .ok_or_else(|| Error::Internal("no illuminating set found".into()))
}

/// Computes `L(K)` and `B(K)` with a witness light configuration.
pub fn bezdek_parameter(body: &SymmetricPolytope, partition_cap: u128) -> Result<IlluminationReport> {
    let verts = enumerate_vertices(body)?;
    let n = verts.len();
    let partitions = bell_number(n);
    if partitions > partition_cap || n >= usize::BITS as usize - 1 {
        return Err(Error::PartitionCapExceeded {
            count: n,
            partitions,
            cap: partition_cap,
        });
    }
    let mut costs = BlockCosts::new(body, &verts);

    struct Search {
        best: Option<(f64, Vec<usize>)>,
        examined: u64,
    }

    // Restricted growth strings in lexicographic order; a block that no light
    // can serve prunes every partition containing a superset of it.
    fn extend(
        vertex: usize,
        n: usize,
        blocks: &mut Vec<usize>,
        costs: &mut BlockCosts<'_>,
        state: &mut Search,
    ) -> Result<()> {
        if vertex == n {
            let mut total = 0.0;
            for &mask in blocks.iter() {
                total += costs.get(mask)?.expect("pruned blocks are feasible").0;
            }
            state.examined += 1;
            let improves = match &state.best {
                None => true,
                Some((best, _)) => total < best - 1e-9,
            };
            if improves {
                state.best = Some((total, blocks.clone()));
            }
            return Ok(());
        }
        let bit = 1usize << vertex;
        for b in 0..blocks.len() {
            let grown = blocks[b] | bit;
            if costs.feasible(grown)? {
                blocks[b] = grown;
                extend(vertex + 1, n, blocks, costs, state)?;
                blocks[b] ^= bit;
            }
        }
        blocks.push(bit);
        extend(vertex + 1, n, blocks, costs, state)?;
        blocks.pop();
        Ok(())
    }

    let mut state = Search {
        best: None,
        examined: 0,
    };
    extend(0, n, &mut Vec::new(), &mut costs, &mut state)?;
    let (bezdek, blocks) = state
        .best
        .ok_or_else(|| Error::Internal("every partition is infeasible".into()))?;

    let mut lights = Vec::with_capacity(blocks.len());
    for &mask in &blocks {
        let (_, point) = costs.get(mask)?.expect("feasible block");
        lights.push(Vector::new(point.clone()).scaled(STRICTIFY));
    }
    let witness = LightConfiguration::new(lights, body)?;
    if !witness.illuminates() {
        return Err(Error::Internal("strictified witness fails to illuminate".into()));
    }
    let illumination_number = min_feasible_cover(&mut costs)?;
    let slack = witness.cost - bezdek;
    Ok(IlluminationReport {
        body: body.clone(),
        illumination_number,
        bezdek,
        witness,
        blocks: blocks
            .iter()
            .map(|&mask| (0..n).filter(|k| mask >> k & 1 == 1).collect())
            .collect(),
        partitions_examined: state.examined,
        slack,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvertedLights {
    #[serde(flatten)]
    pub lights: LightConfiguration,
    pub epsilon: f64,
    /// Lights with gauge at most 1, which cannot illuminate anything and are dropped.
    pub discarded: usize,
    #[serde(rename = "coveringCost")]
    pub covering_cost: f64,
    /// `2 · covering cost`.
    pub bound: f64,
    /// `∑ 2/(1-λ_i-ε) - 2/(1-λ_i)`: how far the finite-ε estimate exceeds `bound`.
    #[serde(rename = "epsilonSlack")]
    pub epsilon_slack: f64,
}

/// Turns a homothetic covering into a light set by taking each homothety
/// centre `p_i = t_i / (1 - λ_i - ε)`.
///
/// Coverage is not re-checked here; pass a verified certificate to get an
/// illuminating set.
pub fn convert_covering_to_lights(
    cert: &CoveringCertificate,
    body: &SymmetricPolytope,
    eps: f64,
) -> Result<ConvertedLights> {
    let upper = cert
        .homothets
        .iter()
        .map(|h| 1.0 - h.ratio)
        .fold(f64::INFINITY, f64::min);
    if !(eps > 0.0 && eps < upper) {
        return Err(Error::InvalidEpsilon { eps, upper });
    }
    let mut lights = Vec::new();
    let mut discarded = 0;
    for h in &cert.homothets {
        check_dim(&h.translate, body)?;
        let p = h.translate.scaled(1.0 / (1.0 - h.ratio - eps));
        if body.gauge(&p) > 1.0 + GEOM_TOL {
            lights.push(p);
        } else {
            discarded += 1;
        }
    }
    let covering = covering_cost(cert);
    let epsilon_slack = cert
        .homothets
        .iter()
        .map(|h| 2.0 / (1.0 - h.ratio - eps) - 2.0 / (1.0 - h.ratio))
        .sum();
    Ok(ConvertedLights {
        lights: LightConfiguration::new(lights, body)?,
        epsilon: eps,
        discarded,
        covering_cost: covering,
        bound: 2.0 * covering,
        epsilon_slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{cube_halfcover, Homothet};
    use crate::geometry::{standard_body, StandardBody};

    fn square() -> SymmetricPolytope {
        standard_body(StandardBody::Cube, 2).unwrap()
    }

    fn v(x: f64, y: f64) -> Vector {
        Vector::from([x, y])
    }

    #[test]
    fn facet_criterion_examples() {
        let k = square();
        assert!(illuminates_point(&v(2.0, 2.0), &v(1.0, 1.0), &k).unwrap());
        assert!(!illuminates_point(&v(2.0, 0.0), &v(1.0, 1.0), &k).unwrap());
        assert!(illuminates_point(&v(1.5, 0.0), &v(1.0, 0.5), &k).unwrap());
        assert!(matches!(
            illuminates_point(&v(2.0, 2.0), &v(0.2, 0.1), &k),
            Err(Error::NotOnBoundary { .. })
        ));
    }

    #[test]
    fn body_illumination_examples() {
        let k = square();
        let corners = vec![v(2.0, 2.0), v(-2.0, 2.0), v(2.0, -2.0), v(-2.0, -2.0)];
        assert!(illuminates_body(&corners, &k).unwrap());
        assert!(!illuminates_body(&[v(2.0, 2.0)], &k).unwrap());
        assert_eq!(unlit_vertices(&[v(2.0, 2.0)], &k).unwrap().len(), 3);
        assert!(!illuminates_body(&[], &k).unwrap());
    }

    #[test]
    fn step_margin_examples() {
        let k = square();
        let m = step_margin(&v(1.0, 1.0), &v(2.0, 2.0), &k, 0.1).unwrap();
        assert!((m - 0.1).abs() < 1e-12);
        let m = step_margin(&v(1.0, 1.0), &v(2.0, 0.0), &k, 0.1).unwrap();
        assert!((m + 0.1).abs() < 1e-12);
        let hex = standard_body(StandardBody::Hexagon, 2).unwrap();
        let u = enumerate_vertices(&hex).unwrap().vertices[3].point.clone();
        let m = step_margin(&u, &u.scaled(2.0), &hex, 0.1).unwrap();
        assert!((m - 0.1).abs() < 1e-12);
        assert!(matches!(
            step_margin(&v(1.0, 1.0), &v(2.0, 2.0), &k, 0.0),
            Err(Error::InvalidEpsilon { .. })
        ));
    }

    #[test]
    fn bell_numbers() {
        let expected = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140, 21147];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell_number(n), b);
        }
    }

    #[test]
    fn square_report() {
        let report = bezdek_parameter(&square(), DEFAULT_PARTITION_CAP).unwrap();
        assert_eq!(report.illumination_number, 4);
        assert!((report.bezdek - 4.0).abs() < 1e-9);
        assert!(report.witness.illuminates());
        assert!(report.slack > 0.0 && report.slack < 1e-6);
    }

    #[test]
    fn partition_cap_is_enforced() {
        let cube4 = standard_body(StandardBody::Cube, 4).unwrap();
        assert!(matches!(
            bezdek_parameter(&cube4, DEFAULT_PARTITION_CAP),
            Err(Error::PartitionCapExceeded { count: 16, .. })
        ));
    }

    #[test]
    fn halfcover_to_lights() {
        let cert = cube_halfcover(2).unwrap();
        let out = convert_covering_to_lights(&cert, &cert.body, 1e-3).unwrap();
        assert_eq!(out.lights.lights.len(), 4);
        let scale = 0.5 / (1.0 - 0.5 - 1e-3);
        for p in &out.lights.lights {
            assert!(p.iter().all(|c| (c.abs() - scale).abs() < 1e-12));
        }
        assert!((out.lights.cost - 4.0 * scale).abs() < 1e-12);
        assert!(out.lights.cost <= out.bound);
        assert!(out.lights.illuminates());
    }

    #[test]
    fn epsilon_range_is_enforced() {
        let cert = cube_halfcover(2).unwrap();
        for eps in [0.5, 0.7, 0.0, -1e-3] {
            assert!(matches!(
                convert_covering_to_lights(&cert, &cert.body, eps),
                Err(Error::InvalidEpsilon { .. })
            ));
        }
    }

    #[test]
    fn bogus_covering_converts_but_does_not_illuminate() {
        let k = square();
        let cert = CoveringCertificate::new(k.clone(), vec![Homothet::new(0.99, v(0.02, 0.02))]).unwrap();
        let out = convert_covering_to_lights(&cert, &k, 1e-3).unwrap();
        assert_eq!(out.lights.lights.len(), 1);
        assert!(!out.lights.illuminates());
    }
}
