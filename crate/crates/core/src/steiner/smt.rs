use serde::Serialize;

use super::fixed::{minimize_fixed_topology, solve_polyhedral, EmbeddedTree, Slot};
use super::topology::{walk_topologies, SteinerTopology, Walk, MAX_TERMINALS};
use crate::error::{Error, Result};
use crate::geometry::{Gauge, SymmetricPolytope, Vector};

pub const COLLAPSE_TOL: f64 = 1e-6;
/// A topology replaces the incumbent only when shorter by more than this.
const IMPROVEMENT_TOL: f64 = 1e-9;
/// Slack allowed when merging Steiner points of an optimal tree.
const CONSOLIDATE_TOL: f64 = 1e-8;

/// Vertices of a tree after contracting edges no longer than `tolerance`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CollapsedVertex {
    /// Original node labels merged into this vertex.
    pub members: Vec<usize>,
    pub position: Vector,
    pub degree: usize,
    /// Contains no terminal.
    pub steiner: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeReport {
    pub tolerance: f64,
    #[serde(rename = "maxVertexDegree")]
    pub max_vertex_degree: usize,
    #[serde(rename = "maxSteinerDegree")]
    pub max_steiner_degree: usize,
    pub vertices: Vec<CollapsedVertex>,
}

impl DegreeReport {
    pub fn new(tree: &EmbeddedTree, tolerance: f64) -> Self {
        let mut parent: Vec<usize> = (0..tree.num_nodes()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut y = x;
            while parent[y] != root {
                let next = parent[y];
                parent[y] = root;
                y = next;
            }
            root
        }
        for (&(a, b), &len) in tree.edges.iter().zip(&tree.edge_lengths) {
            if len <= tolerance {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut vertices: Vec<CollapsedVertex> = Vec::new();
        let mut index_of = vec![usize::MAX; tree.num_nodes()];
        for label in 0..tree.num_nodes() {
            let root = find(&mut parent, label);
            if index_of[root] == usize::MAX {
                index_of[root] = vertices.len();
                vertices.push(CollapsedVertex {
                    members: Vec::new(),
                    position: tree.position(root).clone(),
                    degree: 0,
                    steiner: true,
                });
            }
            let v = &mut vertices[index_of[root]];
            v.members.push(label);
            v.steiner &= tree.is_steiner(label);
        }
        for (&(a, b), &len) in tree.edges.iter().zip(&tree.edge_lengths) {
            if len > tolerance {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                vertices[index_of[ra]].degree += 1;
                vertices[index_of[rb]].degree += 1;
            }
        }
        let max_vertex_degree = vertices.iter().map(|v| v.degree).max().unwrap_or(0);
        let max_steiner_degree = vertices.iter().filter(|v| v.steiner).map(|v| v.degree).max().unwrap_or(0);
        DegreeReport {
            tolerance,
            max_vertex_degree,
            max_steiner_degree,
            vertices,
        }
    }
}

/// Smallest angle, in degrees, between edges at any degree-3 Steiner vertex
/// (Euclidean directions). `None` if there is no such vertex.
pub fn min_steiner_angle(tree: &EmbeddedTree, report: &DegreeReport) -> Option<f64> {
    let mut cluster = vec![0; tree.num_nodes()];
    for (k, v) in report.vertices.iter().enumerate() {
        for &m in &v.members {
            cluster[m] = k;
        }
    }
    let mut best: Option<f64> = None;
    for (k, v) in report.vertices.iter().enumerate() {
        if !v.steiner || v.degree != 3 {
            continue;
        }
        let dirs: Vec<Vector> = tree
            .edges
            .iter()
            .zip(&tree.edge_lengths)
            .filter(|(_, &len)| len > report.tolerance)
            .filter_map(|(&(a, b), _)| match (cluster[a] == k, cluster[b] == k) {
                (true, false) => Some(tree.position(b) - &v.position),
                (false, true) => Some(tree.position(a) - &v.position),
                _ => None,
            })
            .collect();
        for i in 0..dirs.len() {
            for j in i + 1..dirs.len() {
                let cos = dirs[i].dot(&dirs[j]) / (dirs[i].norm2() * dirs[j].norm2());
                let angle = cos.clamp(-1.0, 1.0).acos().to_degrees();
                best = Some(best.map_or(angle, |b: f64| b.min(angle)));
            }
        }
    }
    best
}

/// Length of a minimum spanning tree of the terminals (Prim).
pub fn mst_length(points: &[Vector], gauge: &Gauge) -> f64 {
    let n = points.len();
    if n < 2 {
        return 0.0;
    }
    let mut in_tree = vec![false; n];
    let mut dist = vec![f64::INFINITY; n];
    dist[0] = 0.0;
    let mut total = 0.0;
    for _ in 0..n {
        let u = (0..n)
            .filter(|&i| !in_tree[i])
            .min_by(|&a, &b| dist[a].total_cmp(&dist[b]))
            .expect("vertices remain");
        in_tree[u] = true;
        total += dist[u];
        for v in 0..n {
            if !in_tree[v] {
                dist[v] = dist[v].min(gauge.distance(&points[u], &points[v]));
            }
        }
    }
    total
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SmtSolution {
    pub tree: EmbeddedTree,
    pub degrees: DegreeReport,
    #[serde(rename = "topologiesEvaluated")]
    pub topologies_evaluated: usize,
    #[serde(rename = "subtreesPruned")]
    pub subtrees_pruned: usize,
}

/// Exact Steiner minimal tree under a polyhedral gauge; approximate (to about
/// `1e-6`) under the Euclidean norm.
///
/// Full topologies are searched depth-first in encoding order. The optimum on
/// the first `m` terminals bounds every completion from below, so a partial
/// topology whose optimum already exceeds the incumbent is pruned. Ties keep
/// the first topology found. Degenerate trees appear as full topologies with
/// zero-length edges; under a polyhedral gauge the winning tree is then
/// consolidated by merging Steiner points wherever that keeps it optimal.
pub fn solve_smt(terminals: &[Vector], gauge: &Gauge) -> Result<SmtSolution> {
    let n = terminals.len();
    if !(2..=MAX_TERMINALS).contains(&n) {
        return Err(Error::TerminalCount(n));
    }
    for t in terminals {
        if t.dim() != gauge.dim() {
            return Err(Error::DimensionMismatch {
                expected: gauge.dim(),
                found: t.dim(),
            });
        }
    }
    if n == 2 {
        let tree = minimize_fixed_topology(&SteinerTopology::segment(), terminals, gauge)?;
        let degrees = DegreeReport::new(&tree, COLLAPSE_TOL);
        return Ok(SmtSolution {
            tree,
            degrees,
            topologies_evaluated: 1,
            subtrees_pruned: 0,
        });
    }

    let prune_tol = match gauge {
        Gauge::Polyhedral(_) => IMPROVEMENT_TOL,
        Gauge::Euclidean(_) => 1e-6,
    };
    let mut best: Option<EmbeddedTree> = None;
    let mut evaluated = 0;
    let mut pruned = 0;
    walk_topologies(n, &mut |top| {
        if top.terminals < n {
            if top.terminals < 4 {
                return Ok(Walk::Descend);
            }
            let Some(incumbent) = &best else {
                return Ok(Walk::Descend);
            };
            let bound = minimize_fixed_topology(top, terminals, gauge)?.length;
            if bound > incumbent.length + prune_tol {
                pruned += 1;
                return Ok(Walk::Prune);
            }
            return Ok(Walk::Descend);
        }
        evaluated += 1;
        let tree = minimize_fixed_topology(top, terminals, gauge)?;
        let better = best
            .as_ref()
            .map_or(true, |b| tree.length < b.length - IMPROVEMENT_TOL);
        if better {
            best = Some(tree);
        }
        Ok(Walk::Descend)
    })?;
    let mut tree = best.ok_or_else(|| Error::Internal("no topology evaluated".into()))?;
    if let Gauge::Polyhedral(body) = gauge {
        tree = consolidate(tree, body, gauge)?;
    }
    let degrees = DegreeReport::new(&tree, COLLAPSE_TOL);
    Ok(SmtSolution {
        tree,
        degrees,
        topologies_evaluated: evaluated,
        subtrees_pruned: pruned,
    })
}

/// Greedily forces edges of an optimal tree to zero length, Steiner-Steiner
/// edges first and then Steiner-terminal edges, keeping each merge that does
/// not lengthen the tree.
fn consolidate(tree: EmbeddedTree, body: &SymmetricPolytope, gauge: &Gauge) -> Result<EmbeddedTree> {
    let n = tree.terminals.len();
    let nodes = tree.num_nodes();
    let target = tree.length;
    // group[label]: representative Steiner label, or the terminal it is pinned to
    let mut group: Vec<usize> = (0..nodes).collect();
    let mut current = tree;

    fn resolve(group: &[usize], mut x: usize) -> usize {
        while group[x] != x {
            x = group[x];
        }
        x
    }

    let order: Vec<(usize, usize)> = {
        let edges = &current.edges;
        let ss = edges.iter().copied().filter(|&(a, b)| a >= n && b >= n);
        let st = edges.iter().copied().filter(|&(a, b)| (a >= n) != (b >= n));
        ss.chain(st).collect()
    };
    for (a, b) in order {
        let (ra, rb) = (resolve(&group, a), resolve(&group, b));
        if ra == rb || (ra < n && rb < n) {
            continue;
        }
        let mut trial = group.clone();
        // terminals stay roots so that pinned groups keep their position
        let (root, child) = if ra < n || (rb >= n && ra < rb) { (ra, rb) } else { (rb, ra) };
        trial[child] = root;

        let roots: Vec<usize> = (0..nodes).map(|l| resolve(&trial, l)).collect();
        let mut block_of = vec![usize::MAX; nodes];
        let mut blocks = 0;
        let slots: Vec<Slot> = (0..nodes)
            .map(|l| {
                let r = roots[l];
                if r < n {
                    Slot::Fixed(current.terminals[r].clone())
                } else {
                    if block_of[r] == usize::MAX {
                        block_of[r] = blocks;
                        blocks += 1;
                    }
                    Slot::Free(block_of[r])
                }
            })
            .collect();
        let coords = solve_polyhedral(&current.edges, &slots, blocks, body)?;
        let steiner: Vec<Vector> = (n..nodes)
            .map(|l| match &slots[l] {
                Slot::Fixed(p) => p.clone(),
                Slot::Free(k) => coords[*k].clone(),
            })
            .collect();
        let candidate = EmbeddedTree::assemble(
            current.terminals.clone(),
            steiner,
            current.edges.clone(),
            current.topology.clone(),
            gauge,
            true,
        );
        if candidate.length <= target + CONSOLIDATE_TOL * (1.0 + target) {
            group = trial;
            current = candidate;
        }
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{enumerate_vertices, standard_body, StandardBody};

    #[test]
    fn two_terminals() {
        let g = Gauge::Polyhedral(standard_body(StandardBody::Hexagon, 2).unwrap());
        let pts = vec![Vector::from([0.0, 0.0]), Vector::from([2.0, 0.0])];
        let sol = solve_smt(&pts, &g).unwrap();
        assert!((sol.tree.length - g.distance(&pts[0], &pts[1])).abs() < 1e-12);
        assert_eq!(sol.degrees.max_vertex_degree, 1);
    }

    #[test]
    fn hexagon_star_collapses_to_degree_six() {
        let hex = standard_body(StandardBody::Hexagon, 2).unwrap();
        let mut pts = vec![Vector::zeros(2)];
        pts.extend(enumerate_vertices(&hex).unwrap().points().cloned());
        let sol = solve_smt(&pts, &Gauge::Polyhedral(hex)).unwrap();
        assert!((sol.tree.length - 6.0).abs() < 1e-7, "{}", sol.tree.length);
        assert_eq!(sol.degrees.max_vertex_degree, 6);
    }

    #[test]
    fn euclidean_unit_square() {
        let pts: Vec<Vector> = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]].into_iter().map(Vector::from).collect();
        let sol = solve_smt(&pts, &Gauge::Euclidean(2)).unwrap();
        assert!((sol.tree.length - (1.0 + 3f64.sqrt())).abs() < 1e-4, "{}", sol.tree.length);
        let steiner3 = sol.degrees.vertices.iter().filter(|v| v.steiner && v.degree == 3).count();
        assert_eq!(steiner3, 2);
    }

    #[test]
    fn terminal_count_is_checked() {
        let g = Gauge::Euclidean(2);
        assert!(matches!(solve_smt(&[Vector::zeros(2)], &g), Err(Error::TerminalCount(1))));
        let many = vec![Vector::zeros(2); 10];
        assert!(matches!(solve_smt(&many, &g), Err(Error::TerminalCount(10))));
    }
}
