//! Optimal embedding of a fixed Steiner topology.
//!
//! Under a polyhedral gauge the problem is a linear program: one free
//! coordinate block per Steiner point and one length variable `t_e` per edge,
//! with `t_e >= a_i · (x_u - x_v)` for every facet normal `a_i`. Minimizing
//! `∑ t_e` gives the exact optimum since the normals are closed under
//! negation. Under the Euclidean norm the objective is smoothed to
//! `√(|x|² + δ²)` and minimized by block coordinate descent (one Weiszfeld
//! step per Steiner point), with `δ` annealed from `1e-3` to `1e-10`.

use serde::Serialize;

use super::topology::SteinerTopology;
use crate::error::{Error, Result};
use crate::geometry::{Gauge, SymmetricPolytope, Vector};
use crate::lp::{LinearProgram, LpOutcome, Relation};

const SMOOTHING_SCHEDULE: [f64; 8] = [1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10];
const RELATIVE_IMPROVEMENT: f64 = 1e-12;
const MAX_SWEEPS: usize = 20_000;

/// A Steiner tree with coordinates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddedTree {
    pub terminals: Vec<Vector>,
    pub steiner: Vec<Vector>,
    /// Edges over labels `0..n` (terminals) and `n..n + k` (Steiner points).
    pub edges: Vec<(usize, usize)>,
    #[serde(rename = "edgeLengths")]
    pub edge_lengths: Vec<f64>,
    pub length: f64,
    /// Insertion encoding of the full topology this tree realizes.
    pub topology: Vec<usize>,
    /// False when the Euclidean descent stopped on its sweep limit.
    pub converged: bool,
}

impl EmbeddedTree {
    pub(crate) fn assemble(
        terminals: Vec<Vector>,
        steiner: Vec<Vector>,
        edges: Vec<(usize, usize)>,
        topology: Vec<usize>,
        gauge: &Gauge,
        converged: bool,
    ) -> Self {
        let mut tree = EmbeddedTree {
            terminals,
            steiner,
            edges,
            edge_lengths: Vec::new(),
            length: 0.0,
            topology,
            converged,
        };
        tree.edge_lengths = tree
            .edges
            .iter()
            .map(|&(a, b)| gauge.distance(tree.position(a), tree.position(b)))
            .collect();
        tree.length = tree.edge_lengths.iter().sum();
        tree
    }

    pub fn position(&self, label: usize) -> &Vector {
        let n = self.terminals.len();
        if label < n {
            &self.terminals[label]
        } else {
            &self.steiner[label - n]
        }
    }

    pub fn is_steiner(&self, label: usize) -> bool {
        label >= self.terminals.len()
    }

    pub fn num_nodes(&self) -> usize {
        self.terminals.len() + self.steiner.len()
    }
}

/// Where a node of the topology sits during optimization.
#[derive(Clone, Debug)]
pub(crate) enum Slot {
    Fixed(Vector),
    /// Index of a free coordinate block.
    Free(usize),
}

/// Optimal embedding of `top` for its terminals (the first `top.terminals`
/// entries of `terminals`).
pub fn minimize_fixed_topology(top: &SteinerTopology, terminals: &[Vector], gauge: &Gauge) -> Result<EmbeddedTree> {
    let top = top.compacted();
    let n = top.terminals;
    if terminals.len() < n {
        return Err(Error::TerminalCount(terminals.len()));
    }
    let terminals = &terminals[..n];
    for t in terminals {
        if t.dim() != gauge.dim() {
            return Err(Error::DimensionMismatch {
                expected: gauge.dim(),
                found: t.dim(),
            });
        }
    }
    match gauge {
        Gauge::Polyhedral(body) => {
            let slots: Vec<Slot> = (0..top.num_nodes())
                .map(|l| if l < n { Slot::Fixed(terminals[l].clone()) } else { Slot::Free(l - n) })
                .collect();
            let steiner = solve_polyhedral(&top.edges, &slots, top.steiner, body)?;
            Ok(EmbeddedTree::assemble(
                terminals.to_vec(),
                steiner,
                top.edges.clone(),
                top.encoding.clone(),
                gauge,
                true,
            ))
        }
        Gauge::Euclidean(_) => {
            let (steiner, converged) = descend_euclidean(&top, terminals);
            Ok(EmbeddedTree::assemble(
                terminals.to_vec(),
                steiner,
                top.edges.clone(),
                top.encoding.clone(),
                gauge,
                converged,
            ))
        }
    }
}

/// Solves the fixed-topology LP where each node is either pinned or bound to
/// one of `blocks` free coordinate blocks. Returns the block coordinates.
pub(crate) fn solve_polyhedral(
    edges: &[(usize, usize)],
    slots: &[Slot],
    blocks: usize,
    body: &SymmetricPolytope,
) -> Result<Vec<Vector>> {
    let d = body.dim();
    let coord_vars = blocks * d;
    // Edges inside one block, or between equal pins, have zero length.
    let live: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| match (&slots[a], &slots[b]) {
            (Slot::Free(x), Slot::Free(y)) => x != y,
            _ => true,
        })
        .collect();
    let num_vars = coord_vars + live.len();
    let mut objective = vec![0.0; num_vars];
    for c in objective.iter_mut().skip(coord_vars) {
        *c = 1.0;
    }
    let mut lp = LinearProgram::new(objective);
    for e in 0..live.len() {
        lp.set_nonnegative(coord_vars + e);
    }
    for (e, &(a, b)) in live.iter().enumerate() {
        for normal in body.normals() {
            // t_e - a·x_a + a·x_b >= 0, pinned parts moved to the right
            let mut row = vec![0.0; num_vars];
            row[coord_vars + e] = 1.0;
            let mut rhs = 0.0;
            for (slot, sign) in [(&slots[a], 1.0), (&slots[b], -1.0)] {
                match slot {
                    Slot::Fixed(p) => rhs += sign * normal.dot(p),
                    Slot::Free(k) => {
                        for j in 0..d {
                            row[k * d + j] -= sign * normal[j];
                        }
                    }
                }
            }
            lp.add_constraint(row, Relation::Ge, rhs);
        }
    }
    match lp.solve()? {
        LpOutcome::Optimal(sol) => Ok((0..blocks)
            .map(|k| Vector::new(sol.point[k * d..(k + 1) * d].to_vec()))
            .collect()),
        other => Err(Error::Internal(format!("fixed-topology program not optimal: {other:?}"))),
    }
}

fn smoothed_length(top: &SteinerTopology, terminals: &[Vector], steiner: &[Vector], delta: f64) -> f64 {
    let n = terminals.len();
    let pos = |l: usize| if l < n { &terminals[l] } else { &steiner[l - n] };
    top.edges
        .iter()
        .map(|&(a, b)| {
            let d = pos(a).distance2(pos(b));
            (d * d + delta * delta).sqrt()
        })
        .sum()
}

fn descend_euclidean(top: &SteinerTopology, terminals: &[Vector]) -> (Vec<Vector>, bool) {
    let n = terminals.len();
    let k = top.steiner;
    if k == 0 {
        return (Vec::new(), true);
    }
    let d = terminals[0].dim();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n + k];
    for &(a, b) in &top.edges {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }

    // Start from the centroid and relax towards neighbor averages so that
    // Steiner points begin apart.
    let centroid = Vector::centroid(terminals).expect("terminals are nonempty");
    let mut steiner = vec![centroid; k];
    for _ in 0..100 {
        for s in 0..k {
            let label = n + s;
            let pts: Vec<&Vector> = neighbors[label]
                .iter()
                .map(|&l| if l < n { &terminals[l] } else { &steiner[l - n] })
                .collect();
            steiner[s] = Vector::centroid(pts).expect("Steiner points have neighbors");
        }
    }

    let mut converged = true;
    for (stage, &delta) in SMOOTHING_SCHEDULE.iter().enumerate() {
        let mut previous = smoothed_length(top, terminals, &steiner, delta);
        let mut settled = false;
        for _ in 0..MAX_SWEEPS {
            for s in 0..k {
                let label = n + s;
                let mut weighted = vec![0.0; d];
                let mut total = 0.0;
                for &l in &neighbors[label] {
                    let y = if l < n { &terminals[l] } else { &steiner[l - n] };
                    let dist = steiner[s].distance2(y);
                    let w = 1.0 / (dist * dist + delta * delta).sqrt();
                    for (acc, c) in weighted.iter_mut().zip(y.iter()) {
                        *acc += w * c;
                    }
                    total += w;
                }
                steiner[s] = Vector::new(weighted.into_iter().map(|c| c / total).collect());
            }
            let current = smoothed_length(top, terminals, &steiner, delta);
            if previous - current <= RELATIVE_IMPROVEMENT * previous {
                settled = true;
                break;
            }
            previous = current;
        }
        if !settled && stage + 1 == SMOOTHING_SCHEDULE.len() {
            converged = false;
        }
    }
    (steiner, converged)
}
