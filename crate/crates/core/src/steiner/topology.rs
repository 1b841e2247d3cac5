use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_TERMINALS: usize = 9;

/// A tree over `terminals` terminal labels `0..n` and `steiner` Steiner labels
/// `n..n + steiner`.
///
/// Full topologies are grown by inserting terminal `m` into edge
/// `encoding[m - 3]` of the topology on the first `m` terminals; the encoding
/// therefore identifies the topology and orders them lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinerTopology {
    pub terminals: usize,
    pub steiner: usize,
    pub edges: Vec<(usize, usize)>,
    pub encoding: Vec<usize>,
}

impl SteinerTopology {
    /// The single edge joining two terminals.
    pub fn segment() -> Self {
        SteinerTopology {
            terminals: 2,
            steiner: 0,
            edges: vec![(0, 1)],
            encoding: Vec::new(),
        }
    }

    /// Three terminals around one Steiner point, with labels laid out for a
    /// final terminal count of `total`.
    fn star3(total: usize) -> Self {
        SteinerTopology {
            terminals: 3,
            steiner: 1,
            edges: vec![(0, total), (1, total), (2, total)],
            encoding: Vec::new(),
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.terminals + self.steiner
    }

    /// Label offset of Steiner points (the final terminal count for partial topologies).
    pub fn steiner_base(&self) -> usize {
        self.edges
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .filter(|&l| l >= self.terminals)
            .min()
            .unwrap_or(self.terminals)
    }

    pub fn is_steiner(&self, label: usize) -> bool {
        label >= self.terminals
    }

    /// Inserts the next terminal into `edge`, returning the new Steiner label.
    fn insert(&mut self, edge: usize, base: usize) {
        let terminal = self.terminals;
        let s = base + self.steiner;
        let (a, b) = self.edges[edge];
        self.edges[edge] = (a, s);
        self.edges.push((s, b));
        self.edges.push((terminal, s));
        self.terminals += 1;
        self.steiner += 1;
        self.encoding.push(edge);
    }

    fn remove_last(&mut self) {
        let edge = self.encoding.pop().expect("topology was grown");
        self.edges.pop();
        let (_, b) = self.edges.pop().expect("split edge");
        let (a, _) = self.edges[edge];
        self.edges[edge] = (a, b);
        self.terminals -= 1;
        self.steiner -= 1;
    }

    /// Relabels Steiner points so that labels are `terminals..terminals + steiner`.
    pub fn compacted(&self) -> SteinerTopology {
        let base = self.steiner_base();
        let map = |l: usize| if l >= self.terminals { l - base + self.terminals } else { l };
        SteinerTopology {
            edges: self.edges.iter().map(|&(a, b)| (map(a), map(b))).collect(),
            ..self.clone()
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_nodes()];
        for &(a, b) in &self.compacted().edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }
}

/// Whether to descend below a partial topology during a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Walk {
    Descend,
    Prune,
}

/// Visits every full topology on `n >= 3` terminals, and every partial
/// topology on the way, in lexicographic encoding order. Partial topologies
/// keep the Steiner label layout of the final one. Returning `Walk::Prune`
/// from `visit` skips all completions of that partial topology.
pub fn walk_topologies(n: usize, visit: &mut dyn FnMut(&SteinerTopology) -> Result<Walk>) -> Result<()> {
    if !(3..=MAX_TERMINALS).contains(&n) {
        return Err(Error::TerminalCount(n));
    }
    fn rec(
        top: &mut SteinerTopology,
        n: usize,
        visit: &mut dyn FnMut(&SteinerTopology) -> Result<Walk>,
    ) -> Result<()> {
        if visit(top)? == Walk::Prune || top.terminals == n {
            return Ok(());
        }
        for edge in 0..top.edges.len() {
            top.insert(edge, n);
            rec(top, n, visit)?;
            top.remove_last();
        }
        Ok(())
    }
    rec(&mut SteinerTopology::star3(n), n, visit)
}

/// All `(2n-5)!!` full Steiner topologies on `n` terminals.
pub fn enumerate_full_topologies(n: usize) -> Result<Vec<SteinerTopology>> {
    let mut out = Vec::new();
    walk_topologies(n, &mut |top| {
        if top.terminals == n {
            out.push(top.compacted());
        }
        Ok(Walk::Descend)
    })?;
    Ok(out)
}
