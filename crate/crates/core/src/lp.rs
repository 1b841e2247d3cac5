//! Dense two-phase simplex with Bland's rule.
//!
//! Problems here are small (tens of variables, at most a few thousand rows),
//! so the solver keeps a full tableau and never factorizes. Variables are free
//! unless marked nonnegative; free variables are split into a difference of
//! two nonnegative columns.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::geometry::{Gauge, SymmetricPolytope};

/// Reduced costs above `-COST_TOL` count as nonnegative.
const COST_TOL: f64 = 1e-9;
/// Ratio-test entries must exceed this to be used as pivots.
const PIVOT_TOL: f64 = 1e-9;
/// Entries below this are numerically zero; entries between this and
/// `PIVOT_TOL` make the ratio test ambiguous and abort the solve.
const PIVOT_FLOOR: f64 = 1e-11;
/// Phase-one objective above this means infeasible.
const INFEASIBILITY_TOL: f64 = 1e-8;
/// Post-solve residual check.
const RESIDUAL_TOL: f64 = 1e-8;
const MAX_PIVOTS: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl Relation {
    fn flipped(self) -> Relation {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Ge => Relation::Le,
            Relation::Eq => Relation::Eq,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

impl Constraint {
    pub fn new(coeffs: Vec<f64>, relation: Relation, rhs: f64) -> Self {
        Constraint { coeffs, relation, rhs }
    }

    /// Signed violation at `x`; zero when satisfied.
    pub fn violation(&self, x: &[f64]) -> f64 {
        let lhs: f64 = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.relation {
            Relation::Le => (lhs - self.rhs).max(0.0),
            Relation::Ge => (self.rhs - lhs).max(0.0),
            Relation::Eq => (lhs - self.rhs).abs(),
        }
    }

    fn magnitude(&self, x: &[f64]) -> f64 {
        self.coeffs.iter().zip(x).map(|(a, b)| (a * b).abs()).sum::<f64>() + self.rhs.abs()
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LpError {
    #[error("ambiguous pivot of magnitude {0:e} in column {1}")]
    Numerical(f64, usize),
    #[error("pivot limit of {0} exceeded")]
    IterationLimit(usize),
    #[error("constraint {row} has {found} coefficients, expected {expected}")]
    Malformed { row: usize, expected: usize, found: usize },
    #[error("non-finite coefficient in constraint {0}")]
    NonFinite(usize),
    #[error("solution violates constraint {row} by {violation:e}")]
    Residual { row: usize, violation: f64 },
}

/// Minimize `objective · x` subject to a list of linear constraints.
#[derive(Clone, Debug, Default)]
pub struct LinearProgram {
    objective: Vec<f64>,
    nonnegative: Vec<bool>,
    constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LpSolution {
    pub value: f64,
    pub point: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(&self) -> Option<&LpSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }

    pub fn value(&self) -> Option<f64> {
        self.optimal().map(|s| s.value)
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible)
    }
}

impl LinearProgram {
    /// A program over `objective.len()` free variables.
    pub fn new(objective: Vec<f64>) -> Self {
        let n = objective.len();
        LinearProgram {
            objective,
            nonnegative: vec![false; n],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn objective(&self) -> &[f64] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_nonnegative(&mut self, var: usize) -> &mut Self {
        self.nonnegative[var] = true;
        self
    }

    pub fn is_nonnegative(&self, var: usize) -> bool {
        self.nonnegative[var]
    }

    pub fn add(&mut self, constraint: Constraint) -> &mut Self {
        self.constraints.push(constraint);
        self
    }

    pub fn add_constraint(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) -> &mut Self {
        self.add(Constraint::new(coeffs, relation, rhs))
    }

    pub fn solve(&self) -> Result<LpOutcome, LpError> {
        let n = self.num_vars();
        for (row, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(LpError::Malformed {
                    row,
                    expected: n,
                    found: c.coeffs.len(),
                });
            }
            if !c.rhs.is_finite() || c.coeffs.iter().any(|x| !x.is_finite()) {
                return Err(LpError::NonFinite(row));
            }
        }
        let mut outcome = Tableau::build(self).run()?;
        if let LpOutcome::Optimal(sol) = &mut outcome {
            sol.value = self.objective.iter().zip(&sol.point).map(|(c, x)| c * x).sum();
            for (row, c) in self.constraints.iter().enumerate() {
                let violation = c.violation(&sol.point);
                if violation > RESIDUAL_TOL * (1.0 + c.magnitude(&sol.point)) {
                    return Err(LpError::Residual { row, violation });
                }
            }
        }
        Ok(outcome)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Column {
    /// Structural variable `var` with the given sign (free variables own two columns).
    Structural { var: usize, sign: i8 },
    Slack,
    Artificial,
}

struct Tableau {
    /// Row-major, `width` entries per row, last entry is the right-hand side.
    cells: Vec<f64>,
    width: usize,
    rows: usize,
    columns: Vec<Column>,
    basis: Vec<usize>,
    /// Reduced costs, last entry holds minus the current objective.
    cost: Vec<f64>,
    objective: Vec<f64>,
    num_vars: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let mut columns = Vec::new();
        let mut var_cols: Vec<Vec<(usize, f64)>> = Vec::with_capacity(lp.num_vars());
        for var in 0..lp.num_vars() {
            let mut cols = vec![(columns.len(), 1.0)];
            columns.push(Column::Structural { var, sign: 1 });
            if !lp.nonnegative[var] {
                cols.push((columns.len(), -1.0));
                columns.push(Column::Structural { var, sign: -1 });
            }
            var_cols.push(cols);
        }

        // Normalize every row to a nonnegative right-hand side.
        let normalized: Vec<(Vec<f64>, Relation, f64)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs < 0.0 {
                    (c.coeffs.iter().map(|x| -x).collect(), c.relation.flipped(), -c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs)
                }
            })
            .collect();

        let rows = normalized.len();
        let mut extra: Vec<(usize, Column, f64)> = Vec::new();
        let mut basis_kind = Vec::with_capacity(rows);
        for (i, (_, rel, _)) in normalized.iter().enumerate() {
            match rel {
                Relation::Le => {
                    extra.push((i, Column::Slack, 1.0));
                    basis_kind.push(extra.len() - 1);
                }
                Relation::Ge => {
                    extra.push((i, Column::Slack, -1.0));
                    extra.push((i, Column::Artificial, 1.0));
                    basis_kind.push(extra.len() - 1);
                }
                Relation::Eq => {
                    extra.push((i, Column::Artificial, 1.0));
                    basis_kind.push(extra.len() - 1);
                }
            }
        }
        let structural = columns.len();
        columns.extend(extra.iter().map(|e| e.1));
        let width = columns.len() + 1;
        let mut cells = vec![0.0; rows * width];
        for (i, (coeffs, _, rhs)) in normalized.iter().enumerate() {
            let row = &mut cells[i * width..(i + 1) * width];
            for (var, &a) in coeffs.iter().enumerate() {
                for &(col, sign) in &var_cols[var] {
                    row[col] = sign * a;
                }
            }
            row[width - 1] = *rhs;
        }
        for (k, (i, _, val)) in extra.iter().enumerate() {
            cells[i * width + structural + k] = *val;
        }
        let basis = basis_kind.into_iter().map(|k| structural + k).collect();

        let objective = columns
            .iter()
            .map(|c| match *c {
                Column::Structural { var, sign } => f64::from(sign) * lp.objective[var],
                _ => 0.0,
            })
            .collect();

        Tableau {
            cells,
            width,
            rows,
            columns,
            basis,
            cost: Vec::new(),
            objective,
            num_vars: lp.num_vars(),
        }
    }

    fn at(&self, row: usize, col: usize) -> f64 {
        self.cells[row * self.width + col]
    }

    fn rhs(&self, row: usize) -> f64 {
        self.at(row, self.width - 1)
    }

    /// Loads reduced costs for the given column costs relative to the current basis.
    fn price(&mut self, costs: &[f64]) {
        let mut cost = costs.to_vec();
        cost.push(0.0);
        for r in 0..self.rows {
            let cb = costs[self.basis[r]];
            if cb != 0.0 {
                let row = &self.cells[r * self.width..(r + 1) * self.width];
                for (c, v) in cost.iter_mut().zip(row) {
                    *c -= cb * v;
                }
            }
        }
        self.cost = cost;
    }

    fn pivot(&mut self, prow: usize, pcol: usize) {
        let w = self.width;
        let p = self.at(prow, pcol);
        for c in 0..w {
            self.cells[prow * w + c] /= p;
        }
        let pivot_row: Vec<f64> = self.cells[prow * w..(prow + 1) * w].to_vec();
        for r in 0..self.rows {
            if r == prow {
                continue;
            }
            let f = self.cells[r * w + pcol];
            if f != 0.0 {
                let row = &mut self.cells[r * w..(r + 1) * w];
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * pv;
                }
                row[pcol] = 0.0;
            }
        }
        let f = self.cost[pcol];
        if f != 0.0 {
            for (x, pv) in self.cost.iter_mut().zip(&pivot_row) {
                *x -= f * pv;
            }
            self.cost[pcol] = 0.0;
        }
        self.basis[prow] = pcol;
    }

    /// Runs Bland-rule pivots until optimal. Returns `false` on unboundedness.
    fn iterate(&mut self, allowed: &dyn Fn(usize) -> bool, pivots: &mut usize) -> Result<bool, LpError> {
        loop {
            let entering = (0..self.width - 1).find(|&j| allowed(j) && self.cost[j] < -COST_TOL);
            let Some(col) = entering else {
                return Ok(true);
            };
            let mut best: Option<(usize, f64)> = None;
            let mut ambiguous = None;
            for r in 0..self.rows {
                let a = self.at(r, col);
                if a > PIVOT_TOL {
                    let ratio = self.rhs(r).max(0.0) / a;
                    best = match best {
                        None => Some((r, ratio)),
                        Some((br, bratio)) => {
                            let tie = (ratio - bratio).abs() <= 1e-12 * (1.0 + bratio.abs());
                            if (!tie && ratio < bratio) || (tie && self.basis[r] < self.basis[br]) {
                                Some((r, ratio))
                            } else {
                                Some((br, bratio))
                            }
                        }
                    };
                } else if a > PIVOT_FLOOR {
                    ambiguous = Some(a);
                }
            }
            match (best, ambiguous) {
                (Some((row, _)), _) => self.pivot(row, col),
                (None, Some(a)) => return Err(LpError::Numerical(a, col)),
                (None, None) => return Ok(false),
            }
            *pivots += 1;
            if *pivots > MAX_PIVOTS {
                return Err(LpError::IterationLimit(MAX_PIVOTS));
            }
        }
    }

    fn run(mut self) -> Result<LpOutcome, LpError> {
        let mut pivots = 0;
        let has_artificial = self.columns.iter().any(|c| *c == Column::Artificial);
        if has_artificial {
            let phase_one: Vec<f64> = self
                .columns
                .iter()
                .map(|c| if *c == Column::Artificial { 1.0 } else { 0.0 })
                .collect();
            self.price(&phase_one);
            // Phase one is bounded below by zero.
            self.iterate(&|_| true, &mut pivots)?;
            let infeasibility = -self.cost[self.width - 1];
            if infeasibility > INFEASIBILITY_TOL {
                return Ok(LpOutcome::Infeasible);
            }
            self.evict_artificials();
        }

        let objective = self.objective.clone();
        self.price(&objective);
        let columns = self.columns.clone();
        let bounded = self.iterate(&|j| columns[j] != Column::Artificial, &mut pivots)?;
        if !bounded {
            return Ok(LpOutcome::Unbounded);
        }

        let mut point = vec![0.0; self.num_vars];
        for r in 0..self.rows {
            if let Column::Structural { var, sign } = self.columns[self.basis[r]] {
                point[var] += f64::from(sign) * self.rhs(r);
            }
        }
        Ok(LpOutcome::Optimal(LpSolution { value: 0.0, point }))
    }

    /// Pivots zero-valued artificial variables out of the basis, dropping
    /// redundant rows that cannot be pivoted.
    fn evict_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows {
            if self.columns[self.basis[r]] != Column::Artificial {
                r += 1;
                continue;
            }
            let replacement = (0..self.width - 1)
                .filter(|&j| self.columns[j] != Column::Artificial)
                .max_by(|&a, &b| self.at(r, a).abs().total_cmp(&self.at(r, b).abs()))
                .filter(|&j| self.at(r, j).abs() > PIVOT_TOL);
            match replacement {
                Some(col) => {
                    self.pivot(r, col);
                    r += 1;
                }
                None => self.drop_row(r),
            }
        }
    }

    fn drop_row(&mut self, r: usize) {
        let w = self.width;
        self.cells.drain(r * w..(r + 1) * w);
        self.basis.remove(r);
        self.rows -= 1;
    }
}

/// Minimizes `‖p‖_K` over points `p` satisfying the extra `constraints`,
/// using the facet form of the gauge: minimize `t` with `a_i · p <= t`.
///
/// The returned solution's `point` is `p` and its `value` is `‖p‖_K`.
pub fn min_gauge_subject_to(gauge: &Gauge, constraints: &[Constraint]) -> Result<LpOutcome> {
    let body = gauge.polytope().ok_or(Error::NotPolyhedral)?;
    min_polytope_gauge_subject_to(body, constraints)
}

pub fn min_polytope_gauge_subject_to(body: &SymmetricPolytope, constraints: &[Constraint]) -> Result<LpOutcome> {
    let d = body.dim();
    for c in constraints {
        if c.coeffs.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: c.coeffs.len(),
            });
        }
    }
    let mut objective = vec![0.0; d + 1];
    objective[d] = 1.0;
    let mut lp = LinearProgram::new(objective);
    lp.set_nonnegative(d);
    for a in body.normals() {
        let mut row = a.coords().to_vec();
        row.push(-1.0);
        lp.add_constraint(row, Relation::Le, 0.0);
    }
    for c in constraints {
        let mut row = c.coeffs.clone();
        row.push(0.0);
        lp.add_constraint(row, c.relation, c.rhs);
    }
    Ok(match lp.solve()? {
        LpOutcome::Optimal(mut sol) => {
            sol.point.truncate(d);
            LpOutcome::Optimal(sol)
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{standard_body, StandardBody};

    #[test]
    fn single_lower_bound() {
        let mut lp = LinearProgram::new(vec![1.0]);
        lp.add_constraint(vec![1.0], Relation::Ge, 3.0);
        assert_eq!(lp.solve().unwrap().value(), Some(3.0));
    }

    #[test]
    fn contradictory_bounds_are_infeasible() {
        let mut lp = LinearProgram::new(vec![0.0]);
        lp.add_constraint(vec![1.0], Relation::Ge, 1.0);
        lp.add_constraint(vec![-1.0], Relation::Ge, 1.0);
        assert!(lp.solve().unwrap().is_infeasible());
    }

    #[test]
    fn epigraph_of_max() {
        // variables (t, p1, p2)
        let mut lp = LinearProgram::new(vec![1.0, 0.0, 0.0]);
        lp.add_constraint(vec![1.0, -1.0, 0.0], Relation::Ge, 0.0);
        lp.add_constraint(vec![1.0, 0.0, -1.0], Relation::Ge, 0.0);
        lp.add_constraint(vec![0.0, 1.0, 0.0], Relation::Ge, 1.0);
        lp.add_constraint(vec![0.0, 0.0, 1.0], Relation::Ge, 1.0);
        let value = lp.solve().unwrap().value().unwrap();
        assert!((value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unbounded_direction() {
        let mut lp = LinearProgram::new(vec![-1.0, 0.0]);
        lp.add_constraint(vec![0.0, 1.0], Relation::Le, 1.0);
        assert_eq!(lp.solve().unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn equality_rows_and_redundancy() {
        let mut lp = LinearProgram::new(vec![1.0, 1.0]);
        lp.add_constraint(vec![1.0, 1.0], Relation::Eq, 2.0);
        lp.add_constraint(vec![2.0, 2.0], Relation::Eq, 4.0);
        lp.add_constraint(vec![1.0, 0.0], Relation::Ge, 0.5);
        let value = lp.solve().unwrap().value().unwrap();
        assert!((value - 2.0).abs() < 1e-12);
    }

    #[test]
    fn nonnegative_variables_are_respected() {
        let mut lp = LinearProgram::new(vec![1.0]);
        lp.set_nonnegative(0);
        lp.add_constraint(vec![1.0], Relation::Ge, -5.0);
        assert_eq!(lp.solve().unwrap().value(), Some(0.0));
    }

    #[test]
    fn malformed_rows_are_rejected() {
        let mut lp = LinearProgram::new(vec![1.0, 2.0]);
        lp.add_constraint(vec![1.0], Relation::Ge, 0.0);
        assert!(matches!(lp.solve(), Err(LpError::Malformed { row: 0, .. })));
        let mut lp = LinearProgram::new(vec![1.0]);
        lp.add_constraint(vec![f64::NAN], Relation::Ge, 0.0);
        assert_eq!(lp.solve(), Err(LpError::NonFinite(0)));
    }

    #[test]
    fn square_gauge_beyond_two_facets() {
        let square = Gauge::Polyhedral(standard_body(StandardBody::Cube, 2).unwrap());
        let out = min_gauge_subject_to(
            &square,
            &[
                Constraint::new(vec![1.0, 0.0], Relation::Ge, 1.0),
                Constraint::new(vec![0.0, 1.0], Relation::Ge, 1.0),
            ],
        )
        .unwrap();
        let sol = out.optimal().unwrap();
        assert!((sol.value - 1.0).abs() < 1e-12);
        assert!((sol.point[0] - 1.0).abs() < 1e-9 && (sol.point[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn square_gauge_opposite_facets_infeasible() {
        let square = Gauge::Polyhedral(standard_body(StandardBody::Cube, 2).unwrap());
        let out = min_gauge_subject_to(
            &square,
            &[
                Constraint::new(vec![1.0, 0.0], Relation::Ge, 1.0),
                Constraint::new(vec![-1.0, 0.0], Relation::Ge, 1.0),
            ],
        )
        .unwrap();
        assert!(out.is_infeasible());
    }

    #[test]
    fn unconstrained_minimum_is_origin() {
        let hex = Gauge::Polyhedral(standard_body(StandardBody::Hexagon, 2).unwrap());
        let sol = min_gauge_subject_to(&hex, &[]).unwrap().optimal().cloned().unwrap();
        assert_eq!(sol.value, 0.0);
        assert_eq!(sol.point, vec![0.0, 0.0]);
    }

    #[test]
    fn euclidean_gauge_is_rejected() {
        assert!(matches!(min_gauge_subject_to(&Gauge::Euclidean(2), &[]), Err(Error::NotPolyhedral)));
    }
}
