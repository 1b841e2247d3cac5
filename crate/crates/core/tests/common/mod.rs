//! Independent oracles shared by the integration and acceptance tests. None
//! of them calls the library's simplex or topology search.

#![allow(dead_code)]

use mink::geometry::{SymmetricPolytope, Vector};

/// Vertices of a centred polygon from all pairwise facet-line intersections.
pub fn polygon_vertices(body: &SymmetricPolytope) -> Vec<[f64; 2]> {
    let n = body.normals();
    let mut out: Vec<[f64; 2]> = Vec::new();
    for i in 0..n.len() {
        for j in i + 1..n.len() {
            let (a, b) = (&n[i], &n[j]);
            let det = a[0] * b[1] - a[1] * b[0];
            if det.abs() < 1e-12 {
                continue;
            }
            let x = [(b[1] - a[1]) / det, (a[0] - b[0]) / det];
            if n.iter().all(|c| c[0] * x[0] + c[1] * x[1] <= 1.0 + 1e-9)
                && !out.iter().any(|y| (y[0] - x[0]).abs() < 1e-9 && (y[1] - x[1]).abs() < 1e-9)
            {
                out.push(x);
            }
        }
    }
    out
}

fn solve3(m: [[f64; 3]; 3], r: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(m);
    if d.abs() < 1e-12 {
        return None;
    }
    let mut x = [0.0; 3];
    for (k, xk) in x.iter_mut().enumerate() {
        let mut mk = m;
        for row in 0..3 {
            mk[row][k] = r[row];
        }
        *xk = det(mk) / d;
    }
    Some(x)
}

/// `min ‖p‖_K  s.t.  a_j · p >= 1 (j in required)` for a polygon, by
/// enumerating the vertices of the polyhedron in `(p, t)`. `None` when infeasible.
pub fn polygon_light_cost(body: &SymmetricPolytope, required: &[usize]) -> Option<f64> {
    // rows: coeffs over (p1, p2, t) with relation `row · z <= rhs`
    let mut rows: Vec<([f64; 3], f64)> = body.normals().iter().map(|a| ([a[0], a[1], -1.0], 0.0)).collect();
    rows.extend(required.iter().map(|&j| {
        let a = &body.normals()[j];
        ([-a[0], -a[1], 0.0], -1.0)
    }));
    let mut best: Option<f64> = None;
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            for k in j + 1..rows.len() {
                let Some(z) = solve3([rows[i].0, rows[j].0, rows[k].0], [rows[i].1, rows[j].1, rows[k].1]) else {
                    continue;
                };
                let feasible = rows
                    .iter()
                    .all(|(c, r)| c[0] * z[0] + c[1] * z[1] + c[2] * z[2] <= r + 1e-9 * (1.0 + r.abs()));
                if feasible && best.map_or(true, |b| z[2] < b) {
                    best = Some(z[2]);
                }
            }
        }
    }
    best
}

/// Tight facets at each polygon vertex.
pub fn polygon_active(body: &SymmetricPolytope, v: [f64; 2]) -> Vec<usize> {
    body.normals()
        .iter()
        .enumerate()
        .filter(|(_, a)| (a[0] * v[0] + a[1] * v[1] - 1.0).abs() <= 1e-9)
        .map(|(i, _)| i)
        .collect()
}

/// Minimum total light cost for a polygon by dynamic programming over vertex
/// subsets, with block costs from [`polygon_light_cost`].
pub fn polygon_bezdek_oracle(body: &SymmetricPolytope) -> f64 {
    let verts = polygon_vertices(body);
    let m = verts.len();
    let active: Vec<Vec<usize>> = verts.iter().map(|&v| polygon_active(body, v)).collect();
    let full = (1usize << m) - 1;
    let mut block = vec![None; full + 1];
    for (mask, slot) in block.iter_mut().enumerate().skip(1) {
        let mut req: Vec<usize> = (0..m).filter(|k| mask >> k & 1 == 1).flat_map(|k| active[k].clone()).collect();
        req.sort_unstable();
        req.dedup();
        *slot = polygon_light_cost(body, &req);
    }
    let mut best = vec![f64::INFINITY; full + 1];
    best[0] = 0.0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let mut sub = mask;
        while sub > 0 {
            if sub & low != 0 {
                if let Some(c) = block[sub] {
                    best[mask] = best[mask].min(c + best[mask ^ sub]);
                }
            }
            sub = (sub - 1) & mask;
        }
    }
    best[full]
}

/// Prim's algorithm over an arbitrary distance.
pub fn mst(points: &[[f64; 2]], dist: impl Fn([f64; 2], [f64; 2]) -> f64) -> f64 {
    let n = points.len();
    if n < 2 {
        return 0.0;
    }
    let mut in_tree = vec![false; n];
    let mut reach = vec![f64::INFINITY; n];
    reach[0] = 0.0;
    let mut total = 0.0;
    for _ in 0..n {
        let k = (0..n)
            .filter(|&k| !in_tree[k])
            .min_by(|&a, &b| reach[a].total_cmp(&reach[b]))
            .unwrap();
        in_tree[k] = true;
        total += reach[k];
        for j in 0..n {
            if !in_tree[j] {
                reach[j] = reach[j].min(dist(points[k], points[j]));
            }
        }
    }
    total
}

pub fn linf(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).abs().max((a[1] - b[1]).abs())
}

pub fn l1(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).abs() + (a[1] - b[1]).abs()
}

pub fn l2(a: [f64; 2], b: [f64; 2]) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

/// Exact max-norm Steiner tree length: rotating by 45° and halving turns the
/// max norm into the rectilinear one, whose minimal trees use Hanan grid
/// points only, at most `n - 2` of them.
pub fn linf_smt_hanan(terminals: &[[f64; 2]]) -> f64 {
    let rotated: Vec<[f64; 2]> = terminals.iter().map(|p| [(p[0] + p[1]) / 2.0, (p[0] - p[1]) / 2.0]).collect();
    let mut hanan = Vec::new();
    for a in &rotated {
        for b in &rotated {
            let h = [a[0], b[1]];
            if !rotated.iter().any(|t| l1(*t, h) < 1e-12) && !hanan.iter().any(|x| l1(*x, h) < 1e-12) {
                hanan.push(h);
            }
        }
    }
    let extra = terminals.len().saturating_sub(2);
    let mut best = mst(&rotated, l1);
    let mut chosen = Vec::new();
    fn rec(start: usize, left: usize, hanan: &[[f64; 2]], base: &[[f64; 2]], chosen: &mut Vec<[f64; 2]>, best: &mut f64) {
        if !chosen.is_empty() {
            let mut pts = base.to_vec();
            pts.extend(chosen.iter().copied());
            *best = best.min(mst(&pts, l1));
        }
        if left == 0 {
            return;
        }
        for k in start..hanan.len() {
            chosen.push(hanan[k]);
            rec(k + 1, left - 1, hanan, base, chosen, best);
            chosen.pop();
        }
    }
    rec(0, extra, &hanan, &rotated, &mut chosen, &mut best);
    best
}

/// Compass search with axis and diagonal moves, halving the step down to `tol`.
pub fn refine(start: &[f64], f: &dyn Fn(&[f64]) -> f64, step: f64, tol: f64) -> (Vec<f64>, f64) {
    let dim = start.len();
    let mut dirs: Vec<Vec<f64>> = Vec::new();
    for i in 0..dim {
        for s in [1.0, -1.0] {
            let mut d = vec![0.0; dim];
            d[i] = s;
            dirs.push(d);
        }
    }
    for i in 0..dim {
        for j in i + 1..dim {
            for (si, sj) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                let mut d = vec![0.0; dim];
                d[i] = si;
                d[j] = sj;
                dirs.push(d);
            }
        }
    }
    let mut x = start.to_vec();
    let mut fx = f(&x);
    let mut h = step;
    while h > tol {
        let mut moved = false;
        for d in &dirs {
            let y: Vec<f64> = x.iter().zip(d).map(|(a, b)| a + h * b).collect();
            let fy = f(&y);
            if fy < fx - 1e-15 {
                x = y;
                fx = fy;
                moved = true;
            }
        }
        if !moved {
            h /= 2.0;
        }
    }
    (x, fx)
}

/// Three-terminal Steiner length: grid over the single Steiner point on
/// `[lo, hi]²` with spacing `step`, then local refinement.
pub fn grid_smt3(terminals: &[[f64; 2]; 3], dist: fn([f64; 2], [f64; 2]) -> f64, lo: f64, hi: f64, step: f64) -> f64 {
    let f = |s: &[f64]| terminals.iter().map(|t| dist([s[0], s[1]], *t)).sum::<f64>();
    let steps = ((hi - lo) / step).round() as usize;
    let mut best = (vec![0.0, 0.0], f64::INFINITY);
    for i in 0..=steps {
        for j in 0..=steps {
            let s = [lo + i as f64 * step, lo + j as f64 * step];
            let v = f(&s);
            if v < best.1 {
                best = (s.to_vec(), v);
            }
        }
    }
    refine(&best.0, &f, step, 1e-10).1
}

/// Four-terminal Steiner length: for each of the three pairings, grid over
/// both Steiner points on `[lo, hi]⁴` then refine; also the spanning trees.
pub fn grid_smt4(terminals: &[[f64; 2]; 4], dist: fn([f64; 2], [f64; 2]) -> f64, lo: f64, hi: f64, step: f64) -> f64 {
    let pairings = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))];
    let mut overall = mst(terminals, dist);
    let steps = ((hi - lo) / step).round() as usize;
    let axis: Vec<f64> = (0..=steps).map(|i| lo + i as f64 * step).collect();
    for ((a, b), (c, d)) in pairings {
        let t = terminals;
        let f = |z: &[f64]| {
            let s1 = [z[0], z[1]];
            let s2 = [z[2], z[3]];
            dist(s1, t[a]) + dist(s1, t[b]) + dist(s1, s2) + dist(s2, t[c]) + dist(s2, t[d])
        };
        let mut best = (vec![0.0; 4], f64::INFINITY);
        for &x1 in &axis {
            for &y1 in &axis {
                let s1 = [x1, y1];
                let left = dist(s1, t[a]) + dist(s1, t[b]);
                if left >= best.1 {
                    continue;
                }
                for &x2 in &axis {
                    for &y2 in &axis {
                        let s2 = [x2, y2];
                        let v = left + dist(s1, s2) + dist(s2, t[c]) + dist(s2, t[d]);
                        if v < best.1 {
                            best = (vec![x1, y1, x2, y2], v);
                        }
                    }
                }
            }
        }
        overall = overall.min(refine(&best.0, &f, step, 1e-10).1);
    }
    overall
}

pub fn to_vectors(points: &[[f64; 2]]) -> Vec<Vector> {
    points.iter().map(|p| Vector::from(*p)).collect()
}
