//! Seeded random centred polytopes for property checks.

use std::f64::consts::PI;

use rand::Rng;

use crate::geometry::{SymmetricPolytope, Vector};

/// A centred polygon with `pairs` facet pairs: normal directions at random
/// distinct angles, normal lengths in `[0.6, 1.6]`.
pub fn random_symmetric_polygon<R: Rng + ?Sized>(rng: &mut R, pairs: usize) -> SymmetricPolytope {
    loop {
        let mut angles: Vec<f64> = (0..pairs).map(|_| rng.gen_range(0.0..PI)).collect();
        angles.sort_by(f64::total_cmp);
        let spread = angles.windows(2).all(|w| w[1] - w[0] > 1e-3) && PI - angles[pairs - 1] + angles[0] > 1e-3;
        if !spread {
            continue;
        }
        let mut normals = Vec::with_capacity(2 * pairs);
        for a in angles {
            let r = rng.gen_range(0.6..=1.6);
            let n = Vector::from([r * a.cos(), r * a.sin()]);
            normals.push(-&n);
            normals.push(n);
        }
        if let Ok(p) = SymmetricPolytope::new(2, normals) {
            return p;
        }
    }
}

/// A centred polytope in dimension `dim` with `pairs >= dim` facet pairs in
/// random directions.
pub fn random_symmetric_polytope<R: Rng + ?Sized>(rng: &mut R, dim: usize, pairs: usize) -> SymmetricPolytope {
    if dim == 2 {
        return random_symmetric_polygon(rng, pairs);
    }
    loop {
        let mut normals = Vec::with_capacity(2 * pairs);
        for _ in 0..pairs {
            let dir: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..=1.0)).collect();
            let len = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
            if len < 0.2 {
                continue;
            }
            let r = rng.gen_range(0.6..=1.6) / len;
            let n = Vector::new(dir.into_iter().map(|x| x * r).collect());
            normals.push(-&n);
            normals.push(n);
        }
        if let Ok(p) = SymmetricPolytope::new(dim, normals) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn polygons_have_requested_facets() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for pairs in 2..=8 {
            assert_eq!(random_symmetric_polygon(&mut rng, pairs).num_facets(), 2 * pairs);
        }
        let p = random_symmetric_polytope(&mut rng, 3, 5);
        assert_eq!(p.dim(), 3);
    }
}
