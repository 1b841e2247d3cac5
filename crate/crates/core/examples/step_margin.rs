//! For a vertex `u` and a light `p` illuminating it, a small step from `u`
//! towards `-p` lands strictly inside the shrunken body: the margin
//! `(1 - ε) - ‖u - εp‖_K` becomes positive once `ε` is small enough.
//!
//! Run with `cargo run --example step_margin`.

use mink::geometry::{enumerate_vertices, standard_body, StandardBody, Vector};
use mink::illumination::{illuminates_point, step_margin};

fn main() -> mink::Result<()> {
    let hexagon = standard_body(StandardBody::Hexagon, 2)?;
    let verts = enumerate_vertices(&hexagon)?;
    let u = &verts.vertices[0].point;
    for p in [Vector::from([3.0, 1.0]), Vector::from([1.2, 0.9]), Vector::from([-2.0, 0.0])] {
        println!("u = {u}, p = {p}, illuminates: {}", illuminates_point(&p, u, &hexagon)?);
        for k in [1, 2, 4, 8, 16] {
            let eps = 0.5f64.powi(k);
            println!("    eps = 2^-{k:<2}  margin = {:+.3e}", step_margin(u, &p, &hexagon, eps)?);
        }
    }
    Ok(())
}
