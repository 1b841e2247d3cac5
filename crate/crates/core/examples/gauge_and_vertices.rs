//! Builds the standard bodies and a custom polygon from facet normals,
//! enumerates their vertices and evaluates the gauge.
//!
//! Run with `cargo run --example gauge_and_vertices`.

use mink::geometry::{enumerate_vertices, gauge_eval, standard_body, Gauge, StandardBody, SymmetricPolytope, Vector};

fn main() -> mink::Result<()> {
    for (name, dim) in [
        (StandardBody::Cube, 3),
        (StandardBody::CrossPolytope, 3),
        (StandardBody::Hexagon, 2),
    ] {
        let body = standard_body(name, dim)?;
        let verts = enumerate_vertices(&body)?;
        println!("{name} d={dim}: {} facets, {} vertices", body.num_facets(), verts.len());
        for v in &verts.vertices {
            println!("    {}  tight facets {:?}", v.point, v.active);
        }
    }

    // A parallelogram given by two pairs of normals.
    let body = SymmetricPolytope::new(
        2,
        vec![
            Vector::from([1.0, 0.0]),
            Vector::from([-1.0, 0.0]),
            Vector::from([0.5, 1.0]),
            Vector::from([-0.5, -1.0]),
        ],
    )?;
    let x = Vector::from([0.6, -0.9]);
    println!("parallelogram gauge of {x}: {}", gauge_eval(&x, &Gauge::Polyhedral(body.clone()))?);
    println!("euclidean norm of {x}: {:.6}", gauge_eval(&x, &Gauge::Euclidean(2))?);

    // Invalid input is rejected with the violated invariant.
    let lopsided = SymmetricPolytope::new(2, vec![Vector::from([1.0, 0.0]), Vector::from([0.0, 1.0])]);
    println!("one-sided normals: {}", lopsided.unwrap_err());
    Ok(())
}
