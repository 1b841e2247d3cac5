//! Star tests: a star from the origin to unit vectors that is itself a
//! minimal tree certifies a vertex of that degree. With the origin as a
//! Steiner point instead of a terminal it certifies a Steiner point degree.
//!
//! Run with `cargo run --release --example star_certificates [-- --slow]`;
//! `--slow` adds the 3-cube star on 9 terminals.

use std::f64::consts::PI;
use std::time::Instant;

use mink::geometry::{enumerate_vertices, standard_body, Gauge, StandardBody, Vector};
use mink::steiner::{star_smt_test, steiner_star_test};

fn report(label: &str, gauge: &Gauge, dirs: &[Vector]) -> mink::Result<()> {
    let start = Instant::now();
    let star = star_smt_test(gauge, dirs)?;
    println!(
        "{label:<28} rays = {}  star = {:.7}  smt = {:.7}  minimal star: {:<5}  max degree = {}  topologies = {}  pruned = {}  ({:.1?})",
        star.rays,
        star.star_length,
        star.smt_length,
        star.is_smt,
        star.solution.degrees.max_vertex_degree,
        star.solution.topologies_evaluated,
        star.solution.subtrees_pruned,
        start.elapsed()
    );
    Ok(())
}

fn main() -> mink::Result<()> {
    let slow = std::env::args().any(|a| a == "--slow");
    let hex = standard_body(StandardBody::Hexagon, 2)?;
    let hex_dirs: Vec<Vector> = enumerate_vertices(&hex)?.points().cloned().collect();
    let hex = Gauge::Polyhedral(hex);
    report("hexagon, 6 vertices", &hex, &hex_dirs)?;

    let square = standard_body(StandardBody::Cube, 2)?;
    let corners: Vec<Vector> = enumerate_vertices(&square)?.points().cloned().collect();
    report("square, 4 corners", &Gauge::Polyhedral(square), &corners)?;

    let plus: Vec<Vector> = (0..4)
        .map(|k| {
            let a = PI / 2.0 * k as f64;
            Vector::from([a.cos(), a.sin()])
        })
        .collect();
    report("euclidean, 4 rays at 90deg", &Gauge::Euclidean(2), &plus)?;

    let tripod: Vec<Vector> = (0..3)
        .map(|k| {
            let a = 2.0 * PI / 3.0 * k as f64;
            Vector::from([a.cos(), a.sin()])
        })
        .collect();
    report("euclidean, 3 rays at 120deg", &Gauge::Euclidean(2), &tripod)?;

    // Two antipodal pairs of adjacent hexagon vertices meet at a Steiner point of degree 4.
    let pairs = vec![hex_dirs[0].clone(), hex_dirs[1].clone(), (-&hex_dirs[0]), (-&hex_dirs[1])];
    let star = steiner_star_test(&hex, &pairs)?;
    println!(
        "hexagon Steiner star, 4 rays  star = {:.7}  smt = {:.7}  minimal: {}  max Steiner degree = {}",
        star.star_length, star.smt_length, star.is_smt, star.solution.degrees.max_steiner_degree
    );

    if slow {
        let cube = standard_body(StandardBody::Cube, 3)?;
        let corners: Vec<Vector> = enumerate_vertices(&cube)?.points().cloned().collect();
        report("3-cube, 8 corners", &Gauge::Polyhedral(cube), &corners)?;
    }
    Ok(())
}
