//! Checks that vertex degrees of minimal trees never exceed B(K), on seeded
//! random terminal sets plus the star through all vertices of K.
//!
//! Run with `cargo run --release --example degree_bound -- [trials] [seed]`.

use std::time::Instant;

use mink::geometry::{standard_body, Gauge, StandardBody};
use mink::steiner::degree_bound_check;

fn main() -> mink::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|a| a.parse().ok()).unwrap_or(50);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(2024);
    let bodies = [
        (StandardBody::Hexagon, 2),
        (StandardBody::Cube, 2),
        (StandardBody::CrossPolytope, 2),
        (StandardBody::CrossPolytope, 3),
    ];
    for (name, dim) in bodies {
        let gauge = Gauge::Polyhedral(standard_body(name, dim)?);
        let start = Instant::now();
        let check = degree_bound_check(&gauge, trials, seed)?;
        println!(
            "{name:>13} d={dim}: B = {:.6}  max vertex degree = {}  max Steiner degree = {}  star certified = {:?}  ({:.1?})",
            check.bezdek.unwrap_or(f64::NAN),
            check.max_vertex_degree,
            check.max_steiner_degree,
            check.star_certified,
            start.elapsed()
        );
    }
    let skipped = degree_bound_check(&Gauge::Euclidean(2), trials, seed)?;
    println!("    euclidean d=2: {}", skipped.skipped.unwrap_or_default());
    Ok(())
}
