//! Turns verified coverings into light sets and compares the light cost with
//! twice the covering cost, on the cube half-covers and on random polygons.
//!
//! Run with `cargo run --release --example covering_to_lights`.

use mink::covering::{cube_halfcover, vertex_homothets, DEFAULT_MAX_DEPTH};
use mink::illumination::{convert_covering_to_lights, illuminates_body, DEFAULT_EPSILON};
use mink::random::random_symmetric_polygon;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> mink::Result<()> {
    for dim in 2..=4 {
        let cert = cube_halfcover(dim)?;
        let lights = convert_covering_to_lights(&cert, &cert.body, DEFAULT_EPSILON)?;
        println!(
            "cube d={dim}: covering cost {}, light cost {:.6} <= {}  illuminates: {}",
            lights.covering_cost,
            lights.lights.cost,
            lights.bound,
            illuminates_body(&lights.lights.lights, &cert.body)?
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for pairs in 4..=8 {
        let body = random_symmetric_polygon(&mut rng, pairs);
        let mut ratio = 0.55;
        let mut cert = vertex_homothets(&body, ratio)?;
        while !cert.verify(DEFAULT_MAX_DEPTH)?.is_covered() {
            ratio += 0.05;
            cert = vertex_homothets(&body, ratio)?;
        }
        let lights = convert_covering_to_lights(&cert, &body, DEFAULT_EPSILON)?;
        println!(
            "random {pairs}-pair polygon, ratio {ratio:.2}: covering cost {:.4}, light cost {:.4}, illuminates: {}",
            lights.covering_cost,
            lights.lights.cost,
            illuminates_body(&lights.lights.lights, &body)?
        );
    }
    Ok(())
}
