//! Computes the illumination number L(K) and the quantitative illumination
//! parameter B(K) for the standard bodies, with the witness light sets.
//!
//! Run with `cargo run --release --example bezdek_parameter`.

use std::time::Instant;

use mink::geometry::{standard_body, StandardBody};
use mink::illumination::{bezdek_parameter, DEFAULT_PARTITION_CAP};

fn main() -> mink::Result<()> {
    let cases = [
        (StandardBody::Hexagon, 2),
        (StandardBody::Cube, 2),
        (StandardBody::Cube, 3),
        (StandardBody::CrossPolytope, 2),
        (StandardBody::CrossPolytope, 3),
        (StandardBody::CrossPolytope, 4),
    ];
    for (name, dim) in cases {
        let body = standard_body(name, dim)?;
        let start = Instant::now();
        let report = bezdek_parameter(&body, DEFAULT_PARTITION_CAP)?;
        println!(
            "{name:>13} d={dim}: L = {:>2}  B = {:>8.6}  lights = {:>2}  partitions = {:>5}  ({:.1?})",
            report.illumination_number,
            report.bezdek,
            report.witness.lights.len(),
            report.partitions_examined,
            start.elapsed()
        );
        for (light, block) in report.witness.lights.iter().zip(&report.blocks) {
            println!("    light {light} serves vertices {block:?}");
        }
    }
    Ok(())
}
