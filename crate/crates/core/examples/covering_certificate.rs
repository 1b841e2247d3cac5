//! Builds covering certificates, verifies them by subdivision and reports
//! their cost: the cube half-covers, a vertex-anchored covering of the
//! hexagon, and an incomplete covering that comes back undetermined.
//!
//! Run with `cargo run --release --example covering_certificate`.

use mink::covering::{cube_halfcover, vertex_homothets, CoveringCertificate, Homothet, Verdict, DEFAULT_MAX_DEPTH};
use mink::geometry::{standard_body, StandardBody, Vector};

fn describe(verdict: &Verdict) -> String {
    match verdict {
        Verdict::Covered { depth, cells } => format!("covered ({cells} cells, depth {depth})"),
        Verdict::Undetermined { uncertified, witnesses } => format!(
            "undetermined: {uncertified} cells uncertified, e.g. near {}",
            witnesses.first().map(|c| c.centroid.to_string()).unwrap_or_default()
        ),
        Verdict::Unverified => "unverified".into(),
    }
}

fn main() -> mink::Result<()> {
    for dim in 2..=4 {
        let cert = cube_halfcover(dim)?;
        println!("cube d={dim}: {} homothets, cost {}, {}", cert.homothets.len(), cert.cost(), describe(&cert.verdict));
    }

    let hexagon = standard_body(StandardBody::Hexagon, 2)?;
    for ratio in [0.5, 0.6, 0.7] {
        let mut cert = vertex_homothets(&hexagon, ratio)?;
        let verdict = cert.verify(DEFAULT_MAX_DEPTH)?.clone();
        println!("hexagon, 6 homothets of ratio {ratio}: cost {:.4}, {}", cert.cost(), describe(&verdict));
    }

    // Three of the four quadrant squares leave a corner exposed.
    let square = standard_body(StandardBody::Cube, 2)?;
    let partial = [[0.5, 0.5], [-0.5, 0.5], [0.5, -0.5]]
        .into_iter()
        .map(|t| Homothet::new(0.5, Vector::from(t)))
        .collect();
    let mut cert = CoveringCertificate::new(square, partial)?;
    let verdict = cert.verify(6)?.clone();
    println!("square, three quadrants: {}", describe(&verdict));
    Ok(())
}
