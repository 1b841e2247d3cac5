//! Solves Steiner minimal trees in the square, hexagon and Euclidean norms,
//! prints the collapsed vertex degrees and writes SVG drawings to the
//! system temporary directory.
//!
//! Run with `cargo run --release --example steiner_tree`.

use mink::geometry::{standard_body, Gauge, StandardBody, Vector};
use mink::steiner::{min_steiner_angle, mst_length, solve_smt};
use mink::svg::render_tree;

fn main() -> mink::Result<()> {
    let h = 3f64.sqrt() / 2.0;
    let triangle = vec![Vector::from([0.0, 0.0]), Vector::from([1.0, 0.0]), Vector::from([0.5, h])];
    let square = vec![
        Vector::from([0.0, 0.0]),
        Vector::from([1.0, 0.0]),
        Vector::from([1.0, 1.0]),
        Vector::from([0.0, 1.0]),
    ];
    let scattered = vec![
        Vector::from([0.0, 0.0]),
        Vector::from([2.0, 0.5]),
        Vector::from([1.0, 2.0]),
        Vector::from([-1.0, 1.5]),
        Vector::from([0.5, -1.0]),
    ];
    let gauges = [
        ("euclidean", Gauge::Euclidean(2)),
        ("square", Gauge::Polyhedral(standard_body(StandardBody::Cube, 2)?)),
        ("hexagon", Gauge::Polyhedral(standard_body(StandardBody::Hexagon, 2)?)),
    ];
    for (label, gauge) in &gauges {
        for (name, terminals) in [("triangle", &triangle), ("square", &square), ("scattered", &scattered)] {
            let sol = solve_smt(terminals, gauge)?;
            print!(
                "{label:>9} {name:<9}: SMT {:.7}  MST {:.7}  max degree {}  max Steiner degree {}",
                sol.tree.length,
                mst_length(terminals, gauge),
                sol.degrees.max_vertex_degree,
                sol.degrees.max_steiner_degree
            );
            if let Gauge::Euclidean(_) = gauge {
                if let Some(angle) = min_steiner_angle(&sol.tree, &sol.degrees) {
                    print!("  smallest Steiner angle {angle:.3}°");
                }
            }
            println!();
            if let Some(svg) = render_tree(&sol.tree, gauge.polytope()) {
                let path = std::env::temp_dir().join(format!("mink-{label}-{name}.svg"));
                if std::fs::write(&path, svg).is_ok() {
                    println!("           drawing: {}", path.display());
                }
            }
        }
    }
    Ok(())
}
