//! Solves small linear programs with the dense two-phase simplex, and a
//! minimum-gauge problem of the kind used to price light sources.
//!
//! Run with `cargo run --example linear_program`.

use mink::geometry::{standard_body, StandardBody};
use mink::lp::{min_polytope_gauge_subject_to, Constraint, LinearProgram, Relation};

fn main() -> mink::Result<()> {
    // min -x - y  s.t.  x + 2y <= 4,  3x + y <= 6,  x, y >= 0
    let mut lp = LinearProgram::new(vec![-1.0, -1.0]);
    lp.set_nonnegative(0).set_nonnegative(1);
    lp.add_constraint(vec![1.0, 2.0], Relation::Le, 4.0);
    lp.add_constraint(vec![3.0, 1.0], Relation::Le, 6.0);
    println!("{}", serde_json::to_string(&lp.solve()?).unwrap());

    // Free variables, infeasibility and unboundedness.
    let mut free = LinearProgram::new(vec![1.0]);
    free.add_constraint(vec![1.0], Relation::Ge, -3.0);
    println!("{}", serde_json::to_string(&free.solve()?).unwrap());
    let mut clash = LinearProgram::new(vec![1.0]);
    clash.add_constraint(vec![1.0], Relation::Ge, 2.0);
    clash.add_constraint(vec![1.0], Relation::Le, 1.0);
    println!("{}", serde_json::to_string(&clash.solve()?).unwrap());
    let mut open = LinearProgram::new(vec![-1.0]);
    open.add_constraint(vec![1.0], Relation::Ge, 0.0);
    println!("{}", serde_json::to_string(&open.solve()?).unwrap());

    // Cheapest point of the square beyond the facets x = 1 and y = 1.
    let square = standard_body(StandardBody::Cube, 2)?;
    let outcome = min_polytope_gauge_subject_to(
        &square,
        &[
            Constraint::new(vec![1.0, 0.0], Relation::Ge, 1.0),
            Constraint::new(vec![0.0, 1.0], Relation::Ge, 1.0),
        ],
    )?;
    println!("min ‖p‖ beyond two square facets: {}", serde_json::to_string(&outcome).unwrap());
    Ok(())
}
