//! Recomputes the reference values: B and L for the standard bodies and the
//! certified lower bounds on Steiner point and vertex degrees. Pass `--slow`
//! to include the 3-cube (several minutes).
//!
//! Run with `cargo run --release --example reference_table`.

use mink::table::reproduce_table;

fn main() -> mink::Result<()> {
    let slow = std::env::args().any(|a| a == "--slow");
    let report = reproduce_table(slow)?;
    for row in &report.parameters {
        println!(
            "{}({} d={}) = {:<8} expected {:<4} {}",
            row.quantity,
            row.body,
            row.dim,
            row.computed,
            row.expected,
            if row.matches { "ok" } else { "MISMATCH" }
        );
    }
    println!();
    println!("{:<16} {:>3} {:>3}  {:>5}  {:>10} {:>10}", "body", "s", "v", "B", "2^d", "2(2^d-1)");
    for row in &report.degrees {
        let b = row.bezdek.map(|b| format!("{b:.3}")).unwrap_or_else(|| "-".into());
        println!(
            "{:<16} {:>3} {:>3}  {:>5}  {:>10} {:>10}  {}",
            format!("{} d={}", row.body, row.dim),
            row.s,
            row.v,
            b,
            row.conjectured_s,
            row.conjectured_v,
            if row.matches { "ok" } else { "MISMATCH" }
        );
    }
    Ok(())
}
