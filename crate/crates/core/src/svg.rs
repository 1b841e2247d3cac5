//! SVG rendering of planar trees.

use std::fmt::Write;

use crate::geometry::{enumerate_vertices, SymmetricPolytope, Vector};
use crate::steiner::EmbeddedTree;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;

/// Draws the unit ball outline (if given, centred at the origin), the tree
/// edges, terminals as filled dots and Steiner points as hollow dots.
/// Returns `None` unless the tree is planar.
pub fn render_tree(tree: &EmbeddedTree, body: Option<&SymmetricPolytope>) -> Option<String> {
    if tree.terminals.first()?.dim() != 2 {
        return None;
    }
    let outline: Vec<Vector> = match body {
        Some(b) if b.dim() == 2 => {
            let mut pts: Vec<Vector> = enumerate_vertices(b).ok()?.points().cloned().collect();
            pts.sort_by(|p, q| p[1].atan2(p[0]).total_cmp(&q[1].atan2(q[0])));
            pts
        }
        _ => Vec::new(),
    };
    let all = tree.terminals.iter().chain(&tree.steiner).chain(&outline);
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in all {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let map = |p: &Vector| (MARGIN + (p[0] - lo[0]) * scale, SIZE - MARGIN - (p[1] - lo[1]) * scale);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if !outline.is_empty() {
        let pts: Vec<String> = outline
            .iter()
            .map(|p| {
                let (x, y) = map(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            svg,
            r##"<polygon points="{}" fill="none" stroke="#bbbbbb" stroke-dasharray="4 3"/>"##,
            pts.join(" ")
        );
    }
    for &(a, b) in &tree.edges {
        let (x1, y1) = map(tree.position(a));
        let (x2, y2) = map(tree.position(b));
        let _ = writeln!(
            svg,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="2"/>"#
        );
    }
    for p in &tree.steiner {
        let (x, y) = map(p);
        let _ = writeln!(svg, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="white" stroke="black"/>"#);
    }
    for p in &tree.terminals {
        let (x, y) = map(p);
        let _ = writeln!(svg, r##"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="#c0392b"/>"##);
    }
    svg.push_str("</svg>\n");
    Some(svg)
}
