//! Centred polytopes, their gauges, and boundary structure.

mod bodies;
mod gauge;
pub mod linalg;
mod polytope;
mod vector;
mod vertices;

pub use bodies::{standard_body, StandardBody};
pub use gauge::{gauge_eval, Gauge};
pub use polytope::{PolytopeSpec, PolytopeViolation, SymmetricPolytope};
pub use vector::Vector;
pub(crate) use vertices::for_each_subset;
pub use vertices::{active_facets, enumerate_vertices, Vertex, VertexList};

/// Absolute tolerance for feasibility and equality tests on geometric data.
pub const GEOM_TOL: f64 = 1e-9;
