//! Steiner minimal trees under polyhedral and Euclidean norms.

mod fixed;
mod harness;
mod smt;
mod topology;

pub use fixed::{minimize_fixed_topology, EmbeddedTree};
pub use harness::{
    degree_bound_check, degree_bound_check_capped, degrees_at, random_instances, star_smt_test, steiner_star_test, star_local_move,
    DegreeCheck, InstanceDegrees, LocalMove, StarTest, MAX_STAR_RAYS, STAR_TOL,
};
pub use smt::{min_steiner_angle, mst_length, solve_smt, CollapsedVertex, DegreeReport, SmtSolution, COLLAPSE_TOL};
pub use topology::{enumerate_full_topologies, walk_topologies, SteinerTopology, Walk, MAX_TERMINALS};
