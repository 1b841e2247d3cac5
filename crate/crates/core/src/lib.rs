//! Quantitative illumination and homothetic covering of centred polytopes,
//! and exact Steiner minimal trees in polyhedral norms.
//!
//! The crate is organized bottom-up:
//!
//! - [`geometry`]: centred polytopes in facet form, gauges, vertex enumeration.
//! - [`lp`]: a dense two-phase simplex used by everything above it.
//! - [`illumination`]: illumination tests, the illumination number `L(K)` and
//!   the quantitative parameter `B(K)`, light sets from coverings, and the
//!   small-step margin for illuminating directions.
//! - [`covering`]: homothetic covering certificates, their cost, and a sound
//!   subdivision verifier.
//! - [`steiner`]: full-topology enumeration, fixed-topology minimization,
//!   exact minimal trees, vertex degree statistics, and the star tests that
//!   relate degrees to illumination.
//! - [`cli`]: the command-line front end shared by the `mink` binary.

pub mod error;
pub mod geometry;
pub mod cli;
pub mod covering;
pub mod illumination;
pub mod lp;
pub mod io;
pub mod random;
pub mod steiner;
pub mod svg;
pub mod table;

pub use error::{Error, Result};
