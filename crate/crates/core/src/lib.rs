//! Coloring matroid intersections.
//!
//! The central routine, [`intersection::color_intersection`], colors the
//! intersection of one arbitrary matroid (given only by an independence
//! oracle) with any number of partition matroids using at most
//! `1 + Σ (χ(M_i) - 1)` colors. It is built on a generalized Edmonds
//! single-matroid colorer ([`edmonds`]) and drives two applications: rainbow
//! covers of disjoint independent blocks and strong colorings of a graph
//! against a matroid ([`applications`]). [`harness`] holds the file format,
//! generators and brute-force oracles used by the CLI and the tests.

pub mod applications;
pub mod edmonds;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod intersection;
pub mod matroid;
pub mod set;

pub use error::{Error, Result};
pub use set::ElementSet;
