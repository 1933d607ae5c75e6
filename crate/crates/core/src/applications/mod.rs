//! Rainbow covers of disjoint independent blocks, and vertex colorings that
//! are simultaneously proper for a graph and independent in a matroid.
//!
//! Both reduce to [`color_intersection`](crate::intersection::color_intersection)
//! with partition matroids: one whose parts are the blocks, or one per
//! matching of a `Δ + 1` edge coloring of the graph.

mod graph;
mod rainbow;
mod strong;

pub use graph::{edge_color, matching_to_partition, SimpleGraph};
pub use rainbow::{rainbow_cover, RainbowCover, RainbowInstance};
pub use strong::{strong_color, strong_partitions, StrongColoring};
