//! Generalized Edmonds coloring of a single matroid.
//!
//! Each iteration rebuilds the exchange digraph for the current coloring and
//! augments along a color-chordless source-sink path, which keeps every color
//! class independent while coloring one more element. Which path is taken is
//! up to a [`PathSelector`].

mod coloring;
mod digraph;
mod path;
mod single;
mod verify;

pub use coloring::Coloring;
pub use digraph::{build_digraph, ExchangeDigraph, Vertex};
pub use path::{
    apply_path, is_color_chordless, AugmentingPath, DfsChordless, PathSelector, SelectorKind,
    ShortestPath,
};
pub(crate) use single::reject_loops;
pub use single::{chromatic_number, color_single, edmonds_step};
pub use verify::{verify_coloring, ClassVerdict, MatroidVerdict, VerifyReport};
