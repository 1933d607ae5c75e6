use serde::Serialize;

use super::{edge_color, matching_to_partition, SimpleGraph};
use crate::edmonds::{chromatic_number, Coloring};
use crate::error::{Error, Result};
use crate::intersection::color_intersection;
use crate::matroid::{Matroid, PartitionStructure};

#[derive(Debug, Clone, Serialize)]
pub struct StrongColoring {
    pub coloring: Coloring,
    /// Edge classes of the `Δ + 1` edge coloring, empty ones dropped.
    pub matchings: Vec<Vec<usize>>,
    pub max_degree: usize,
    pub chi_m: usize,
    /// `Δ + χ(M) + 1`.
    pub bound: usize,
}

/// One partition matroid per nonempty matching of a `Δ + 1` edge coloring.
/// A vertex set is independent in all of them exactly when it is an
/// independent set of `g`.
pub fn strong_partitions(g: &SimpleGraph) -> Result<(Vec<Vec<usize>>, Vec<PartitionStructure>)> {
    let matchings = edge_color(g);
    let partitions = matchings
        .iter()
        .map(|s| matching_to_partition(g, s))
        .collect::<Result<_>>()?;
    Ok((matchings, partitions))
}

/// Colors the vertices of `g` so that each class is an independent set of
/// `g` and independent in `m`, with at most `Δ + χ(M) + 1` colors.
pub fn strong_color<M: Matroid + ?Sized>(g: &SimpleGraph, m: &M) -> Result<StrongColoring> {
    if m.ground_size() != g.vertex_count() {
        return Err(Error::Input(format!(
            "matroid has {} elements, graph has {} vertices",
            m.ground_size(),
            g.vertex_count()
        )));
    }
    let chi_m = chromatic_number(m)?;
    let (matchings, partitions) = strong_partitions(g)?;
    let out = color_intersection(m, &partitions, Some(chi_m))?;
    Ok(StrongColoring {
        coloring: out.coloring,
        matchings,
        max_degree: g.max_degree(),
        chi_m,
        bound: g.max_degree() + chi_m + 1,
    })
}
