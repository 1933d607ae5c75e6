//! Small hand-worked instances used by tests, docs and the shipped JSON
//! fixtures. Elements `x1..x6` are indices `0..6`.

use crate::edmonds::Coloring;
use crate::matroid::{GroundSet, LaminarStructure, MatroidOracle, PartitionStructure, Structure};

fn labels() -> Vec<String> {
    (1..=6).map(|i| format!("x{i}")).collect()
}

/// Laminar matroid on six elements: `{x5,x6}` capacity 1, `{x3..x6}`
/// capacity 2, everything capacity 3. Its chromatic number is 2.
pub fn laminar_six() -> MatroidOracle {
    MatroidOracle::new(
        GroundSet::with_labels(labels()),
        Structure::Laminar(LaminarStructure::new(
            vec![vec![4, 5], vec![2, 3, 4, 5], vec![0, 1, 2, 3, 4, 5]],
            vec![1, 2, 3],
        )),
    )
    .expect("fixture is valid")
}

/// Partial 2-coloring of [`laminar_six`]: `S1 = {x3,x5}`, `S2 = {x1,x2,x4}`,
/// `x6` uncolored.
pub fn laminar_six_coloring() -> Coloring {
    Coloring::from_colors(vec![2, 2, 1, 2, 1, 0], 2)
}

/// Partition matroid with parts `{x1,x6}`, `{x2,x3}`, `{x4,x5}`, capacity 1.
pub fn pairs_six() -> PartitionStructure {
    PartitionStructure::new(vec![vec![0, 5], vec![1, 2], vec![3, 4]], None)
        .expect("fixture is valid")
}

pub fn pairs_six_oracle() -> MatroidOracle {
    MatroidOracle::new(
        GroundSet::with_labels(labels()),
        Structure::Partition(pairs_six()),
    )
    .expect("fixture is valid")
}

/// Partial 3-coloring feasible in both [`laminar_six`] and [`pairs_six`]:
/// `S1 = {x5}`, `S2 = {x3,x4}`, `S3 = {x1,x2}`, `x6` uncolored.
pub fn intersection_six_coloring() -> Coloring {
    Coloring::from_colors(vec![3, 3, 2, 2, 1, 0], 3)
}
