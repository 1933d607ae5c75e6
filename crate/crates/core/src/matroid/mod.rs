//! Matroids given by independence oracles.
//!
//! Every algorithm in this crate talks to a matroid only through
//! [`Matroid::independent`]. The concrete families live in submodules and are
//! wrapped by [`MatroidOracle`], which pairs a [`GroundSet`] with one
//! [`Structure`].

mod explicit;
mod graphic;
mod laminar;
mod ops;
mod partition;
mod transversal;

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

pub use explicit::ExplicitStructure;
pub use graphic::{GraphicStructure, UnionFind};
pub use laminar::LaminarStructure;
pub(crate) use ops::circuit_unchecked;
pub use ops::{
    axiom_check, find_circuit, is_independent, loops, max_independent_subset, partition_chromatic,
    rank, AxiomReport, AxiomViolation, Circuit, DEFAULT_AXIOM_BOUND,
};
pub use partition::PartitionStructure;
pub use transversal::TransversalStructure;

/// An independence oracle over the ground set `0..ground_size()`.
pub trait Matroid {
    fn ground_size(&self) -> usize;

    /// Whether `set` is independent. Every element of `set` must be below
    /// `ground_size()`; use [`is_independent`] for a range-checked query.
    fn independent(&self, set: &ElementSet) -> bool;
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn independent(&self, set: &ElementSet) -> bool {
        (**self).independent(set)
    }
}

impl<M: Matroid + ?Sized> Matroid for Box<M> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn independent(&self, set: &ElementSet) -> bool {
        (**self).independent(set)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundSet {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(n: usize) -> Self {
        Self { n, labels: None }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        Self {
            n: labels.len(),
            labels: Some(labels),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match &self.labels {
            Some(l) if l.len() != self.n => Err(Error::Input(format!(
                "ground set has {} elements but {} labels",
                self.n,
                l.len()
            ))),
            _ => Ok(()),
        }
    }

    /// Display name of element `x`.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }
}

/// Kind-specific data of a matroid. Serialized as `{"kind": ..., "data": ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "lowercase")]
pub enum Structure {
    Uniform { rank: usize },
    Partition(PartitionStructure),
    Laminar(LaminarStructure),
    Graphic(GraphicStructure),
    Transversal(TransversalStructure),
    Explicit(ExplicitStructure),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Uniform { .. } => "uniform",
            Structure::Partition(_) => "partition",
            Structure::Laminar(_) => "laminar",
            Structure::Graphic(_) => "graphic",
            Structure::Transversal(_) => "transversal",
            Structure::Explicit(_) => "explicit",
        }
    }
}

/// A validated matroid: a ground set plus one concrete structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidOracle {
    ground: GroundSet,
    structure: Structure,
}

impl MatroidOracle {
    pub fn new(ground: GroundSet, structure: Structure) -> Result<Self> {
        ground.validate()?;
        let n = ground.n;
        match &structure {
            Structure::Uniform { .. } => {}
            Structure::Partition(p) => p.validate_ground(n)?,
            Structure::Laminar(l) => l.validate(n)?,
            Structure::Graphic(g) => g.validate(n)?,
            Structure::Transversal(t) => t.validate(n)?,
            Structure::Explicit(e) => e.validate(n)?,
        }
        Ok(Self { ground, structure })
    }

    pub fn uniform(n: usize, rank: usize) -> Self {
        Self {
            ground: GroundSet::new(n),
            structure: Structure::Uniform { rank },
        }
    }

    pub fn partition(p: PartitionStructure) -> Self {
        Self {
            ground: GroundSet::new(p.ground_size()),
            structure: Structure::Partition(p),
        }
    }

    pub fn laminar(n: usize, l: LaminarStructure) -> Result<Self> {
        Self::new(GroundSet::new(n), Structure::Laminar(l))
    }

    pub fn graphic(g: GraphicStructure) -> Result<Self> {
        Self::new(GroundSet::new(g.edges.len()), Structure::Graphic(g))
    }

    pub fn transversal(t: TransversalStructure) -> Result<Self> {
        Self::new(GroundSet::new(t.adjacency.len()), Structure::Transversal(t))
    }

    pub fn explicit(n: usize, e: ExplicitStructure) -> Result<Self> {
        Self::new(GroundSet::new(n), Structure::Explicit(e))
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn kind(&self) -> &'static str {
        self.structure.kind()
    }

    pub fn as_partition(&self) -> Option<&PartitionStructure> {
        match &self.structure {
            Structure::Partition(p) => Some(p),
            _ => None,
        }
    }
}

impl Matroid for MatroidOracle {
    fn ground_size(&self) -> usize {
        self.ground.n
    }

    fn independent(&self, set: &ElementSet) -> bool {
        match &self.structure {
            Structure::Uniform { rank } => set.len() <= *rank,
            Structure::Partition(p) => p.independent(set),
            Structure::Laminar(l) => l.independent(set),
            Structure::Graphic(g) => g.independent(set),
            Structure::Transversal(t) => t.independent(set),
            Structure::Explicit(e) => e.independent(set),
        }
    }
}

/// Wraps an oracle and counts independence queries.
#[derive(Debug)]
pub struct Counted<M> {
    inner: M,
    calls: AtomicU64,
}

impl<M: Matroid> Counted<M> {
    pub fn new(inner: M) -> Self {
        Self {
            inner,
            calls: AtomicU64::new(0),
        }
    }

    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }
}

impl<M: Matroid> Matroid for Counted<M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn independent(&self, set: &ElementSet) -> bool {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.inner.independent(set)
    }
}

/// The restriction of a matroid to a subset of its elements, re-indexed
/// densely: local element `i` is `elements[i]` of the inner matroid.
#[derive(Debug, Clone)]
pub struct Restriction<M> {
    inner: M,
    elements: Vec<usize>,
}

impl<M: Matroid> Restriction<M> {
    pub fn new(inner: M, elements: Vec<usize>) -> Result<Self> {
        let n = inner.ground_size();
        if let Some(&bad) = elements.iter().find(|&&x| x >= n) {
            return Err(Error::OutOfRange { element: bad, n });
        }
        Ok(Self { inner, elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Maps a local set to the inner matroid's indices.
    pub fn lift(&self, set: &ElementSet) -> ElementSet {
        set.iter().map(|i| self.elements[i]).collect()
    }
}

impl<M: Matroid> Matroid for Restriction<M> {
    fn ground_size(&self) -> usize {
        self.elements.len()
    }

    fn independent(&self, set: &ElementSet) -> bool {
        self.inner.independent(&self.lift(set))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_serializes_with_kind_and_data() {
        let s = Structure::Uniform { rank: 2 };
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"kind":"uniform","data":{"rank":2}}"#);
        let back: Structure = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn labels_must_match_size() {
        let g = GroundSet {
            n: 3,
            labels: Some(vec!["a".into()]),
        };
        assert!(MatroidOracle::new(g, Structure::Uniform { rank: 1 }).is_err());
    }

    #[test]
    fn counted_counts() {
        let m = Counted::new(MatroidOracle::uniform(4, 2));
        assert!(m.independent(&ElementSet::from_mask(0b11)));
        assert!(!m.independent(&ElementSet::from_mask(0b111)));
        assert_eq!(m.calls(), 2);
    }

    #[test]
    fn restriction_reindexes() {
        let m = MatroidOracle::partition(
            PartitionStructure::new(vec![vec![0, 1], vec![2, 3]], None).unwrap(),
        );
        let r = Restriction::new(&m, vec![1, 3, 0]).unwrap();
        assert_eq!(r.ground_size(), 3);
        assert!(r.independent(&ElementSet::from_mask(0b011)));
        assert!(!r.independent(&ElementSet::from_mask(0b101)));
    }
}
