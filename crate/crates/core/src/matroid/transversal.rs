use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Transversal matroid of a bipartite graph: element `x` may be matched to any
/// right node in `adjacency[x]`. A set is independent when it can be matched
/// into distinct right nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalStructure {
    pub right: usize,
    pub adjacency: Vec<Vec<usize>>,
}

impl TransversalStructure {
    pub fn new(right: usize, adjacency: Vec<Vec<usize>>) -> Self {
        Self { right, adjacency }
    }

    pub(super) fn validate(&self, n: usize) -> Result<()> {
        if self.adjacency.len() != n {
            return Err(Error::Input(format!(
                "transversal matroid lists {} elements, ground set has {n}",
                self.adjacency.len()
            )));
        }
        for (x, adj) in self.adjacency.iter().enumerate() {
            if let Some(&r) = adj.iter().find(|&&r| r >= self.right) {
                return Err(Error::Input(format!(
                    "adjacency[{x}] names right node {r}, only {} exist",
                    self.right
                )));
            }
        }
        Ok(())
    }

    /// Kuhn's augmenting-path matcher, run from scratch on every query.
    pub(super) fn independent(&self, set: &ElementSet) -> bool {
        if set.len() > self.right {
            return false;
        }
        let mut owner = vec![usize::MAX; self.right];
        let mut seen = vec![false; self.right];
        for x in set {
            seen.iter_mut().for_each(|s| *s = false);
            if !self.augment(x, &mut owner, &mut seen) {
                return false;
            }
        }
        true
    }

    fn augment(&self, x: usize, owner: &mut [usize], seen: &mut [bool]) -> bool {
        for &r in &self.adjacency[x] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r] == usize::MAX || self.augment(owner[r], owner, seen) {
                owner[r] = x;
                return true;
            }
        }
        false
    }
}
