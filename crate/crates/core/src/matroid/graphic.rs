use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Cycle matroid of a multigraph: element `i` is `edges[i]`, and a set of
/// edges is independent when it is a forest. Self-loops are matroid loops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphicStructure {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphicStructure {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        Self { vertices, edges }
    }

    pub(super) fn validate(&self, n: usize) -> Result<()> {
        if self.edges.len() != n {
            return Err(Error::Input(format!(
                "graphic matroid has {} edges, ground set has {n}",
                self.edges.len()
            )));
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u >= self.vertices || v >= self.vertices {
                return Err(Error::Input(format!(
                    "edges[{i}] = ({u}, {v}) names a vertex outside 0..{}",
                    self.vertices
                )));
            }
        }
        Ok(())
    }

    pub(super) fn independent(&self, set: &ElementSet) -> bool {
        if set.len() >= self.vertices.max(1) {
            return false;
        }
        let mut uf = UnionFind::new(self.vertices);
        set.iter().all(|e| {
            let (u, v) = self.edges[e];
            uf.union(u, v)
        })
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle() {
        let g = GraphicStructure::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(g.independent(&ElementSet::from_mask(0b0111)));
        assert!(!g.independent(&ElementSet::from_mask(0b1111)));
    }

    #[test]
    fn self_loop_and_parallel_edges() {
        let g = GraphicStructure::new(2, vec![(0, 0), (0, 1), (1, 0)]);
        assert!(!g.independent(&ElementSet::singleton(0)));
        assert!(g.independent(&ElementSet::singleton(1)));
        assert!(!g.independent(&ElementSet::from_mask(0b110)));
    }
}
