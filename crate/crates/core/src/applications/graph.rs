use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::PartitionStructure;
use crate::set::ElementSet;

/// Undirected graph without self-loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for SimpleGraph {
    type Error = Error;

    fn try_from(raw: RawGraph) -> Result<Self> {
        Self::new(raw.vertices, raw.edges)
    }
}

impl From<SimpleGraph> for RawGraph {
    fn from(g: SimpleGraph) -> Self {
        RawGraph {
            vertices: g.n,
            edges: g.edges,
        }
    }
}

impl SimpleGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edges[{i}] = ({u}, {v}) leaves the vertex range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("edges[{i}] is a self-loop at {u}")));
            }
            if let Some(&(_, j)) = adjacency[u].iter().find(|&&(w, _)| w == v) {
                return Err(Error::Input(format!(
                    "edges[{j}] and edges[{i}] both join {u} and {v}"
                )));
            }
            adjacency[u].push((v, i));
            adjacency[v].push((u, i));
        }
        Ok(Self {
            n,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbor, edge index)` pairs at `v`, in edge order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// No edge of the graph has both endpoints in `set`.
    pub fn is_independent(&self, set: &ElementSet) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| !(set.contains(u) && set.contains(v)))
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }
}

/// Proper edge coloring with at most `Δ + 1` colors by fan rotation and
/// alternating-path inversion. Returns the nonempty color classes as sorted
/// lists of edge indices.
pub fn edge_color(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let k = g.max_degree() + 1;
    let mut color: Vec<Option<usize>> = vec![None; g.edges.len()];
    // at[v][c]: the edge at v colored c
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; k]; g.n];
    let free = |at: &[Vec<Option<usize>>], v: usize| {
        at[v]
            .iter()
            .position(Option::is_none)
            .expect("degree below Δ + 1")
    };

    for e0 in 0..g.edges.len() {
        let (x, f) = g.edges[e0];

        // Maximal fan (vertex, edge) of x starting at f.
        let mut fan = vec![(f, e0)];
        loop {
            let last = fan.last().unwrap().0;
            let next = g.neighbors(x).iter().copied().find(|&(w, e)| {
                color[e].is_some_and(|col| at[last][col].is_none())
                    && !fan.iter().any(|&(u, _)| u == w)
            });
            match next {
                Some(step) => fan.push(step),
                None => break,
            }
        }

        let c = free(&at, x);
        let d = free(&at, fan.last().unwrap().0);

        // Invert the path from x alternating d, c, d, ..
        let mut path = Vec::new();
        let (mut v, mut want) = (x, d);
        while let Some(e) = at[v][want] {
            path.push(e);
            v = g.other(e, v);
            want = if want == d { c } else { d };
        }
        for &e in &path {
            let (a, b) = g.edges[e];
            let old = color[e].unwrap();
            at[a][old] = None;
            at[b][old] = None;
        }
        for &e in &path {
            let (a, b) = g.edges[e];
            let new = if color[e] == Some(d) { c } else { d };
            color[e] = Some(new);
            at[a][new] = Some(e);
            at[b][new] = Some(e);
        }

        // First fan vertex with d free; rotate the prefix up to it.
        let w = fan
            .iter()
            .position(|&(u, _)| at[u][d].is_none())
            .expect("some fan vertex has d free after inversion");
        let mut shifted: Vec<(usize, usize)> = (0..w)
            .map(|i| (fan[i].1, color[fan[i + 1].1].unwrap()))
            .collect();
        shifted.push((fan[w].1, d));
        for &(e, _) in &shifted {
            if let Some(old) = color[e] {
                let (a, b) = g.edges[e];
                at[a][old] = None;
                at[b][old] = None;
            }
        }
        for (e, col) in shifted {
            let (a, b) = g.edges[e];
            debug_assert!(at[a][col].is_none() && at[b][col].is_none());
            color[e] = Some(col);
            at[a][col] = Some(e);
            at[b][col] = Some(e);
        }
    }

    let mut classes = vec![Vec::new(); k];
    for (e, col) in color.into_iter().enumerate() {
        classes[col.expect("every edge colored")].push(e);
    }
    classes.retain(|s| !s.is_empty());
    classes
}

/// Partition matroid over the vertices: a part `{v, w}` per matched edge,
/// singletons elsewhere, all with capacity 1.
pub fn matching_to_partition(g: &SimpleGraph, matching: &[usize]) -> Result<PartitionStructure> {
    let mut mate = vec![None; g.n];
    for &e in matching {
        let &(u, v) = g.edges.get(e).ok_or_else(|| {
            Error::Input(format!(
                "matching names edge {e}, graph has {}",
                g.edges.len()
            ))
        })?;
        for w in [u, v] {
            if mate[w].is_some() {
                return Err(Error::Input(format!(
                    "vertex {w} is covered twice by the matching"
                )));
            }
        }
        mate[u] = Some(v);
        mate[v] = Some(u);
    }
    let parts = (0..g.n)
        .filter_map(|v| match mate[v] {
            Some(w) if w < v => None,
            Some(w) => Some(vec![v, w]),
            None => Some(vec![v]),
        })
        .collect();
    PartitionStructure::new(parts, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::partition_chromatic;
    use proptest::prelude::*;

    fn check_proper(g: &SimpleGraph, classes: &[Vec<usize>]) {
        let mut seen = vec![false; g.edges().len()];
        for class in classes {
            let mut touched = vec![false; g.vertex_count()];
            for &e in class {
                assert!(!seen[e]);
                seen[e] = true;
                let (u, v) = g.edges()[e];
                assert!(
                    !touched[u] && !touched[v],
                    "class {class:?} is not a matching"
                );
                touched[u] = true;
                touched[v] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        assert!(classes.len() <= g.max_degree() + 1);
    }

    #[test]
    fn small_graphs() {
        let k3 = SimpleGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = edge_color(&k3);
        check_proper(&k3, &c);
        assert_eq!(c.len(), 3);

        let c4 = SimpleGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = edge_color(&c4);
        check_proper(&c4, &c);
        assert!(c.len() <= 3);

        let star = SimpleGraph::new(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c = edge_color(&star);
        check_proper(&star, &c);
        assert_eq!(c.len(), 4);

        assert!(edge_color(&SimpleGraph::new(3, vec![]).unwrap()).is_empty());
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(SimpleGraph::new(2, vec![(1, 1)]).is_err());
        assert!(SimpleGraph::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn matchings_become_pair_partitions() {
        let c4 = SimpleGraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = matching_to_partition(&c4, &[0, 2]).unwrap();
        assert_eq!(p.parts(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(partition_chromatic(&p), 2);

        let p = matching_to_partition(&c4, &[]).unwrap();
        assert_eq!(p.num_parts(), 4);
        assert_eq!(partition_chromatic(&p), 1);

        assert!(matching_to_partition(&c4, &[0, 1]).is_err());
    }

    fn graphs() -> impl Strategy<Value = SimpleGraph> {
        (1usize..14).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            edges.push((u, v));
                        }
                        i += 1;
                    }
                }
                SimpleGraph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn edge_coloring_is_proper(g in graphs()) {
            check_proper(&g, &edge_color(&g));
        }
    }
}
