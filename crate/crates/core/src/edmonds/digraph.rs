use std::fmt;

use serde::Serialize;

use super::Coloring;
use crate::error::{Error, Result};
use crate::matroid::{circuit_unchecked, Matroid};

/// A vertex of the exchange digraph: one source per color (1-based) or one
/// vertex per ground-set element. Color nodes order before elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Vertex {
    Color(usize),
    Element(usize),
}

impl Vertex {
    pub fn element(self) -> Option<usize> {
        match self {
            Vertex::Element(x) => Some(x),
            Vertex::Color(_) => None,
        }
    }

    pub fn is_color(self) -> bool {
        matches!(self, Vertex::Color(_))
    }

    /// Color of the vertex under `c`: a color node carries its own color.
    pub fn color_in(self, c: &Coloring) -> usize {
        match self {
            Vertex::Color(i) => i,
            Vertex::Element(x) => c.color(x),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Color(i) => write!(f, "c{i}"),
            Vertex::Element(x) => write!(f, "e{x}"),
        }
    }
}

/// The Edmonds exchange digraph of a matroid under a coloring.
///
/// `A_i` holds `(i, x)` for every `x ∉ S_i` with `S_i + x` independent, and
/// `(y, x)` for `y ∈ S_i` whenever `S_i + x` is dependent but `S_i - y + x`
/// is independent. Every arc therefore carries the color of its source.
#[derive(Debug, Clone)]
pub struct ExchangeDigraph {
    coloring: Coloring,
    /// Sources of arcs entering each element, sorted.
    in_arcs: Vec<Vec<Vertex>>,
    /// Targets of arcs leaving color node `i` (at index `i - 1`), sorted.
    out_of_color: Vec<Vec<usize>>,
    /// Targets of arcs leaving each element, sorted.
    out_of_element: Vec<Vec<usize>>,
}

/// Builds the digraph with one circuit computation per (color, outside
/// element) pair. Fails if some color class is dependent.
pub fn build_digraph<M: Matroid + ?Sized>(m: &M, c: &Coloring) -> Result<ExchangeDigraph> {
    let n = m.ground_size();
    if c.len() != n {
        return Err(Error::Contract(format!(
            "coloring covers {} elements, matroid has {n}",
            c.len()
        )));
    }
    let mut in_arcs = vec![Vec::new(); n];
    let mut out_of_color = vec![Vec::new(); c.num_colors()];
    let mut out_of_element = vec![Vec::new(); n];
    for (idx, class) in c.classes().iter().enumerate() {
        let color = idx + 1;
        if !m.independent(class) {
            return Err(Error::Contract(format!(
                "color class {color} = {class:?} is dependent"
            )));
        }
        for x in (0..n).filter(|&x| !class.contains(x)) {
            match circuit_unchecked(m, class, x) {
                None => {
                    in_arcs[x].push(Vertex::Color(color));
                    out_of_color[idx].push(x);
                }
                Some(circuit) => {
                    for y in circuit.iter().filter(|&y| y != x) {
                        in_arcs[x].push(Vertex::Element(y));
                        out_of_element[y].push(x);
                    }
                }
            }
        }
    }
    for list in &mut in_arcs {
        list.sort_unstable();
    }
    for list in &mut out_of_element {
        list.sort_unstable();
    }
    Ok(ExchangeDigraph {
        coloring: c.clone(),
        in_arcs,
        out_of_color,
        out_of_element,
    })
}

impl ExchangeDigraph {
    pub fn num_colors(&self) -> usize {
        self.coloring.num_colors()
    }

    pub fn num_elements(&self) -> usize {
        self.in_arcs.len()
    }

    /// The coloring this digraph was built for.
    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn vertex_color(&self, v: Vertex) -> usize {
        v.color_in(&self.coloring)
    }

    pub fn has_arc(&self, from: Vertex, to: Vertex) -> bool {
        match to {
            Vertex::Color(_) => false,
            Vertex::Element(x) => self.in_arcs[x].binary_search(&from).is_ok(),
        }
    }

    /// Sources of the arcs entering element `x`.
    pub fn in_arcs(&self, x: usize) -> &[Vertex] {
        &self.in_arcs[x]
    }

    /// Element targets of the arcs leaving `v`, ascending.
    pub fn out_neighbors(&self, v: Vertex) -> &[usize] {
        match v {
            Vertex::Color(i) => &self.out_of_color[i - 1],
            Vertex::Element(x) => &self.out_of_element[x],
        }
    }

    /// Arc set `A_i` as `(source, target)` pairs, sorted.
    pub fn arcs_of_color(&self, color: usize) -> Vec<(Vertex, usize)> {
        let mut arcs: Vec<(Vertex, usize)> = self.out_of_color[color - 1]
            .iter()
            .map(|&x| (Vertex::Color(color), x))
            .collect();
        for y in self.coloring.class(color) {
            arcs.extend(
                self.out_of_element[y]
                    .iter()
                    .map(|&x| (Vertex::Element(y), x)),
            );
        }
        arcs.sort_unstable();
        arcs
    }

    pub fn arc_count(&self) -> usize {
        self.in_arcs.iter().map(Vec::len).sum()
    }

    /// Uncolored elements, ascending.
    pub fn sinks(&self) -> Vec<usize> {
        self.coloring.uncolored().to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matroid::{MatroidOracle, PartitionStructure};

    /// Arc sets straight from the definition, with no circuit computation.
    fn naive_arcs<M: Matroid>(m: &M, c: &Coloring, color: usize) -> Vec<(Vertex, usize)> {
        let class = c.class(color);
        let mut arcs = Vec::new();
        for x in (0..m.ground_size()).filter(|&x| !class.contains(x)) {
            if m.independent(&class.with(x)) {
                arcs.push((Vertex::Color(color), x));
            } else {
                for y in &class {
                    if m.independent(&class.without(y).with(x)) {
                        arcs.push((Vertex::Element(y), x));
                    }
                }
            }
        }
        arcs.sort_unstable();
        arcs
    }

    #[test]
    fn laminar_example_arcs() {
        let m = fixtures::laminar_six();
        let c = fixtures::laminar_six_coloring();
        let g = build_digraph(&m, &c).unwrap();
        assert!(g.has_arc(Vertex::Color(1), Vertex::Element(0)));
        assert!(g.has_arc(Vertex::Element(3), Vertex::Element(2)));
        for color in 1..=2 {
            assert_eq!(g.arcs_of_color(color), naive_arcs(&m, &c, color));
        }
        assert_eq!(g.sinks(), vec![5]);
    }

    #[test]
    fn uncolored_gives_only_color_arcs() {
        let m = MatroidOracle::uniform(4, 0);
        let m2 = MatroidOracle::partition(
            PartitionStructure::new(vec![vec![0, 1], vec![2], vec![3]], None).unwrap(),
        );
        let c = Coloring::empty(4, 3);
        let g = build_digraph(&m2, &c).unwrap();
        for color in 1..=3 {
            let expect: Vec<_> = (0..4).map(|x| (Vertex::Color(color), x)).collect();
            assert_eq!(g.arcs_of_color(color), expect);
        }
        // Loops get no arcs at all.
        let g = build_digraph(&m, &c).unwrap();
        assert_eq!(g.arc_count(), 0);
    }

    #[test]
    fn dependent_class_is_rejected() {
        let m = fixtures::laminar_six();
        let c = Coloring::from_colors(vec![0, 0, 0, 0, 1, 1], 1);
        let err = build_digraph(&m, &c).unwrap_err();
        assert!(matches!(err, Error::Contract(ref msg) if msg.contains("color class 1")));
    }
}
