use serde::Serialize;

use crate::edmonds::{ExchangeDigraph, Vertex};
use crate::error::{Error, Result};

/// The color-chordless subgraph `H` of an exchange digraph.
///
/// Layer 0 holds the color nodes. An element enters layer `i` once it has
/// arcs from at least `B + 1` distinct colors among layers `0..i`; for each
/// of the `B + 1` lowest such colors it keeps a single in-arc, taken from the
/// earliest layer in which that color reaches it (ties by vertex index).
#[derive(Debug, Clone, Serialize)]
pub struct LayeredSubgraph {
    surplus: usize,
    num_colors: usize,
    layer_of: Vec<Option<usize>>,
    chosen_in: Vec<Vec<Vertex>>,
    height: usize,
}

pub fn build_layered_subgraph(g: &ExchangeDigraph, surplus: usize) -> LayeredSubgraph {
    let n = g.num_elements();
    let num_colors = g.num_colors();
    let mut layer_of: Vec<Option<usize>> = vec![None; n];
    let mut chosen_in = vec![Vec::new(); n];
    let layer_of_vertex = |layer_of: &[Option<usize>], v: Vertex| match v {
        Vertex::Color(_) => Some(0),
        Vertex::Element(y) => layer_of[y],
    };

    let mut height = 0;
    loop {
        let next = height + 1;
        let mut admitted = Vec::new();
        for x in (0..n).filter(|&x| layer_of[x].is_none()) {
            // Earliest (layer, vertex) per source color.
            let mut best: Vec<Option<(usize, Vertex)>> = vec![None; num_colors + 1];
            for &y in g.in_arcs(x) {
                let Some(layer) = layer_of_vertex(&layer_of, y) else {
                    continue;
                };
                let color = g.vertex_color(y);
                if best[color].is_none_or(|b| (layer, y) < b) {
                    best[color] = Some((layer, y));
                }
            }
            let sources: Vec<Vertex> = best
                .iter()
                .flatten()
                .take(surplus + 1)
                .map(|&(_, y)| y)
                .collect();
            if sources.len() == surplus + 1 {
                admitted.push((x, sources));
            }
        }
        if admitted.is_empty() {
            break;
        }
        for (x, sources) in admitted {
            layer_of[x] = Some(next);
            chosen_in[x] = sources;
        }
        height = next;
    }

    LayeredSubgraph {
        surplus,
        num_colors,
        layer_of,
        chosen_in,
        height,
    }
}

impl LayeredSubgraph {
    /// The `B` this subgraph was built with; admitted elements keep `B + 1` in-arcs.
    pub fn surplus(&self) -> usize {
        self.surplus
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn layer(&self, v: Vertex) -> Option<usize> {
        match v {
            Vertex::Color(i) => (1..=self.num_colors).contains(&i).then_some(0),
            Vertex::Element(x) => self.layer_of[x],
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.layer(v).is_some()
    }

    /// Vertices of layer `i`, ascending.
    pub fn layer_members(&self, i: usize) -> Vec<Vertex> {
        if i == 0 {
            return (1..=self.num_colors).map(Vertex::Color).collect();
        }
        (0..self.layer_of.len())
            .filter(|&x| self.layer_of[x] == Some(i))
            .map(Vertex::Element)
            .collect()
    }

    /// Chosen in-arc sources of element `x`, by ascending source color.
    /// Empty for elements outside `H`.
    pub fn chosen_in(&self, x: usize) -> &[Vertex] {
        &self.chosen_in[x]
    }

    /// Elements of `H` that are uncolored in the digraph's coloring.
    pub fn sinks(&self, g: &ExchangeDigraph) -> Vec<usize> {
        g.sinks()
            .into_iter()
            .filter(|&u| self.layer_of[u].is_some())
            .collect()
    }

    /// Out-neighbors of `v` inside `H`.
    pub fn out_neighbors(&self, v: Vertex) -> Vec<usize> {
        (0..self.chosen_in.len())
            .filter(|&x| self.chosen_in[x].contains(&v))
            .collect()
    }

    /// Ok when `H` contains an uncolored element. Otherwise the elements
    /// outside `H` form a source-sink separating cut, reported in the error.
    pub fn assert_reaches_sink(&self, g: &ExchangeDigraph) -> Result<()> {
        if g.sinks().is_empty() || !self.sinks(g).is_empty() {
            return Ok(());
        }
        let outside: Vec<usize> = (0..self.layer_of.len())
            .filter(|&x| self.layer_of[x].is_none())
            .collect();
        let inside: Vec<usize> = (0..self.layer_of.len())
            .filter(|&x| self.layer_of[x].is_some())
            .collect();
        Err(Error::invariant(
            format!(
                "color-chordless subgraph reaches no uncolored element \
                 (palette {} may be below the chromatic number plus {})",
                self.num_colors, self.surplus
            ),
            format!(
                "cut: H = color nodes + {inside:?}, complement = {outside:?}, coloring = {:?}",
                g.coloring().as_slice()
            ),
        ))
    }
}
