//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use matroid_chroma::edmonds::{AugmentingPath, Coloring, ExchangeDigraph, Vertex};
use matroid_chroma::harness::generate::{
    random_graphic, random_laminar, random_partition, random_transversal,
};
use matroid_chroma::intersection::LayeredSubgraph;
use matroid_chroma::matroid::{GroundSet, Matroid, MatroidOracle, Structure};
use matroid_chroma::ElementSet;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn class(c: &Coloring, color: usize) -> ElementSet {
    (0..c.len()).filter(|&x| c.color(x) == color).collect()
}

/// Every nonempty class independent in `m`.
pub fn classes_independent(m: &dyn Matroid, c: &Coloring) -> bool {
    (1..=c.num_colors()).all(|i| m.independent(&class(c, i)))
}

fn color_of(c: &Coloring, v: Vertex) -> usize {
    match v {
        Vertex::Color(i) => i,
        Vertex::Element(x) => c.color(x),
    }
}

/// Arc `(from, x)` of the exchange digraph, straight from the definition.
pub fn naive_arc(m: &dyn Matroid, c: &Coloring, from: Vertex, x: usize) -> bool {
    match from {
        Vertex::Color(i) => c.color(x) != i && m.independent(&class(c, i).with(x)),
        Vertex::Element(y) => {
            let j = c.color(y);
            j != 0 && y != x && c.color(x) != j && m.independent(&class(c, j).without(y).with(x))
        }
    }
}

/// Source-sink path of the exchange digraph without color-chords, checked
/// against the definitions only.
pub fn naive_chordless_path(m: &dyn Matroid, c: &Coloring, p: &[Vertex]) -> bool {
    let elem = |v: Vertex| match v {
        Vertex::Element(x) => Some(x),
        Vertex::Color(_) => None,
    };
    let Some(sink) = p.last().and_then(|&v| elem(v)) else {
        return false;
    };
    if c.color(sink) != 0 || p[1..].iter().any(|&v| elem(v).is_none()) {
        return false;
    }
    if !p[0].is_color() && c.color(elem(p[0]).unwrap()) == 0 {
        return false;
    }
    for w in p.windows(2) {
        if !naive_arc(m, c, w[0], elem(w[1]).unwrap()) {
            return false;
        }
    }
    for k in 2..p.len() {
        for j in 0..=k - 2 {
            if color_of(c, p[j]) == color_of(c, p[k - 1])
                && naive_arc(m, c, p[j], elem(p[k]).unwrap())
            {
                return false;
            }
        }
    }
    true
}

/// Matroid families used by the fuzz tests.
#[derive(Debug, Clone, Copy)]
pub enum Kind {
    Graphic,
    Laminar,
    Transversal,
    Uniform,
    Partition,
}

pub const M1_KINDS: [Kind; 4] = [
    Kind::Graphic,
    Kind::Laminar,
    Kind::Transversal,
    Kind::Uniform,
];
pub const ALL_KINDS: [Kind; 5] = [
    Kind::Graphic,
    Kind::Laminar,
    Kind::Transversal,
    Kind::Uniform,
    Kind::Partition,
];

pub fn random_matroid(rng: &mut impl Rng, kind: Kind, n: usize) -> MatroidOracle {
    let structure = match kind {
        Kind::Graphic => {
            let v = rng.gen_range(2..=(n / 2 + 2).max(2));
            Structure::Graphic(random_graphic(rng, n, v).unwrap())
        }
        Kind::Laminar => Structure::Laminar(random_laminar(rng, n)),
        Kind::Transversal => Structure::Transversal(random_transversal(rng, n)),
        Kind::Uniform => Structure::Uniform {
            rank: if n == 0 { 0 } else { rng.gen_range(1..=n) },
        },
        Kind::Partition => Structure::Partition(random_partition(rng, n)),
    };
    MatroidOracle::new(GroundSet::new(n), structure).unwrap()
}

/// Random feasible partial coloring over `palette` colors with at least one
/// uncolored element (when `n > 0`).
pub fn random_partial_coloring(rng: &mut impl Rng, m: &dyn Matroid, palette: usize) -> Coloring {
    let n = m.ground_size();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut colors = vec![0; n];
    for &x in &order {
        if rng.gen_bool(0.15) {
            continue;
        }
        let mut cs: Vec<usize> = (1..=palette).collect();
        cs.shuffle(rng);
        for col in cs {
            let s: ElementSet = (0..n).filter(|&y| colors[y] == col).collect();
            if m.independent(&s.with(x)) {
                colors[x] = col;
                break;
            }
        }
    }
    if n > 0 && colors.iter().all(|&col| col != 0) {
        colors[rng.gen_range(0..n)] = 0;
    }
    Coloring::from_colors(colors, palette)
}

/// Every source-sink path of `h`, by walking chosen in-arcs backwards from
/// each uncolored element of `h`.
pub fn all_h_paths(h: &LayeredSubgraph, g: &ExchangeDigraph) -> Vec<AugmentingPath> {
    fn back(h: &LayeredSubgraph, suffix: &mut Vec<Vertex>, out: &mut Vec<AugmentingPath>) {
        let head = *suffix.last().unwrap();
        match head {
            Vertex::Color(_) => {
                let mut vs = suffix.clone();
                vs.reverse();
                out.push(AugmentingPath::new(vs).unwrap());
            }
            Vertex::Element(x) => {
                for &z in h.chosen_in(x) {
                    suffix.push(z);
                    back(h, suffix, out);
                    suffix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    for u in h.sinks(g) {
        back(h, &mut vec![Vertex::Element(u)], &mut out);
    }
    out
}

/// Builds the arc family `A'` of the cut argument for the cut whose sink
/// side is `y`: one arc `(v, x)` entering `y` per pair `(j, x)` with
/// `x ∈ Y \ S_j` and `(S_j ∩ Y) + x` independent. Returns the arcs as
/// `(source, target, color)`.
pub fn lemma_cut_arcs(
    m: &dyn Matroid,
    c: &Coloring,
    y: &ElementSet,
) -> Result<Vec<(Vertex, usize, usize)>, String> {
    let mut arcs = Vec::new();
    for j in 1..=c.num_colors() {
        let s = class(c, j);
        let s_y = s.intersection(y);
        for x in y.iter().filter(|&x| !s_y.contains(x)) {
            if !m.independent(&s_y.with(x)) {
                continue;
            }
            let source = if m.independent(&s.with(x)) {
                Vertex::Color(j)
            } else {
                // Some element of the circuit of S_j + x lies outside Y.
                let witness = s
                    .iter()
                    .filter(|&v| !y.contains(v))
                    .find(|&v| m.independent(&s.without(v).with(x)))
                    .ok_or_else(|| format!("no arc of color {j} into {x} crosses the cut"))?;
                Vertex::Element(witness)
            };
            if !naive_arc(m, c, source, x) {
                return Err(format!("({source}, {x}) is not an arc"));
            }
            arcs.push((source, x, j));
        }
    }
    Ok(arcs)
}
