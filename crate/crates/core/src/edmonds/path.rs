use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{Coloring, ExchangeDigraph, Vertex};
use crate::error::{Error, Result};

/// A vertex sequence `(x_1, .., x_l)` ending at an element. Only `x_1` may be
/// a color node, and no vertex repeats.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AugmentingPath {
    vertices: Vec<Vertex>,
}

impl AugmentingPath {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        let Some(last) = vertices.last() else {
            return Err(Error::Input("empty path".into()));
        };
        if last.is_color() {
            return Err(Error::Input("path must end at an element".into()));
        }
        if vertices[1..].iter().any(|v| v.is_color()) {
            return Err(Error::Input(
                "only the first vertex may be a color node".into(),
            ));
        }
        let mut seen = vertices.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("path repeats a vertex".into()));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn head(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn sink(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
            .element()
            .expect("paths end at an element")
    }

    /// Whether consecutive vertices are arcs of `g`.
    pub fn is_path_in(&self, g: &ExchangeDigraph) -> bool {
        self.vertices.windows(2).all(|w| g.has_arc(w[0], w[1]))
    }
}

impl fmt::Display for AugmentingPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Whether appending `next` to `prefix` creates a color-chord: an arc
/// `(x_j, next)` between elements with `j <= k - 2` and `x_j` colored like
/// `x_{k-1}`, the vertex right before `next`.
pub(crate) fn closes_chord(g: &ExchangeDigraph, prefix: &[Vertex], next: Vertex) -> bool {
    let k = prefix.len();
    if k < 2 || next.is_color() {
        return false;
    }
    let before = g.vertex_color(prefix[k - 1]);
    prefix[..k - 1]
        .iter()
        .any(|&xj| !xj.is_color() && g.vertex_color(xj) == before && g.has_arc(xj, next))
}

/// True iff `p` has no color-chord in `g` under `c`.
pub fn is_color_chordless(g: &ExchangeDigraph, c: &Coloring, p: &AugmentingPath) -> bool {
    let vs = p.vertices();
    (2..vs.len()).all(|k| {
        let before = vs[k - 1].color_in(c);
        !vs[..k - 1]
            .iter()
            .any(|&xj| !xj.is_color() && xj.color_in(c) == before && g.has_arc(xj, vs[k]))
    })
}

/// `c Δ P`: each `x_i` (i ≥ 2) takes the old color of `x_{i-1}`; if `x_1` is
/// an element it becomes uncolored. The input is left untouched.
///
/// # Panics
/// If the last vertex of `p` is colored in `c`.
pub fn apply_path(c: &Coloring, p: &AugmentingPath) -> Coloring {
    assert_eq!(
        c.color(p.sink()),
        0,
        "path {p} must end at an uncolored element"
    );
    let mut next = c.clone();
    let vs = p.vertices();
    for w in vs.windows(2) {
        let x = w[1].element().expect("interior vertices are elements");
        next.set(x, w[0].color_in(c));
    }
    if let Vertex::Element(x) = vs[0] {
        next.set(x, 0);
    }
    next
}

/// Chooses a color-chordless source-sink path in an exchange digraph.
pub trait PathSelector {
    fn select(&self, g: &ExchangeDigraph) -> Option<AugmentingPath>;
}

/// Multi-source BFS from the color nodes. Returns a shortest path to the
/// lowest-index reachable sink; shortest paths have no chords at all.
#[derive(Debug, Clone, Copy, Default)]
pub struct ShortestPath;

/// Depth-first search over color-chordless extensions, neighbors in
/// ascending order, towards the lowest-index reachable sink. Typically finds
/// longer paths than [`ShortestPath`]. Gives up after `budget` expansions and
/// falls back to the shortest path.
#[derive(Debug, Clone, Copy)]
pub struct DfsChordless {
    pub budget: usize,
}

impl Default for DfsChordless {
    fn default() -> Self {
        Self { budget: 200_000 }
    }
}

/// BFS parents over vertices: color nodes first, then elements.
struct Bfs {
    parent: Vec<Option<Vertex>>,
    reached: Vec<bool>,
}

fn bfs(g: &ExchangeDigraph) -> Bfs {
    let n = g.num_elements();
    let mut parent = vec![None; n];
    let mut reached = vec![false; n];
    let mut queue: VecDeque<Vertex> = (1..=g.num_colors()).map(Vertex::Color).collect();
    while let Some(v) = queue.pop_front() {
        for &x in g.out_neighbors(v) {
            if !reached[x] {
                reached[x] = true;
                parent[x] = Some(v);
                queue.push_back(Vertex::Element(x));
            }
        }
    }
    Bfs { parent, reached }
}

fn lowest_reachable_sink(g: &ExchangeDigraph, reached: &[bool]) -> Option<usize> {
    g.sinks().into_iter().find(|&u| reached[u])
}

impl PathSelector for ShortestPath {
    fn select(&self, g: &ExchangeDigraph) -> Option<AugmentingPath> {
        let tree = bfs(g);
        let sink = lowest_reachable_sink(g, &tree.reached)?;
        let mut vertices = vec![Vertex::Element(sink)];
        let mut cur = sink;
        loop {
            let p = tree.parent[cur].expect("reached vertices have parents");
            vertices.push(p);
            match p {
                Vertex::Color(_) => break,
                Vertex::Element(y) => cur = y,
            }
        }
        vertices.reverse();
        Some(AugmentingPath::new(vertices).expect("BFS tree paths are simple"))
    }
}

impl PathSelector for DfsChordless {
    fn select(&self, g: &ExchangeDigraph) -> Option<AugmentingPath> {
        let tree = bfs(g);
        let sink = lowest_reachable_sink(g, &tree.reached)?;
        let mut budget = self.budget;
        let mut on_path = vec![false; g.num_elements()];
        for color in 1..=g.num_colors() {
            let mut path = vec![Vertex::Color(color)];
            if dfs(g, sink, &mut path, &mut on_path, &mut budget) {
                return Some(AugmentingPath::new(path).expect("DFS keeps paths simple"));
            }
            if budget == 0 {
                break;
            }
        }
        ShortestPath.select(g)
    }
}

fn dfs(
    g: &ExchangeDigraph,
    sink: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    budget: &mut usize,
) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let last = *path.last().expect("nonempty");
    for &x in g.out_neighbors(last) {
        let v = Vertex::Element(x);
        if on_path[x] || closes_chord(g, path, v) {
            continue;
        }
        if x == sink {
            path.push(v);
            return true;
        }
        // Uncolored elements have no outgoing arcs, so only colored ones extend.
        if g.vertex_color(v) == 0 {
            continue;
        }
        on_path[x] = true;
        path.push(v);
        if dfs(g, sink, path, on_path, budget) {
            return true;
        }
        path.pop();
        on_path[x] = false;
    }
    false
}

/// The built-in selectors, by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SelectorKind {
    #[default]
    Shortest,
    DfsChordless,
}

impl SelectorKind {
    pub fn selector(self) -> Box<dyn PathSelector + Send + Sync> {
        match self {
            SelectorKind::Shortest => Box::new(ShortestPath),
            SelectorKind::DfsChordless => Box::new(DfsChordless::default()),
        }
    }
}

impl FromStr for SelectorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shortest" => Ok(SelectorKind::Shortest),
            "dfs-chordless" => Ok(SelectorKind::DfsChordless),
            other => Err(Error::Input(format!("unknown selector {other:?}"))),
        }
    }
}

impl fmt::Display for SelectorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelectorKind::Shortest => "shortest",
            SelectorKind::DfsChordless => "dfs-chordless",
        })
    }
}
