use super::LayeredSubgraph;
use crate::edmonds::{AugmentingPath, Coloring, Vertex};
use crate::error::{Error, Result};
use crate::matroid::PartitionStructure;

/// A suffix `P_j = (x_{l-j}, .., x_l = u)` under construction, together with
/// `c Δ P_j` and its per-part color counts in every partition matroid.
#[derive(Debug, Clone)]
pub struct SuffixState {
    /// Suffix vertices from the sink backwards: `reversed[0]` is the sink.
    reversed: Vec<Vertex>,
    working: Coloring,
    /// `counts[p][part][color]` under `working`.
    counts: Vec<Vec<Vec<usize>>>,
}

impl SuffixState {
    /// `P_0 = (u)` for an uncolored element `u`; `c Δ P_0 = c`.
    pub fn start(c: &Coloring, sink: usize, partitions: &[PartitionStructure]) -> Self {
        debug_assert_eq!(c.color(sink), 0);
        let counts = partitions
            .iter()
            .map(|p| {
                let mut table = vec![vec![0; c.num_colors() + 1]; p.num_parts()];
                for (x, &color) in c.as_slice().iter().enumerate() {
                    if color > 0 {
                        table[p.part_of(x)][color] += 1;
                    }
                }
                table
            })
            .collect();
        Self {
            reversed: vec![Vertex::Element(sink)],
            working: c.clone(),
            counts,
        }
    }

    pub fn head(&self) -> Vertex {
        *self.reversed.last().expect("suffix is never empty")
    }

    /// Whether the suffix already starts at a color node.
    pub fn is_complete(&self) -> bool {
        self.head().is_color()
    }

    /// `c Δ P_j`.
    pub fn working(&self) -> &Coloring {
        &self.working
    }

    pub fn path(&self) -> AugmentingPath {
        let mut vs = self.reversed.clone();
        vs.reverse();
        AugmentingPath::new(vs).expect("suffixes descend strictly through layers")
    }

    /// Whether `(z, head, ..)` keeps every partition within capacity: the head
    /// takes `z`'s color and an element `z` becomes uncolored.
    fn accepts(&self, z: Vertex, partitions: &[PartitionStructure]) -> bool {
        let head = self.head().element().expect("extending from an element");
        let color = z.color_in(&self.working);
        partitions.iter().enumerate().all(|(i, p)| {
            let part = p.part_of(head);
            let mut count = self.counts[i][part][color];
            if let Vertex::Element(y) = z {
                if p.part_of(y) == part {
                    count -= 1;
                }
            }
            count < p.capacity(part)
        })
    }

    fn push(&mut self, z: Vertex, partitions: &[PartitionStructure]) {
        let head = self.head().element().expect("extending from an element");
        let color = z.color_in(&self.working);
        for (i, p) in partitions.iter().enumerate() {
            self.counts[i][p.part_of(head)][color] += 1;
            if let Vertex::Element(y) = z {
                self.counts[i][p.part_of(y)][color] -= 1;
            }
        }
        self.working.set(head, color);
        if let Vertex::Element(y) = z {
            self.working.set(y, 0);
        }
        self.reversed.push(z);
    }
}

/// Prepends to the suffix one of the head's chosen in-neighbors in `h` whose
/// color keeps `c Δ P_{j+1}` feasible in every partition matroid. Candidates
/// are tried by color, then layer, then vertex index.
pub fn extend_suffix(
    h: &LayeredSubgraph,
    mut state: SuffixState,
    partitions: &[PartitionStructure],
) -> Result<SuffixState> {
    let head = state.head().element().ok_or_else(|| {
        Error::Contract("extend_suffix: suffix already starts at a color node".into())
    })?;
    let mut candidates: Vec<Vertex> = h.chosen_in(head).to_vec();
    candidates.sort_by_key(|&z| (z.color_in(&state.working), h.layer(z), z));
    match candidates
        .into_iter()
        .find(|&z| state.accepts(z, partitions))
    {
        Some(z) => {
            state.push(z, partitions);
            Ok(state)
        }
        None => Err(Error::invariant(
            format!("no in-neighbor of element {head} keeps the partition matroids feasible"),
            format!(
                "suffix = {}, chosen in-arcs = {:?}, working coloring = {:?}",
                state.path(),
                h.chosen_in(head),
                state.working.as_slice()
            ),
        )),
    }
}

/// Builds a suffix-feasible source-sink path of `h` backwards from the
/// lowest-index uncolored element of `h`.
pub fn find_path(
    h: &LayeredSubgraph,
    c: &Coloring,
    partitions: &[PartitionStructure],
) -> Result<AugmentingPath> {
    let sink = (0..c.len())
        .find(|&x| c.color(x) == 0 && h.contains(Vertex::Element(x)))
        .ok_or_else(|| Error::Contract("find_path: H contains no uncolored element".into()))?;
    let mut state = SuffixState::start(c, sink, partitions);
    while !state.is_complete() {
        state = extend_suffix(h, state, partitions)?;
    }
    Ok(state.path())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edmonds::build_digraph;
    use crate::fixtures;
    use crate::intersection::build_layered_subgraph;

    use Vertex::{Color as C, Element as E};

    #[test]
    fn intersection_example_suffixes() {
        let m1 = fixtures::laminar_six();
        let m2 = [fixtures::pairs_six()];
        let c = fixtures::intersection_six_coloring();
        let g = build_digraph(&m1, &c).unwrap();
        let h = build_layered_subgraph(&g, 1);

        let p0 = SuffixState::start(&c, 5, &m2);
        // (3, x6) would put x1 and x6 together in green.
        assert!(!p0.accepts(C(3), &m2));
        let p1 = extend_suffix(&h, p0, &m2).unwrap();
        assert_eq!(p1.path().vertices(), &[E(2), E(5)]);
        assert_eq!(p1.working().as_slice(), &[3, 3, 0, 2, 1, 2]);

        // (3, x3, x6) would put x2 and x3 together in green.
        assert!(!p1.accepts(C(3), &m2));
        let p2 = extend_suffix(&h, p1, &m2).unwrap();
        assert!(p2.is_complete());
        assert_eq!(p2.path().vertices(), &[C(1), E(2), E(5)]);

        assert_eq!(find_path(&h, &c, &m2).unwrap(), p2.path());
        assert!(matches!(
            extend_suffix(&h, p2, &m2),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn no_partitions_accept_first_arc() {
        let m = fixtures::laminar_six();
        let c = fixtures::laminar_six_coloring();
        let g = build_digraph(&m, &c).unwrap();
        let h = build_layered_subgraph(&g, 0);
        let s = SuffixState::start(&c, 5, &[]);
        let first = h.chosen_in(5)[0];
        let s = extend_suffix(&h, s, &[]).unwrap();
        assert_eq!(s.head(), first);
    }
}
