//! Coloring the intersection of an arbitrary matroid with partition matroids.
//!
//! Each iteration rebuilds the exchange digraph `G` of `M_1` for the current
//! coloring over `α + B` colors, restricts it to the color-chordless subgraph
//! `H`, and walks backwards from an uncolored element of `H` choosing in-arcs
//! that keep every partition matroid feasible. Source-sink paths of `H` are
//! color-chordless in `G`, so the augmented coloring stays feasible in `M_1`.

mod layered;
mod suffix;

use serde::Serialize;

pub use layered::{build_layered_subgraph, LayeredSubgraph};
pub use suffix::{extend_suffix, find_path, SuffixState};

use crate::edmonds::{
    apply_path, build_digraph, chromatic_number, reject_loops, verify_coloring, AugmentingPath,
    Coloring, ExchangeDigraph,
};
use crate::error::{Error, Result};
use crate::matroid::{partition_chromatic, Matroid, MatroidOracle, PartitionStructure};

/// `M_1` together with the partition matroids `M_2 .. M_k`.
#[derive(Debug, Clone)]
pub struct IntersectionInstance {
    pub m1: MatroidOracle,
    pub partitions: Vec<PartitionStructure>,
    /// `χ(M_1)` if known; computed otherwise.
    pub alpha: Option<usize>,
}

impl IntersectionInstance {
    pub fn new(
        m1: MatroidOracle,
        partitions: Vec<PartitionStructure>,
        alpha: Option<usize>,
    ) -> Result<Self> {
        check_partitions(m1.ground_size(), &partitions)?;
        Ok(Self {
            m1,
            partitions,
            alpha,
        })
    }

    /// `B = Σ (χ(M_i) - 1)` over the partition matroids.
    pub fn surplus(&self) -> usize {
        surplus(&self.partitions)
    }

    pub fn solve(&self) -> Result<IntersectionOutcome> {
        color_intersection(&self.m1, &self.partitions, self.alpha)
    }
}

pub fn surplus(partitions: &[PartitionStructure]) -> usize {
    partitions.iter().map(|p| partition_chromatic(p) - 1).sum()
}

fn check_partitions(n: usize, partitions: &[PartitionStructure]) -> Result<()> {
    for (i, p) in partitions.iter().enumerate() {
        if p.ground_size() != n {
            return Err(Error::Input(format!(
                "partition matroid {} covers {} elements, expected {n}",
                i + 2,
                p.ground_size()
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionOutcome {
    pub coloring: Coloring,
    pub alpha: usize,
    /// `B`.
    pub surplus: usize,
    /// `α + B`.
    pub palette: usize,
    pub iterations: usize,
}

/// State seen by an observer after each augmentation.
pub struct IterationTrace<'a> {
    pub before: &'a Coloring,
    pub digraph: &'a ExchangeDigraph,
    pub layered: &'a LayeredSubgraph,
    pub path: &'a AugmentingPath,
    pub after: &'a Coloring,
}

/// Colors every element with at most `α + B` colors so that each class is
/// independent in `m1` and in every partition matroid.
pub fn color_intersection<M: Matroid + ?Sized>(
    m1: &M,
    partitions: &[PartitionStructure],
    alpha: Option<usize>,
) -> Result<IntersectionOutcome> {
    color_intersection_from(m1, partitions, alpha, None, &mut |_| {})
}

/// [`color_intersection`] resuming from a feasible partial coloring, calling
/// `observer` after every iteration.
pub fn color_intersection_from<M: Matroid + ?Sized>(
    m1: &M,
    partitions: &[PartitionStructure],
    alpha: Option<usize>,
    initial: Option<&Coloring>,
    observer: &mut dyn FnMut(&IterationTrace<'_>),
) -> Result<IntersectionOutcome> {
    let n = m1.ground_size();
    check_partitions(n, partitions)?;
    reject_loops(m1)?;
    let alpha = match alpha {
        Some(a) => a,
        None => chromatic_number(m1)?,
    };
    let b = surplus(partitions);
    let palette = alpha + b;

    let mut c = match initial {
        None => Coloring::empty(n, palette),
        Some(init) => {
            if init.len() != n {
                return Err(Error::Input(format!(
                    "initial coloring has {} entries for {n} elements",
                    init.len()
                )));
            }
            let c = init.with_palette(palette)?;
            let mut ms: Vec<&dyn Matroid> = vec![&m1];
            ms.extend(partitions.iter().map(|p| p as &dyn Matroid));
            if let Some((i, color)) = verify_coloring(&ms, &c).first_violation() {
                return Err(Error::Input(format!(
                    "initial coloring: color {color} is dependent in matroid {}",
                    i + 1
                )));
            }
            c
        }
    };
    if n > 0 && palette == 0 {
        return Err(Error::Input(
            "palette of size 0 for a nonempty ground set".into(),
        ));
    }

    let mut iterations = 0;
    while !c.is_total() {
        let g = build_digraph(m1, &c)?;
        let h = build_layered_subgraph(&g, b);
        h.assert_reaches_sink(&g)?;
        let p = find_path(&h, &c, partitions)?;
        let next = apply_path(&c, &p);
        if next.colored_count() != c.colored_count() + 1 {
            return Err(Error::invariant(
                "augmentation did not color exactly one more element",
                format!(
                    "path = {p}, before = {:?}, after = {:?}",
                    c.as_slice(),
                    next.as_slice()
                ),
            ));
        }
        observer(&IterationTrace {
            before: &c,
            digraph: &g,
            layered: &h,
            path: &p,
            after: &next,
        });
        c = next;
        iterations += 1;
    }

    Ok(IntersectionOutcome {
        coloring: c,
        alpha,
        surplus: b,
        palette,
        iterations,
    })
}

/// First-fit coloring of an intersection of partition matroids over
/// `1 + Σ (χ(M_i) - 1)` colors. `m1` must itself be a partition matroid.
pub fn greedy_baseline(m1: &MatroidOracle, partitions: &[PartitionStructure]) -> Result<Coloring> {
    let first = m1.as_partition().ok_or_else(|| {
        Error::Unsupported(format!(
            "greedy baseline needs a partition matroid as M_1, got {}",
            m1.kind()
        ))
    })?;
    let n = m1.ground_size();
    check_partitions(n, partitions)?;
    let all: Vec<&PartitionStructure> = std::iter::once(first).chain(partitions).collect();
    let palette = 1 + all
        .iter()
        .map(|p| partition_chromatic(p) - 1)
        .sum::<usize>();
    // load[p][part][color]
    let mut load: Vec<Vec<Vec<usize>>> = all
        .iter()
        .map(|p| vec![vec![0; palette + 1]; p.num_parts()])
        .collect();
    let mut c = Coloring::empty(n, palette);
    for x in 0..n {
        let fits = |color: usize, load: &[Vec<Vec<usize>>]| {
            all.iter()
                .enumerate()
                .all(|(i, p)| load[i][p.part_of(x)][color] < p.capacity(p.part_of(x)))
        };
        let color = (1..=palette)
            .find(|&color| fits(color, &load))
            .ok_or_else(|| {
                Error::invariant(
                    format!("first-fit found no color for element {x}"),
                    format!("palette = {palette}, coloring = {:?}", c.as_slice()),
                )
            })?;
        for (i, p) in all.iter().enumerate() {
            load[i][p.part_of(x)][color] += 1;
        }
        c.set(x, color);
    }
    Ok(c)
}
