use serde::Serialize;

use crate::edmonds::Coloring;
use crate::error::{Error, Result};
use crate::intersection::color_intersection;
use crate::matroid::{rank, Matroid, MatroidOracle, PartitionStructure, Restriction};
use crate::set::ElementSet;

/// Pairwise disjoint, nonempty independent blocks of a matroid.
#[derive(Debug, Clone)]
pub struct RainbowInstance {
    matroid: MatroidOracle,
    blocks: Vec<Vec<usize>>,
}

impl RainbowInstance {
    pub fn new(matroid: MatroidOracle, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n = matroid.ground_size();
        let mut owner = vec![None; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Input(format!("blocks[{i}] is empty")));
            }
            for &x in block {
                if x >= n {
                    return Err(Error::Input(format!(
                        "blocks[{i}] contains element {x}, ground set has {n}"
                    )));
                }
                if let Some(j) = owner[x] {
                    return Err(Error::Input(format!(
                        "element {x} lies in both blocks[{j}] and blocks[{i}]"
                    )));
                }
                owner[x] = Some(i);
            }
            let set: ElementSet = block.iter().copied().collect();
            if !matroid.independent(&set) {
                return Err(Error::Input(format!(
                    "blocks[{i}] = {block:?} is dependent"
                )));
            }
        }
        Ok(Self { matroid, blocks })
    }

    pub fn matroid(&self) -> &MatroidOracle {
        &self.matroid
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `∪ B_i`, ascending.
    pub fn covered(&self) -> Vec<usize> {
        let mut xs: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        xs.sort_unstable();
        xs
    }

    /// `r = rank(∪ B_i)`.
    pub fn rank(&self) -> usize {
        rank(&self.matroid, &self.covered().into_iter().collect()).expect("blocks are in range")
    }

    /// `m + r - 1`, or 0 without blocks.
    pub fn bound(&self) -> usize {
        if self.blocks.is_empty() {
            0
        } else {
            self.blocks.len() + self.rank() - 1
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RainbowCover {
    /// The sets `R_1 .. R_h` in original element indices.
    pub sets: Vec<Vec<usize>>,
    pub m: usize,
    pub r: usize,
    pub bound: usize,
    /// Coloring of `∪ B_i` in the local indices of [`RainbowInstance::covered`].
    pub coloring: Coloring,
}

/// Covers `∪ B_i` with independent sets meeting each block at most once.
pub fn rainbow_cover(inst: &RainbowInstance) -> Result<RainbowCover> {
    let covered = inst.covered();
    let mut local = vec![usize::MAX; inst.matroid.ground_size()];
    for (i, &x) in covered.iter().enumerate() {
        local[x] = i;
    }
    let restricted = Restriction::new(&inst.matroid, covered.clone())?;
    let parts = inst
        .blocks
        .iter()
        .map(|b| b.iter().map(|&x| local[x]).collect())
        .collect();
    let blocks = PartitionStructure::new(parts, None)?;
    let out = color_intersection(&restricted, &[blocks], None)?;
    let sets = out
        .coloring
        .classes()
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.iter().map(|i| covered[i]).collect())
        .collect();
    Ok(RainbowCover {
        sets,
        m: inst.blocks.len(),
        r: inst.rank(),
        bound: inst.bound(),
        coloring: out.coloring,
    })
}
