use serde::{Deserialize, Serialize};

use super::Matroid;
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Parts `X_1..X_m` covering the ground set, each with a capacity `d_j ≥ 1`.
/// A set is independent when it takes at most `d_j` elements from part `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct PartitionStructure {
    parts: Vec<Vec<usize>>,
    capacities: Vec<usize>,
    part_of: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    parts: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    capacities: Option<Vec<usize>>,
}

impl TryFrom<RawPartition> for PartitionStructure {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        Self::new(raw.parts, raw.capacities)
    }
}

impl From<PartitionStructure> for RawPartition {
    fn from(p: PartitionStructure) -> Self {
        RawPartition {
            parts: p.parts,
            capacities: Some(p.capacities),
        }
    }
}

impl PartitionStructure {
    /// Parts must be disjoint and cover `0..n` where `n` is the total part
    /// size. Missing capacities default to 1.
    pub fn new(parts: Vec<Vec<usize>>, capacities: Option<Vec<usize>>) -> Result<Self> {
        let capacities = capacities.unwrap_or_else(|| vec![1; parts.len()]);
        if capacities.len() != parts.len() {
            return Err(Error::Input(format!(
                "partition has {} parts but {} capacities",
                parts.len(),
                capacities.len()
            )));
        }
        if let Some(j) = capacities.iter().position(|&d| d == 0) {
            return Err(Error::Input(format!("parts[{j}] has capacity 0")));
        }
        let n: usize = parts.iter().map(Vec::len).sum();
        let mut part_of = vec![usize::MAX; n];
        for (j, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::Input(format!("parts[{j}] is empty")));
            }
            for &x in part {
                if x >= n {
                    return Err(Error::Input(format!(
                        "parts[{j}] contains element {x}, but the parts cover only {n} elements"
                    )));
                }
                if part_of[x] != usize::MAX {
                    return Err(Error::Input(format!(
                        "element {x} appears in both parts[{}] and parts[{j}]",
                        part_of[x]
                    )));
                }
                part_of[x] = j;
            }
        }
        Ok(Self {
            parts,
            capacities,
            part_of,
        })
    }

    /// Partition from a label per element: elements sharing a label share a part.
    pub fn from_labels(labels: &[usize], capacities: Option<Vec<usize>>) -> Result<Self> {
        let count = labels.iter().map(|&l| l + 1).max().unwrap_or(0);
        let mut parts = vec![Vec::new(); count];
        for (x, &l) in labels.iter().enumerate() {
            parts[l].push(x);
        }
        Self::new(parts, capacities)
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn capacities(&self) -> &[usize] {
        &self.capacities
    }

    pub fn capacity(&self, part: usize) -> usize {
        self.capacities[part]
    }

    pub fn part_of(&self, x: usize) -> usize {
        self.part_of[x]
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub(super) fn validate_ground(&self, n: usize) -> Result<()> {
        if self.part_of.len() != n {
            return Err(Error::Input(format!(
                "partition parts cover {} elements, ground set has {n}",
                self.part_of.len()
            )));
        }
        Ok(())
    }
}

impl Matroid for PartitionStructure {
    fn ground_size(&self) -> usize {
        self.part_of.len()
    }

    fn independent(&self, set: &ElementSet) -> bool {
        let mut counts = vec![0usize; self.parts.len()];
        set.iter().all(|x| {
            let j = self.part_of[x];
            counts[j] += 1;
            counts[j] <= self.capacities[j]
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_overlap_and_gaps() {
        assert!(PartitionStructure::new(vec![vec![0, 1], vec![1, 2]], None).is_err());
        assert!(PartitionStructure::new(vec![vec![0, 3], vec![1]], None).is_err());
        assert!(PartitionStructure::new(vec![vec![0], vec![1]], Some(vec![1, 0])).is_err());
        assert!(PartitionStructure::new(vec![vec![0], vec![1]], Some(vec![1])).is_err());
    }

    #[test]
    fn capacities_default_to_one() {
        let p: PartitionStructure = serde_json::from_str(r#"{"parts":[[0,2],[1]]}"#).unwrap();
        assert_eq!(p.capacities(), &[1, 1]);
        assert!(p.independent(&ElementSet::from_mask(0b011)));
        assert!(!p.independent(&ElementSet::from_mask(0b101)));
    }

    #[test]
    fn deserialize_validates() {
        let bad = serde_json::from_str::<PartitionStructure>(r#"{"parts":[[0,1],[1]]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn from_labels_groups() {
        let p = PartitionStructure::from_labels(&[1, 0, 1], Some(vec![1, 2])).unwrap();
        assert_eq!(p.parts(), &[vec![1], vec![0, 2]]);
        assert_eq!(p.part_of(2), 1);
    }
}
