use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// A laminar family with a positive capacity per set. Independent sets take at
/// most `b(A)` elements from every member `A` of the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaminarStructure {
    pub family: Vec<Vec<usize>>,
    pub capacities: Vec<usize>,
}

impl LaminarStructure {
    pub fn new(family: Vec<Vec<usize>>, capacities: Vec<usize>) -> Self {
        Self { family, capacities }
    }

    pub(super) fn validate(&self, n: usize) -> Result<()> {
        if self.family.len() != self.capacities.len() {
            return Err(Error::Input(format!(
                "laminar family has {} sets but {} capacities",
                self.family.len(),
                self.capacities.len()
            )));
        }
        let mut sets = Vec::with_capacity(self.family.len());
        for (i, members) in self.family.iter().enumerate() {
            if self.capacities[i] == 0 {
                return Err(Error::Input(format!("family[{i}] has capacity 0")));
            }
            let mut s = ElementSet::new();
            for &x in members {
                if x >= n {
                    return Err(Error::Input(format!(
                        "family[{i}] contains element {x}, ground set has {n}"
                    )));
                }
                if !s.insert(x) {
                    return Err(Error::Input(format!("family[{i}] repeats element {x}")));
                }
            }
            sets.push(s);
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                let (a, b) = (&sets[i], &sets[j]);
                if !(a.is_disjoint(b) || a.is_subset(b) || b.is_subset(a)) {
                    return Err(Error::Input(format!(
                        "family[{i}] and family[{j}] are neither disjoint nor nested"
                    )));
                }
            }
        }
        Ok(())
    }

    pub(super) fn independent(&self, set: &ElementSet) -> bool {
        self.family
            .iter()
            .zip(&self.capacities)
            .all(|(members, &cap)| members.iter().filter(|&&x| set.contains(x)).count() <= cap)
    }
}
