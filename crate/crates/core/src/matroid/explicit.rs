use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// The independent sets listed as bitmasks. Meant for tests and axiom
/// checking; nothing forces the list to actually describe a matroid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitStructure {
    pub independent: Vec<u64>,
}

impl ExplicitStructure {
    pub fn new(mut independent: Vec<u64>) -> Self {
        independent.sort_unstable();
        independent.dedup();
        Self { independent }
    }

    pub(super) fn validate(&self, n: usize) -> Result<()> {
        if n > 64 {
            return Err(Error::Input(format!(
                "explicit matroids support at most 64 elements, got {n}"
            )));
        }
        if n < 64 {
            if let Some(m) = self.independent.iter().find(|&&m| m >> n != 0) {
                return Err(Error::Input(format!(
                    "explicit set {m:#b} uses elements outside 0..{n}"
                )));
            }
        }
        Ok(())
    }

    pub(super) fn independent(&self, set: &ElementSet) -> bool {
        match set.to_mask() {
            Some(m) => self.independent.binary_search(&m).is_ok(),
            None => false,
        }
    }
}
