//! Rank, circuits, chromatic number of partition matroids and exhaustive
//! axiom checking, all expressed through the independence oracle alone.

use serde::Serialize;

use super::{Matroid, PartitionStructure};
use crate::error::{Error, Result};
use crate::set::ElementSet;

pub const DEFAULT_AXIOM_BOUND: usize = 12;

fn check_range<M: Matroid + ?Sized>(m: &M, s: &ElementSet) -> Result<()> {
    let n = m.ground_size();
    match s.max() {
        Some(x) if x >= n => Err(Error::OutOfRange { element: x, n }),
        _ => Ok(()),
    }
}

/// Range-checked independence query.
pub fn is_independent<M: Matroid + ?Sized>(m: &M, s: &ElementSet) -> Result<bool> {
    check_range(m, s)?;
    Ok(m.independent(s))
}

/// Greedily grows a maximal independent subset of `s`, scanning in index order.
pub fn max_independent_subset<M: Matroid + ?Sized>(m: &M, s: &ElementSet) -> Result<ElementSet> {
    check_range(m, s)?;
    let mut basis = ElementSet::new();
    for x in s {
        let grown = basis.with(x);
        if m.independent(&grown) {
            basis = grown;
        }
    }
    Ok(basis)
}

pub fn rank<M: Matroid + ?Sized>(m: &M, s: &ElementSet) -> Result<usize> {
    Ok(max_independent_subset(m, s)?.len())
}

/// Elements `x` with `{x}` dependent.
pub fn loops<M: Matroid + ?Sized>(m: &M) -> Vec<usize> {
    (0..m.ground_size())
        .filter(|&x| !m.independent(&ElementSet::singleton(x)))
        .collect()
}

/// An inclusion-minimal dependent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub elements: ElementSet,
}

/// The unique circuit of `s + x` for independent `s`, or `None` when `s + x`
/// is independent. Costs `|s| + 2` oracle calls: the circuit is `x` together
/// with every `y` whose removal makes room for `x`.
pub fn find_circuit<M: Matroid + ?Sized>(
    m: &M,
    s: &ElementSet,
    x: usize,
) -> Result<Option<Circuit>> {
    check_range(m, &s.with(x))?;
    if s.contains(x) {
        return Err(Error::Contract(format!(
            "find_circuit: element {x} already belongs to the set"
        )));
    }
    if !m.independent(s) {
        return Err(Error::Contract(format!(
            "find_circuit: base set {s:?} is dependent"
        )));
    }
    Ok(circuit_unchecked(m, s, x).map(|elements| Circuit { elements }))
}

/// [`find_circuit`] without the precondition checks: `s` must be independent
/// and must not contain `x`.
pub(crate) fn circuit_unchecked<M: Matroid + ?Sized>(
    m: &M,
    s: &ElementSet,
    x: usize,
) -> Option<ElementSet> {
    let grown = s.with(x);
    if m.independent(&grown) {
        return None;
    }
    let mut elements = ElementSet::singleton(x);
    elements.extend(s.iter().filter(|&y| m.independent(&grown.without(y))));
    Some(elements)
}

/// `max_j ceil(|X_j| / d_j)`, or 1 for an empty partition.
pub fn partition_chromatic(p: &PartitionStructure) -> usize {
    p.parts()
        .iter()
        .zip(p.capacities())
        .map(|(part, &d)| part.len().div_ceil(d))
        .max()
        .unwrap_or(1)
        .max(1)
}

/// First matroid axiom found to fail, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    EmptySet,
    /// `dependent` is a subset of the independent set `superset`.
    Subset {
        dependent: Vec<usize>,
        superset: Vec<usize>,
    },
    /// No element of `larger \ smaller` extends `smaller`.
    Exchange {
        smaller: Vec<usize>,
        larger: Vec<usize>,
    },
    /// Circuits sharing `shared` whose union minus `shared` is independent.
    Circuit {
        first: Vec<usize>,
        second: Vec<usize>,
        shared: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub n: usize,
    pub independent_sets: usize,
    pub circuits: usize,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_matroid(&self) -> bool {
        self.violation.is_none()
    }
}

fn mask_elements(mask: u64) -> Vec<usize> {
    ElementSet::from_mask(mask).to_vec()
}

/// Exhaustively checks the empty-set, subset, exchange and circuit axioms.
/// Refuses ground sets larger than `bound` (the cost is `2^n` oracle calls
/// plus pairwise comparisons).
pub fn axiom_check<M: Matroid + ?Sized>(m: &M, bound: usize) -> Result<AxiomReport> {
    let n = m.ground_size();
    if n > bound || n >= 63 {
        return Err(Error::BoundExceeded { n, bound });
    }
    let total = 1u64 << n;
    let indep: Vec<bool> = (0..total)
        .map(|mask| m.independent(&ElementSet::from_mask(mask)))
        .collect();
    let mut report = AxiomReport {
        n,
        independent_sets: indep.iter().filter(|&&b| b).count(),
        circuits: 0,
        violation: None,
    };

    if !indep[0] {
        report.violation = Some(AxiomViolation::EmptySet);
        return Ok(report);
    }

    // Downward closure is equivalent to: no dependent set has an independent
    // one-element extension.
    for mask in 0..total {
        if indep[mask as usize] {
            continue;
        }
        for x in 0..n {
            let up = mask | (1 << x);
            if up != mask && indep[up as usize] {
                report.violation = Some(AxiomViolation::Subset {
                    dependent: mask_elements(mask),
                    superset: mask_elements(up),
                });
                return Ok(report);
            }
        }
    }

    // With downward closure in place it suffices to compare sizes k and k+1.
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
    for mask in 0..total {
        if indep[mask as usize] {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    for k in 0..n {
        for &small in &by_size[k] {
            for &large in &by_size[k + 1] {
                let candidates = large & !small;
                let ok = (0..n)
                    .filter(|&x| candidates >> x & 1 == 1)
                    .any(|x| indep[(small | 1 << x) as usize]);
                if !ok {
                    report.violation = Some(AxiomViolation::Exchange {
                        smaller: mask_elements(small),
                        larger: mask_elements(large),
                    });
                    return Ok(report);
                }
            }
        }
    }

    let circuits: Vec<u64> = (1..total)
        .filter(|&mask| {
            !indep[mask as usize]
                && (0..n)
                    .filter(|&x| mask >> x & 1 == 1)
                    .all(|x| indep[(mask & !(1 << x)) as usize])
        })
        .collect();
    report.circuits = circuits.len();
    for (i, &c1) in circuits.iter().enumerate() {
        for &c2 in &circuits[i + 1..] {
            let common = c1 & c2;
            for x in (0..n).filter(|&x| common >> x & 1 == 1) {
                let rest = (c1 | c2) & !(1 << x);
                if indep[rest as usize] {
                    report.violation = Some(AxiomViolation::Circuit {
                        first: mask_elements(c1),
                        second: mask_elements(c2),
                        shared: x,
                    });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}
