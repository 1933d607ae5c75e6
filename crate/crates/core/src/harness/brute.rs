//! Exhaustive chromatic numbers for small set systems.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;

pub const DEFAULT_BRUTE_BOUND: usize = 10;

/// Exact `χ` of the intersection of `ms`: the fewest colors such that every
/// class is independent in every matroid. Refuses ground sets above `max_n`.
pub fn brute_chromatic(ms: &[&dyn Matroid], max_n: usize) -> Result<usize> {
    let n = ground_of(ms)?;
    if n > max_n {
        return Err(Error::BoundExceeded { n, bound: max_n });
    }
    brute_chromatic_by(n, |s| ms.iter().all(|m| m.independent(s)))
        .map(|(k, _)| k)
        .ok_or_else(|| Error::Input("some element is dependent on its own".into()))
}

fn ground_of(ms: &[&dyn Matroid]) -> Result<usize> {
    let n = ms.first().map_or(0, |m| m.ground_size());
    if let Some(m) = ms.iter().find(|m| m.ground_size() != n) {
        return Err(Error::Input(format!(
            "matroids disagree on the ground set: {n} vs {}",
            m.ground_size()
        )));
    }
    Ok(n)
}

/// Minimum number of classes, and a witness assignment (colors from 1), for
/// covering `0..n` by sets accepted by `independent`. `independent` must be
/// closed under taking subsets. `None` if some singleton is rejected.
///
/// Elements are placed in index order and a new class may only be opened as
/// the next unused color, so every partition is visited once.
pub fn brute_chromatic_by(
    n: usize,
    independent: impl Fn(&ElementSet) -> bool,
) -> Option<(usize, Vec<usize>)> {
    if (0..n).any(|x| !independent(&ElementSet::singleton(x))) {
        return None;
    }
    (0..=n).find_map(|k| search(n, k, &independent, true).map(|c| (k, c)))
}

/// [`brute_chromatic_by`] without symmetry breaking: every element may take
/// any of the `k` colors. Exponentially slower; kept as a cross-check.
pub fn brute_chromatic_unordered(
    n: usize,
    independent: impl Fn(&ElementSet) -> bool,
) -> Option<usize> {
    if (0..n).any(|x| !independent(&ElementSet::singleton(x))) {
        return None;
    }
    (0..=n).find(|&k| search(n, k, &independent, false).is_some())
}

fn search(
    n: usize,
    k: usize,
    independent: &impl Fn(&ElementSet) -> bool,
    ordered: bool,
) -> Option<Vec<usize>> {
    fn go(
        x: usize,
        n: usize,
        classes: &mut Vec<ElementSet>,
        k: usize,
        assign: &mut Vec<usize>,
        independent: &impl Fn(&ElementSet) -> bool,
        ordered: bool,
    ) -> bool {
        if x == n {
            return true;
        }
        let open = if ordered {
            (classes.iter().filter(|c| !c.is_empty()).count() + 1).min(k)
        } else {
            k
        };
        for color in 0..open {
            let grown = classes[color].with(x);
            if !independent(&grown) {
                continue;
            }
            let old = std::mem::replace(&mut classes[color], grown);
            assign[x] = color + 1;
            if go(x + 1, n, classes, k, assign, independent, ordered) {
                return true;
            }
            classes[color] = old;
        }
        false
    }

    let mut classes = vec![ElementSet::new(); k];
    let mut assign = vec![0; n];
    go(0, n, &mut classes, k, &mut assign, independent, ordered).then_some(assign)
}
