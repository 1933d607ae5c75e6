use super::{apply_path, build_digraph, Coloring, PathSelector, ShortestPath};
use crate::error::{Error, Result};
use crate::matroid::{loops, rank, Matroid};
use crate::set::ElementSet;

pub(crate) fn reject_loops<M: Matroid + ?Sized>(m: &M) -> Result<()> {
    let found = loops(m);
    if found.is_empty() {
        Ok(())
    } else {
        Err(Error::Input(format!(
            "elements {found:?} are loops and can never be colored"
        )))
    }
}

/// One iteration: rebuild the exchange digraph and augment along the path the
/// selector picks. `None` when no source-sink path exists.
pub fn edmonds_step<M, S>(m: &M, c: &Coloring, selector: &S) -> Result<Option<Coloring>>
where
    M: Matroid + ?Sized,
    S: PathSelector + ?Sized,
{
    let g = build_digraph(m, c)?;
    Ok(selector.select(&g).map(|p| apply_path(c, &p)))
}

/// Colors every element of `m` with at most `alpha` colors, starting from the
/// empty coloring and augmenting once per element. Returns `None` when some
/// iteration finds no source-sink path, which happens exactly when `m` is not
/// `alpha`-colorable.
pub fn color_single<M, S>(m: &M, alpha: usize, selector: &S) -> Result<Option<Coloring>>
where
    M: Matroid + ?Sized,
    S: PathSelector + ?Sized,
{
    reject_loops(m)?;
    let n = m.ground_size();
    if alpha == 0 {
        return Ok((n == 0).then(|| Coloring::empty(0, 0)));
    }
    let mut c = Coloring::empty(n, alpha);
    for colored in 0..n {
        match edmonds_step(m, &c, selector)? {
            Some(next) => {
                debug_assert_eq!(next.colored_count(), colored + 1);
                c = next;
            }
            None => return Ok(None),
        }
    }
    Ok(Some(c))
}

/// `χ(M)`, 0 for an empty ground set.
///
/// Starts from `ceil(n / r(X))` colors and augments with the shortest-path
/// selector. Whenever no source-sink path exists the matroid is not
/// colorable with the current palette, so one color is added and the partial
/// coloring is kept.
pub fn chromatic_number<M: Matroid + ?Sized>(m: &M) -> Result<usize> {
    let n = m.ground_size();
    if n == 0 {
        return Ok(0);
    }
    reject_loops(m)?;
    let r = rank(m, &ElementSet::full(n))?;
    let mut c = Coloring::empty(n, n.div_ceil(r));
    while !c.is_total() {
        match edmonds_step(m, &c, &ShortestPath)? {
            Some(next) => c = next,
            None => c = c.with_palette(c.num_colors() + 1)?,
        }
    }
    Ok(c.num_colors())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edmonds::{verify_coloring, DfsChordless};
    use crate::fixtures;
    use crate::matroid::{GraphicStructure, MatroidOracle};

    fn k4() -> MatroidOracle {
        MatroidOracle::graphic(GraphicStructure::new(
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        ))
        .unwrap()
    }

    #[test]
    fn laminar_example_two_colors() {
        let m = fixtures::laminar_six();
        for c in [
            color_single(&m, 2, &ShortestPath).unwrap().unwrap(),
            color_single(&m, 2, &DfsChordless::default())
                .unwrap()
                .unwrap(),
        ] {
            assert!(c.is_total());
            assert!(verify_coloring(&[&m], &c).is_feasible());
        }
        assert_eq!(color_single(&m, 1, &ShortestPath).unwrap(), None);
        assert_eq!(chromatic_number(&m).unwrap(), 2);
    }

    #[test]
    fn alpha_n_always_works() {
        let m = k4();
        let c = color_single(&m, 6, &ShortestPath).unwrap().unwrap();
        assert!(c.is_total());
    }

    #[test]
    fn uniform_two_of_five() {
        let m = MatroidOracle::uniform(5, 2);
        assert_eq!(color_single(&m, 2, &ShortestPath).unwrap(), None);
        assert!(color_single(&m, 3, &ShortestPath).unwrap().is_some());
        assert_eq!(chromatic_number(&m).unwrap(), 3);
    }

    #[test]
    fn free_matroid_and_k4() {
        assert_eq!(chromatic_number(&MatroidOracle::uniform(7, 7)).unwrap(), 1);
        assert_eq!(chromatic_number(&k4()).unwrap(), 2);
        assert_eq!(chromatic_number(&MatroidOracle::uniform(0, 0)).unwrap(), 0);
    }

    #[test]
    fn loops_are_rejected() {
        let m = MatroidOracle::graphic(GraphicStructure::new(2, vec![(0, 1), (1, 1)])).unwrap();
        assert!(matches!(
            color_single(&m, 2, &ShortestPath),
            Err(Error::Input(_))
        ));
        assert!(chromatic_number(&m).is_err());
    }
}
