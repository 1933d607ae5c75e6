use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Assignment of every element to a color in `1..=num_colors`, or to 0 for
/// "uncolored". Feasibility of the classes is not tracked here; see
/// [`verify_coloring`](super::verify_coloring).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// All `n` elements uncolored.
    pub fn empty(n: usize, num_colors: usize) -> Self {
        Self {
            colors: vec![0; n],
            num_colors,
        }
    }

    /// # Panics
    /// If some color exceeds `num_colors`.
    pub fn from_colors(colors: Vec<usize>, num_colors: usize) -> Self {
        Self::try_from_colors(colors, num_colors).expect("color out of palette")
    }

    pub fn try_from_colors(colors: Vec<usize>, num_colors: usize) -> Result<Self> {
        if let Some((x, &col)) = colors.iter().enumerate().find(|(_, &c)| c > num_colors) {
            return Err(Error::Input(format!(
                "element {x} has color {col}, palette has {num_colors}"
            )));
        }
        Ok(Self { colors, num_colors })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, x: usize) -> usize {
        self.colors[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    pub(crate) fn set(&mut self, x: usize, color: usize) {
        debug_assert!(color <= self.num_colors);
        self.colors[x] = color;
    }

    /// Same assignment over a palette of `num_colors` (must not shrink below
    /// the largest color in use).
    pub fn with_palette(&self, num_colors: usize) -> Result<Self> {
        Self::try_from_colors(self.colors.clone(), num_colors)
    }

    /// Color class `S_i` for `1 <= i <= num_colors`.
    pub fn class(&self, color: usize) -> ElementSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == color)
            .map(|(x, _)| x)
            .collect()
    }

    /// `S_1..S_num_colors`, indexed from 0.
    pub fn classes(&self) -> Vec<ElementSet> {
        let mut classes = vec![ElementSet::new(); self.num_colors];
        for (x, &c) in self.colors.iter().enumerate() {
            if c > 0 {
                classes[c - 1].insert(x);
            }
        }
        classes
    }

    pub fn uncolored(&self) -> ElementSet {
        self.class(0)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c > 0).count()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|&c| c > 0)
    }

    /// Number of nonempty color classes.
    pub fn colors_used(&self) -> usize {
        let mut used = vec![false; self.num_colors + 1];
        for &c in &self.colors {
            used[c] = true;
        }
        used[1..].iter().filter(|&&u| u).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_and_counts() {
        let c = Coloring::from_colors(vec![2, 2, 1, 2, 1, 0], 3);
        assert_eq!(c.class(1).to_vec(), vec![2, 4]);
        assert_eq!(c.classes()[1].to_vec(), vec![0, 1, 3]);
        assert!(c.classes()[2].is_empty());
        assert_eq!(c.uncolored().to_vec(), vec![5]);
        assert_eq!(c.colored_count(), 5);
        assert_eq!(c.colors_used(), 2);
        assert!(!c.is_total());
    }

    #[test]
    fn palette_is_enforced() {
        assert!(Coloring::try_from_colors(vec![3], 2).is_err());
        let c = Coloring::from_colors(vec![2, 1], 2);
        assert!(c.with_palette(1).is_err());
        assert_eq!(c.with_palette(5).unwrap().num_colors(), 5);
    }
}
