use serde::Serialize;

use super::Coloring;
use crate::matroid::Matroid;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassVerdict {
    pub color: usize,
    pub size: usize,
    pub independent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatroidVerdict {
    pub classes: Vec<ClassVerdict>,
    pub feasible: bool,
}

/// Per-matroid, per-class independence of a coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub matroids: Vec<MatroidVerdict>,
    pub uncolored: Vec<usize>,
}

impl VerifyReport {
    /// Every nonempty class independent in every matroid.
    pub fn is_feasible(&self) -> bool {
        self.matroids.iter().all(|m| m.feasible)
    }

    /// `(matroid index, color)` of the first dependent class.
    pub fn first_violation(&self) -> Option<(usize, usize)> {
        self.matroids.iter().enumerate().find_map(|(i, m)| {
            m.classes
                .iter()
                .find(|c| !c.independent)
                .map(|c| (i, c.color))
        })
    }
}

pub fn verify_coloring(ms: &[&dyn Matroid], c: &Coloring) -> VerifyReport {
    let classes = c.classes();
    let matroids = ms
        .iter()
        .map(|m| {
            let classes: Vec<ClassVerdict> = classes
                .iter()
                .enumerate()
                .filter(|(_, s)| !s.is_empty())
                .map(|(i, s)| ClassVerdict {
                    color: i + 1,
                    size: s.len(),
                    independent: m.independent(s),
                })
                .collect();
            let feasible = classes.iter().all(|v| v.independent);
            MatroidVerdict { classes, feasible }
        })
        .collect();
    VerifyReport {
        matroids,
        uncolored: c.uncolored().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edmonds::{apply_path, AugmentingPath, Vertex};
    use crate::fixtures;

    #[test]
    fn laminar_example_is_feasible() {
        let m = fixtures::laminar_six();
        let c = apply_path(
            &fixtures::laminar_six_coloring(),
            &AugmentingPath::new(vec![
                Vertex::Color(1),
                Vertex::Element(1),
                Vertex::Element(5),
            ])
            .unwrap(),
        );
        let r = verify_coloring(&[&m], &c);
        assert!(r.is_feasible());
        assert!(r.uncolored.is_empty());
    }

    #[test]
    fn empty_coloring_is_vacuously_feasible() {
        let m = fixtures::laminar_six();
        let r = verify_coloring(&[&m], &Coloring::empty(6, 2));
        assert!(r.is_feasible());
        assert_eq!(r.uncolored, vec![0, 1, 2, 3, 4, 5]);
        assert!(r.matroids[0].classes.is_empty());
    }

    #[test]
    fn rejected_candidate_breaks_the_partition() {
        // Prefixing (3, x3, x6) instead of (1, x3, x6): x2 and x3 share color 3.
        let m2 = fixtures::pairs_six();
        let c = apply_path(
            &fixtures::intersection_six_coloring(),
            &AugmentingPath::new(vec![
                Vertex::Color(3),
                Vertex::Element(2),
                Vertex::Element(5),
            ])
            .unwrap(),
        );
        assert_eq!(c.color(1), 3);
        assert_eq!(c.color(2), 3);
        let r = verify_coloring(&[&m2], &c);
        assert!(!r.is_feasible());
        assert_eq!(r.first_violation(), Some((0, 3)));
    }
}
