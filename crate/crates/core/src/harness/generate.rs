//! Seeded random instances.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::format::{ApplicationEntry, InstanceFile};
use crate::error::{Error, Result};
use crate::matroid::{
    GraphicStructure, GroundSet, LaminarStructure, MatroidOracle, PartitionStructure, Structure,
    TransversalStructure,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Partition,
    Laminar,
    Graphic,
    Transversal,
    Uniform,
    Rainbow,
    Strong,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Partition,
        Family::Laminar,
        Family::Graphic,
        Family::Transversal,
        Family::Uniform,
        Family::Rainbow,
        Family::Strong,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Partition => "partition",
            Family::Laminar => "laminar",
            Family::Graphic => "graphic",
            Family::Transversal => "transversal",
            Family::Uniform => "uniform",
            Family::Rainbow => "rainbow",
            Family::Strong => "strong",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                format!("unknown family {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Size parameters. Which fields matter depends on the family:
///
/// * matroid families: `n` elements and `partitions` extra partition
///   matroids; graphic also uses `vertices`.
/// * `rainbow`: `blocks` random spanning trees on `vertices` vertices, plus
///   `n` further edges outside every block.
/// * `strong`: a graph on `vertices` vertices with degrees at most
///   `max_degree`, and a random matroid on its vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenParams {
    pub n: usize,
    pub partitions: usize,
    pub vertices: usize,
    pub blocks: usize,
    pub max_degree: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            n: 8,
            partitions: 1,
            vertices: 5,
            blocks: 2,
            max_degree: 3,
        }
    }
}

pub fn generate(seed: u64, family: Family, params: &GenParams) -> Result<InstanceFile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rng = &mut rng;
    match family {
        Family::Rainbow => rainbow(rng, params),
        Family::Strong => strong(rng, params),
        _ => {
            let n = params.n;
            let m1 = match family {
                Family::Partition => Structure::Partition(random_partition(rng, n)),
                Family::Laminar => Structure::Laminar(random_laminar(rng, n)),
                Family::Graphic => Structure::Graphic(random_graphic(rng, n, params.vertices)?),
                Family::Transversal => Structure::Transversal(random_transversal(rng, n)),
                Family::Uniform => Structure::Uniform {
                    rank: if n == 0 { 0 } else { rng.gen_range(1..=n) },
                },
                Family::Rainbow | Family::Strong => unreachable!(),
            };
            let mut ms = vec![MatroidOracle::new(GroundSet::new(n), m1)?];
            for _ in 0..params.partitions {
                ms.push(MatroidOracle::partition(random_partition(rng, n)));
            }
            Ok(InstanceFile::new(GroundSet::new(n), &ms))
        }
    }
}

/// Random parts with capacities mostly 1.
pub fn random_partition(rng: &mut impl Rng, n: usize) -> PartitionStructure {
    if n == 0 {
        return PartitionStructure::new(vec![], None).expect("empty partition");
    }
    let count = rng.gen_range(1..=n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut parts = vec![Vec::new(); count];
    for (i, &x) in order.iter().enumerate() {
        let j = if i < count {
            i
        } else {
            rng.gen_range(0..count)
        };
        parts[j].push(x);
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort();
    let capacities = parts
        .iter()
        .map(|p| {
            if p.len() > 1 && rng.gen_bool(0.25) {
                rng.gen_range(1..p.len())
            } else {
                1
            }
        })
        .collect();
    PartitionStructure::new(parts, Some(capacities)).expect("generated partition is valid")
}

/// Random laminar family by recursive splitting of a shuffled ground set.
pub fn random_laminar(rng: &mut impl Rng, n: usize) -> LaminarStructure {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut family = Vec::new();
    let mut capacities = Vec::new();
    let mut stack = vec![order];
    while let Some(block) = stack.pop() {
        if block.is_empty() {
            continue;
        }
        if block.len() > 1 || rng.gen_bool(0.3) {
            let mut set = block.clone();
            set.sort_unstable();
            capacities.push(rng.gen_range(1..=set.len().max(1)));
            family.push(set);
        }
        if block.len() > 1 {
            let pieces = rng.gen_range(1..=3.min(block.len()));
            let mut cuts: Vec<usize> = (0..pieces - 1)
                .map(|_| rng.gen_range(1..block.len()))
                .collect();
            cuts.push(0);
            cuts.push(block.len());
            cuts.sort_unstable();
            cuts.dedup();
            if cuts.len() == 2 {
                // One piece: shrink it so the recursion terminates.
                stack.push(block[1..].to_vec());
            } else {
                for w in cuts.windows(2) {
                    stack.push(block[w[0]..w[1]].to_vec());
                }
            }
        }
    }
    LaminarStructure::new(family, capacities)
}

/// Loopless multigraph with `n` edges on `vertices` vertices.
pub fn random_graphic(rng: &mut impl Rng, n: usize, vertices: usize) -> Result<GraphicStructure> {
    if n > 0 && vertices < 2 {
        return Err(Error::Input(format!(
            "{n} loopless edges need at least 2 vertices, got {vertices}"
        )));
    }
    let edges = (0..n).map(|_| random_edge(rng, vertices)).collect();
    Ok(GraphicStructure::new(vertices, edges))
}

fn random_edge(rng: &mut impl Rng, vertices: usize) -> (usize, usize) {
    let u = rng.gen_range(0..vertices);
    let mut v = rng.gen_range(0..vertices - 1);
    if v >= u {
        v += 1;
    }
    (u.min(v), u.max(v))
}

pub fn random_transversal(rng: &mut impl Rng, n: usize) -> TransversalStructure {
    let right = if n == 0 { 0 } else { rng.gen_range(1..=n) };
    let adjacency = (0..n)
        .map(|_| {
            let k = rng.gen_range(1..=3.min(right));
            let mut adj: Vec<usize> = rand::seq::index::sample(rng, right, k).into_vec();
            adj.sort_unstable();
            adj
        })
        .collect();
    TransversalStructure::new(right, adjacency)
}

/// Random spanning tree on `vertices` vertices by random attachment.
fn random_tree(rng: &mut impl Rng, vertices: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..vertices).collect();
    order.shuffle(rng);
    (1..vertices)
        .map(|i| {
            let (u, v) = (order[i], order[rng.gen_range(0..i)]);
            (u.min(v), u.max(v))
        })
        .collect()
}

fn rainbow(rng: &mut impl Rng, p: &GenParams) -> Result<InstanceFile> {
    if p.vertices < 2 && (p.blocks > 0 || p.n > 0) {
        return Err(Error::Input(format!(
            "rainbow instances need at least 2 vertices, got {}",
            p.vertices
        )));
    }
    let mut edges: Vec<((usize, usize), Option<usize>)> = Vec::new();
    for b in 0..p.blocks {
        edges.extend(
            random_tree(rng, p.vertices)
                .into_iter()
                .map(|e| (e, Some(b))),
        );
    }
    for _ in 0..p.n {
        edges.push((random_edge(rng, p.vertices), None));
    }
    edges.shuffle(rng);
    let mut blocks = vec![Vec::new(); p.blocks];
    for (i, &(_, b)) in edges.iter().enumerate() {
        if let Some(b) = b {
            blocks[b].push(i);
        }
    }
    let g = GraphicStructure::new(p.vertices, edges.iter().map(|&(e, _)| e).collect());
    let m = MatroidOracle::graphic(g)?;
    let mut file = InstanceFile::new(GroundSet::new(edges.len()), &[m]);
    file.application = Some(ApplicationEntry::Rainbow { blocks });
    Ok(file)
}

fn strong(rng: &mut impl Rng, p: &GenParams) -> Result<InstanceFile> {
    let v = p.vertices;
    let mut degree = vec![0; v];
    let mut edges = Vec::new();
    if v >= 2 && p.max_degree > 0 {
        let attempts = v * p.max_degree;
        for _ in 0..attempts {
            let (a, b) = random_edge(rng, v);
            if degree[a] < p.max_degree && degree[b] < p.max_degree && !edges.contains(&(a, b)) {
                degree[a] += 1;
                degree[b] += 1;
                edges.push((a, b));
            }
        }
    }
    let structure = match rng.gen_range(0..4) {
        0 => Structure::Partition(random_partition(rng, v)),
        1 => Structure::Laminar(random_laminar(rng, v)),
        2 => Structure::Transversal(random_transversal(rng, v)),
        _ => Structure::Uniform {
            rank: if v == 0 { 0 } else { rng.gen_range(1..=v) },
        },
    };
    let m = MatroidOracle::new(GroundSet::new(v), structure)?;
    let mut file = InstanceFile::new(GroundSet::new(v), &[m]);
    file.application = Some(ApplicationEntry::Strong { vertices: v, edges });
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::format::LoadOptions;
    use crate::matroid::{rank, Matroid};

    #[test]
    fn every_family_validates() {
        let params = GenParams {
            n: 9,
            partitions: 2,
            vertices: 6,
            blocks: 3,
            max_degree: 3,
        };
        for family in Family::ALL {
            for seed in 0..20 {
                let file = generate(seed, family, &params).unwrap();
                file.validate(LoadOptions::default())
                    .unwrap_or_else(|e| panic!("{family} seed {seed}: {e}"));
                assert_eq!(file, generate(seed, family, &params).unwrap());
            }
        }
    }

    #[test]
    fn empty_sizes() {
        let params = GenParams {
            n: 0,
            partitions: 2,
            vertices: 0,
            blocks: 0,
            max_degree: 0,
        };
        for family in Family::ALL {
            let inst = generate(1, family, &params)
                .unwrap()
                .validate(LoadOptions::default())
                .unwrap();
            assert_eq!(inst.ground.n, 0);
        }
    }

    #[test]
    fn rainbow_blocks_are_bases_when_m_equals_r() {
        let params = GenParams {
            n: 0,
            partitions: 0,
            vertices: 5,
            blocks: 4,
            max_degree: 0,
        };
        let inst = generate(7, Family::Rainbow, &params)
            .unwrap()
            .validate(LoadOptions::default())
            .unwrap();
        let m = &inst.matroids[0];
        let r = rank(m, &crate::ElementSet::full(m.ground_size())).unwrap();
        assert_eq!(r, 4);
        let Some(super::super::format::Application::Rainbow(ri)) = &inst.application else {
            panic!("rainbow application expected");
        };
        assert_eq!(ri.blocks().len(), r);
        assert!(ri.blocks().iter().all(|b| b.len() == r));
    }

    #[test]
    fn infeasible_params() {
        let params = GenParams {
            n: 3,
            vertices: 1,
            ..GenParams::default()
        };
        assert!(generate(0, Family::Graphic, &params).is_err());
        assert!(generate(0, Family::Rainbow, &params).is_err());
    }
}
