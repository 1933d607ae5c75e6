//! The `matroid-chroma/1` JSON instance format.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::applications::{RainbowInstance, SimpleGraph};
use crate::edmonds::Coloring;
use crate::intersection::IntersectionInstance;
use crate::matroid::{
    loops, ExplicitStructure, GraphicStructure, GroundSet, LaminarStructure, Matroid,
    MatroidOracle, PartitionStructure, Structure, TransversalStructure,
};
use crate::set::ElementSet;

pub const SCHEMA: &str = "matroid-chroma/1";

/// On-disk form of an instance. Nothing beyond JSON shape is checked until
/// [`InstanceFile::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema: String,
    pub ground: GroundSet,
    pub matroids: Vec<MatroidEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub application: Option<ApplicationEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    content = "data",
    rename_all = "lowercase",
    deny_unknown_fields
)]
pub enum MatroidEntry {
    Uniform {
        rank: usize,
    },
    Partition {
        parts: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        capacities: Option<Vec<usize>>,
    },
    Laminar(LaminarStructure),
    Graphic(GraphicStructure),
    Transversal(TransversalStructure),
    /// Independent sets as element lists.
    Explicit {
        independent: Vec<Vec<usize>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    tag = "kind",
    content = "data",
    rename_all = "lowercase",
    deny_unknown_fields
)]
pub enum ApplicationEntry {
    Rainbow {
        blocks: Vec<Vec<usize>>,
    },
    Strong {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl MatroidEntry {
    fn into_structure(self) -> crate::Result<Structure> {
        Ok(match self {
            MatroidEntry::Uniform { rank } => Structure::Uniform { rank },
            MatroidEntry::Partition { parts, capacities } => {
                Structure::Partition(PartitionStructure::new(parts, capacities)?)
            }
            MatroidEntry::Laminar(l) => Structure::Laminar(l),
            MatroidEntry::Graphic(g) => Structure::Graphic(g),
            MatroidEntry::Transversal(t) => Structure::Transversal(t),
            MatroidEntry::Explicit { independent } => {
                let mut masks = Vec::with_capacity(independent.len());
                for (i, set) in independent.iter().enumerate() {
                    if let Some(&x) = set.iter().find(|&&x| x >= 64) {
                        return Err(crate::Error::Input(format!(
                            "independent[{i}] contains element {x}; explicit matroids stop at 64"
                        )));
                    }
                    masks.push(set.iter().fold(0u64, |m, &x| m | 1 << x));
                }
                Structure::Explicit(ExplicitStructure::new(masks))
            }
        })
    }

    pub fn from_structure(s: &Structure) -> Self {
        match s.clone() {
            Structure::Uniform { rank } => MatroidEntry::Uniform { rank },
            Structure::Partition(p) => MatroidEntry::Partition {
                parts: p.parts().to_vec(),
                capacities: (!p.capacities().iter().all(|&d| d == 1))
                    .then(|| p.capacities().to_vec()),
            },
            Structure::Laminar(l) => MatroidEntry::Laminar(l),
            Structure::Graphic(g) => MatroidEntry::Graphic(g),
            Structure::Transversal(t) => MatroidEntry::Transversal(t),
            Structure::Explicit(e) => MatroidEntry::Explicit {
                independent: e
                    .independent
                    .iter()
                    .map(|&m| ElementSet::from_mask(m).to_vec())
                    .collect(),
            },
        }
    }
}

#[derive(Debug)]
pub enum LoadError {
    Io {
        path: String,
        source: std::io::Error,
    },
    /// Malformed JSON or a field of the wrong shape.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed JSON describing an invalid instance. `field` is a path
    /// such as `matroids[1].data`.
    Validation { field: String, message: String },
}

impl LoadError {
    /// Short machine-readable class: `io`, `parse` or `validation`.
    pub fn code(&self) -> &'static str {
        match self {
            LoadError::Io { .. } => "io",
            LoadError::Parse { .. } => "parse",
            LoadError::Validation { .. } => "validation",
        }
    }

    fn validation(field: impl Into<String>, message: impl fmt::Display) -> Self {
        LoadError::Validation {
            field: field.into(),
            message: message.to_string(),
        }
    }
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io { path, source } => write!(f, "{path}: {source}"),
            LoadError::Parse {
                line,
                column,
                message,
            } => write!(f, "parse error at line {line}, column {column}: {message}"),
            LoadError::Validation { field, message } => write!(f, "{field}: {message}"),
        }
    }
}

impl std::error::Error for LoadError {}

#[derive(Debug, Clone)]
pub enum Application {
    Rainbow(RainbowInstance),
    Strong(SimpleGraph),
}

/// A validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub ground: GroundSet,
    pub matroids: Vec<MatroidOracle>,
    pub alpha: Option<usize>,
    pub coloring: Option<Coloring>,
    pub application: Option<Application>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    /// Accept matroids with loops (only useful for axiom checking).
    pub allow_loops: bool,
}

impl InstanceFile {
    pub fn new(ground: GroundSet, matroids: &[MatroidOracle]) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            ground,
            matroids: matroids
                .iter()
                .map(|m| MatroidEntry::from_structure(m.structure()))
                .collect(),
            alpha: None,
            coloring: None,
            application: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, LoadError> {
        serde_json::from_str(text).map_err(|e| {
            let full = e.to_string();
            let suffix = format!(" at line {} column {}", e.line(), e.column());
            LoadError::Parse {
                line: e.line(),
                column: e.column(),
                message: full.strip_suffix(&suffix).unwrap_or(&full).to_string(),
            }
        })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance files serialize");
        s.push('\n');
        s
    }

    pub fn validate(&self, opts: LoadOptions) -> Result<Instance, LoadError> {
        if self.schema != SCHEMA {
            return Err(LoadError::validation(
                "schema",
                format!("expected \"{SCHEMA}\", found \"{}\"", self.schema),
            ));
        }
        self.ground
            .validate()
            .map_err(|e| LoadError::validation("ground", e))?;
        let n = self.ground.n;

        let mut matroids = Vec::with_capacity(self.matroids.len());
        for (i, entry) in self.matroids.iter().enumerate() {
            let field = format!("matroids[{i}].data");
            let m = entry
                .clone()
                .into_structure()
                .and_then(|s| MatroidOracle::new(self.ground.clone(), s))
                .map_err(|e| LoadError::validation(&field, e))?;
            if !opts.allow_loops {
                let found = loops(&m);
                if !found.is_empty() {
                    return Err(LoadError::validation(
                        &field,
                        format!("elements {found:?} are loops"),
                    ));
                }
            }
            matroids.push(m);
        }

        let coloring = match &self.coloring {
            None => None,
            Some(colors) => {
                if colors.len() != n {
                    return Err(LoadError::validation(
                        "coloring",
                        format!("{} entries for {n} elements", colors.len()),
                    ));
                }
                let palette = colors.iter().copied().max().unwrap_or(0);
                Some(Coloring::from_colors(colors.clone(), palette))
            }
        };

        let application = match &self.application {
            None => None,
            Some(app) => {
                if self.matroids.len() != 1 {
                    return Err(LoadError::validation(
                        "matroids",
                        format!(
                            "applications take exactly one matroid, found {}",
                            self.matroids.len()
                        ),
                    ));
                }
                Some(match app {
                    ApplicationEntry::Rainbow { blocks } => Application::Rainbow(
                        RainbowInstance::new(matroids[0].clone(), blocks.clone())
                            .map_err(|e| LoadError::validation("application.data.blocks", e))?,
                    ),
                    ApplicationEntry::Strong { vertices, edges } => {
                        if *vertices != n {
                            return Err(LoadError::validation(
                                "application.data.vertices",
                                format!("graph has {vertices} vertices, ground set has {n}"),
                            ));
                        }
                        Application::Strong(
                            SimpleGraph::new(*vertices, edges.clone())
                                .map_err(|e| LoadError::validation("application.data.edges", e))?,
                        )
                    }
                })
            }
        };

        Ok(Instance {
            ground: self.ground.clone(),
            matroids,
            alpha: self.alpha,
            coloring,
            application,
        })
    }
}

impl Instance {
    /// `matroids[0]` as `M_1`, every later matroid as a partition matroid.
    pub fn intersection(&self) -> Result<IntersectionInstance, LoadError> {
        let (m1, rest) = self
            .matroids
            .split_first()
            .ok_or_else(|| LoadError::validation("matroids", "no matroids given"))?;
        let mut partitions = Vec::with_capacity(rest.len());
        for (i, m) in rest.iter().enumerate() {
            let p = m.as_partition().ok_or_else(|| {
                LoadError::validation(
                    format!("matroids[{}].kind", i + 1),
                    format!("expected partition, found {}", m.kind()),
                )
            })?;
            partitions.push(p.clone());
        }
        IntersectionInstance::new(m1.clone(), partitions, self.alpha)
            .map_err(|e| LoadError::validation("matroids", e))
    }

    pub fn to_file(&self) -> InstanceFile {
        let mut file = InstanceFile::new(self.ground.clone(), &self.matroids);
        file.alpha = self.alpha;
        file.coloring = self.coloring.as_ref().map(|c| c.as_slice().to_vec());
        file.application = self.application.as_ref().map(|a| match a {
            Application::Rainbow(r) => ApplicationEntry::Rainbow {
                blocks: r.blocks().to_vec(),
            },
            Application::Strong(g) => ApplicationEntry::Strong {
                vertices: g.vertex_count(),
                edges: g.edges().to_vec(),
            },
        });
        file
    }

    pub fn matroid_refs(&self) -> Vec<&dyn Matroid> {
        self.matroids.iter().map(|m| m as &dyn Matroid).collect()
    }
}

pub fn parse_instance(text: &str, opts: LoadOptions) -> Result<Instance, LoadError> {
    InstanceFile::parse(text)?.validate(opts)
}

pub fn load_instance(path: &Path) -> Result<Instance, LoadError> {
    load_instance_with(path, LoadOptions::default())
}

pub fn load_instance_with(path: &Path, opts: LoadOptions) -> Result<Instance, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_instance(&text, opts)
}

pub fn save_instance(path: &Path, file: &InstanceFile) -> std::io::Result<()> {
    std::fs::write(path, file.to_json())
}
