//! Radius-parameterized builders for extremal examples, test solids and flat tilings.
//!
//! Infinite examples are a finite curved core surrounded by a flat collar
//! (see [`collar`]); the returned window is the ball of the requested radius
//! around the core's vertex set. Closed solids ignore the radius.

mod collar;
pub(crate) mod core;
mod cyclo;
mod figures;
mod solids;

use serde::Serialize;

use crate::curv::Curv;
use crate::patterns::Pattern;
use crate::tess::{TessError, Tessellation};

#[derive(Debug, thiserror::Error)]
pub enum GenError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Tess(#[from] TessError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    /// Finite polyhedral surface; the radius is ignored.
    Closed,
    /// Window of an infinite planar graph.
    Infinite,
    /// Window of an infinite planar graph with boundary.
    WithBoundary,
}

/// One entry of the declared curved-vertex set: `count` vertices of pattern `pattern`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreEntry {
    pub pattern: Pattern,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    pub name: &'static str,
    pub kind: GenKind,
    pub description: &'static str,
    pub declared_total: Curv,
    /// Patterns of the curved vertices. Boundary vertices list only the faces they touch.
    pub declared_core: Vec<CoreEntry>,
    /// Connected components of the curved-vertex set.
    pub declared_components: usize,
    /// Smallest radius at which every core vertex is interior.
    pub min_radius: usize,
}

impl GeneratorSpec {
    pub fn curved_vertex_count(&self) -> usize {
        self.declared_core.iter().map(|e| e.count).sum()
    }
}

type Build = fn(usize) -> Result<Tessellation, GenError>;

struct Entry {
    spec: GeneratorSpec,
    build: Build,
}

#[allow(clippy::too_many_arguments)]
fn entry(
    name: &'static str,
    kind: GenKind,
    description: &'static str,
    total: Curv,
    core: &[(&[usize], usize)],
    components: usize,
    min_radius: usize,
    build: Build,
) -> Entry {
    let declared_core = core
        .iter()
        .map(|&(p, count)| CoreEntry { pattern: Pattern::new(p.to_vec()), count })
        .collect();
    Entry {
        spec: GeneratorSpec {
            name,
            kind,
            description,
            declared_total: total,
            declared_core,
            declared_components: components,
            min_radius,
        },
        build,
    }
}

fn registry() -> Vec<Entry> {
    let mut all = figures::entries();
    all.extend(cyclo::entries());
    all.extend(solids::entries());
    all.sort_by(|a, b| a.spec.name.cmp(b.spec.name));
    all
}

/// Every generator with its declared data, ascending by name.
pub fn catalog() -> Vec<GeneratorSpec> {
    registry().into_iter().map(|e| e.spec).collect()
}

pub fn spec(name: &str) -> Result<GeneratorSpec, GenError> {
    registry()
        .into_iter()
        .find(|e| e.spec.name == name)
        .map(|e| e.spec)
        .ok_or_else(|| GenError::UnknownGenerator(name.to_string()))
}

pub fn generate(name: &str, radius: usize) -> Result<Tessellation, GenError> {
    let e = registry()
        .into_iter()
        .find(|e| e.spec.name == name)
        .ok_or_else(|| GenError::UnknownGenerator(name.to_string()))?;
    (e.build)(radius)
}
