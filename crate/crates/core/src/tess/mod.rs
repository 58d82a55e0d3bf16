//! Finite tessellation patches: closed surfaces, windows of infinite graphs
//! (with `Frontier` vertices) and graphs with boundary.
//!
//! Faces are stored explicitly as boundary walks; edges, neighbour lists and
//! the rotation system are derived at construction. Identifiers are dense and
//! assigned in insertion order, and every enumeration in this crate runs in
//! ascending identifier order.

mod format;
mod metric;
mod star;
mod validate;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

pub use format::{FormatError, PatchFile, FORMAT_NAME, FORMAT_VERSION};
pub use metric::SubPatch;
pub use star::{canonical_cycle, cyclic_arrangements, VertexStar};
pub use validate::{ValidationReport, Violation};

pub type VertexId = usize;
pub type FaceId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexStatus {
    /// Full face star known.
    Interior,
    /// Star possibly incomplete: the vertex sits on the cut of a truncated window.
    Frontier,
    /// Vertex on the boundary curve of a graph with boundary; its one-sided star is complete.
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TessError {
    #[error("face {face} references unknown vertex {vertex}")]
    UnknownVertex { face: FaceId, vertex: VertexId },
    #[error("face {face} has {len} vertices; at least 3 are required")]
    DegenerateFace { face: FaceId, len: usize },
    #[error("face {face} contains a self-loop at vertex {vertex}")]
    SelfLoop { face: FaceId, vertex: VertexId },
    #[error("edge {u}-{v} is used by {sides} face sides (multi-edge)")]
    MultiEdge { u: VertexId, v: VertexId, sides: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub ends: (VertexId, VertexId),
    /// Incident faces, ascending; a face using the edge twice appears twice.
    pub faces: Vec<FaceId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct VertexData {
    status: VertexStatus,
    neighbors: Vec<VertexId>,
    rotation: Vec<FaceId>,
    /// Rotation is a single fan: a closed cycle, or an open chain whose ends are single-face edges.
    fan_ok: bool,
    fan_closed: bool,
}

/// A finite planar tessellation patch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tessellation {
    closed: bool,
    vertices: Vec<VertexData>,
    faces: Vec<Vec<VertexId>>,
    edges: Vec<Edge>,
    edge_index: HashMap<(VertexId, VertexId), EdgeId>,
}

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Tessellation {
    /// Builds a patch from vertex statuses and face boundary walks.
    ///
    /// Self-loops and multi-edges (an edge on more than two face sides) are
    /// rejected here; everything else is left to [`Tessellation::validate`].
    pub fn new(
        closed: bool,
        statuses: Vec<VertexStatus>,
        faces: Vec<Vec<VertexId>>,
    ) -> Result<Tessellation, TessError> {
        let n = statuses.len();
        for (f, walk) in faces.iter().enumerate() {
            if let Some(&v) = walk.iter().find(|&&v| v >= n) {
                return Err(TessError::UnknownVertex { face: f, vertex: v });
            }
            if walk.len() == 1 {
                return Err(TessError::SelfLoop { face: f, vertex: walk[0] });
            }
            if walk.len() < 3 {
                return Err(TessError::DegenerateFace { face: f, len: walk.len() });
            }
            for i in 0..walk.len() {
                if walk[i] == walk[(i + 1) % walk.len()] {
                    return Err(TessError::SelfLoop { face: f, vertex: walk[i] });
                }
            }
        }

        let mut edge_faces: BTreeMap<(VertexId, VertexId), Vec<FaceId>> = BTreeMap::new();
        for (f, walk) in faces.iter().enumerate() {
            for i in 0..walk.len() {
                let k = key(walk[i], walk[(i + 1) % walk.len()]);
                edge_faces.entry(k).or_default().push(f);
            }
        }
        let mut edges = Vec::with_capacity(edge_faces.len());
        let mut edge_index = HashMap::with_capacity(edge_faces.len());
        for ((u, v), mut fs) in edge_faces {
            if fs.len() > 2 {
                return Err(TessError::MultiEdge { u, v, sides: fs.len() });
            }
            fs.sort_unstable();
            edge_index.insert((u, v), edges.len());
            edges.push(Edge { ends: (u, v), faces: fs });
        }

        let mut neighbors = vec![Vec::new(); n];
        for e in &edges {
            neighbors[e.ends.0].push(e.ends.1);
            neighbors[e.ends.1].push(e.ends.0);
        }
        let mut incident: Vec<Vec<FaceId>> = vec![Vec::new(); n];
        for (f, walk) in faces.iter().enumerate() {
            for &v in walk {
                if incident[v].last() != Some(&f) {
                    incident[v].push(f);
                }
            }
        }

        let mut t =
            Tessellation { closed, vertices: Vec::with_capacity(n), faces, edges, edge_index };
        for (v, status) in statuses.into_iter().enumerate() {
            let mut nb = std::mem::take(&mut neighbors[v]);
            nb.sort_unstable();
            nb.dedup();
            let (rotation, fan_ok, fan_closed) = t.chain_fan(v, &incident[v]);
            t.vertices.push(VertexData { status, neighbors: nb, rotation, fan_ok, fan_closed });
        }
        Ok(t)
    }

    /// Orders the faces around `v` by walking across shared edges.
    fn chain_fan(&self, v: VertexId, incident: &[FaceId]) -> (Vec<FaceId>, bool, bool) {
        if incident.is_empty() {
            return (Vec::new(), true, false);
        }
        // The two neighbours of v along face f.
        let sides = |f: FaceId| -> Option<(VertexId, VertexId)> {
            let walk = &self.faces[f];
            let i = walk.iter().position(|&x| x == v)?;
            let len = walk.len();
            Some((walk[(i + len - 1) % len], walk[(i + 1) % len]))
        };
        let other_face = |f: FaceId, w: VertexId| -> Option<FaceId> {
            let e = &self.edges[self.edge_index[&key(v, w)]];
            e.faces.iter().copied().find(|&g| g != f)
        };
        let open_edge = |w: VertexId| self.edges[self.edge_index[&key(v, w)]].faces.len() < 2;

        // Start from a face that sits at the end of an open fan, if any.
        let mut start = None;
        for &f in incident {
            if let Some((p, nx)) = sides(f) {
                if open_edge(p) {
                    start = Some((f, p));
                    break;
                }
                if open_edge(nx) {
                    start = Some((f, nx));
                    break;
                }
            }
        }
        let open = start.is_some();
        let (first, mut entered) = start.unwrap_or_else(|| {
            let f = incident[0];
            (f, sides(f).map(|s| s.0).unwrap_or(v))
        });

        let mut rotation = vec![first];
        let mut cur = first;
        let mut closed = false;
        while let Some((p, nx)) = sides(cur) {
            let exit = if p == entered { nx } else { p };
            match other_face(cur, exit) {
                Some(g) if g == first => {
                    closed = true;
                    break;
                }
                Some(g) if rotation.contains(&g) => break,
                Some(g) => {
                    rotation.push(g);
                    entered = exit;
                    cur = g;
                }
                None => break,
            }
        }
        let all = rotation.len() == incident.len();
        let fan_ok = all && (closed != open);
        if !all {
            for &f in incident {
                if !rotation.contains(&f) {
                    rotation.push(f);
                }
            }
        }
        (rotation, fan_ok, closed)
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertex_ids(&self) -> std::ops::Range<VertexId> {
        0..self.vertices.len()
    }

    pub fn status(&self, v: VertexId) -> VertexStatus {
        self.vertices[v].status
    }

    pub fn statuses(&self) -> Vec<VertexStatus> {
        self.vertices.iter().map(|v| v.status).collect()
    }

    /// Number of neighbours.
    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v].neighbors.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.vertices[v].neighbors
    }

    /// Faces around `v` in rotation order.
    pub fn rotation(&self, v: VertexId) -> &[FaceId] {
        &self.vertices[v].rotation
    }

    pub fn face(&self, f: FaceId) -> &[VertexId] {
        &self.faces[f]
    }

    pub fn faces(&self) -> &[Vec<VertexId>] {
        &self.faces
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<&Edge> {
        self.edge_index.get(&key(u, v)).map(|&e| &self.edges[e])
    }

    /// Whether the star of `v` is fully known: interior vertices with a closed
    /// fan, or boundary vertices with an open fan between two boundary edges.
    pub fn has_complete_star(&self, v: VertexId) -> bool {
        let d = &self.vertices[v];
        match d.status {
            VertexStatus::Frontier => false,
            VertexStatus::Interior => d.fan_ok && d.fan_closed,
            VertexStatus::Boundary => d.fan_ok && !d.fan_closed && !d.rotation.is_empty(),
        }
    }

    pub(crate) fn fan_ok(&self, v: VertexId) -> bool {
        self.vertices[v].fan_ok
    }

    pub(crate) fn fan_closed(&self, v: VertexId) -> bool {
        self.vertices[v].fan_closed
    }

    /// Edges lying on the boundary curve of a graph with boundary: one incident
    /// face and both ends with `Boundary` status.
    pub fn boundary_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&e| {
                let ed = &self.edges[e];
                ed.faces.len() == 1
                    && self.status(ed.ends.0) == VertexStatus::Boundary
                    && self.status(ed.ends.1) == VertexStatus::Boundary
            })
            .collect()
    }

    pub fn boundary_vertices(&self) -> Vec<VertexId> {
        self.vertex_ids().filter(|&v| self.status(v) == VertexStatus::Boundary).collect()
    }

    pub fn frontier_vertices(&self) -> Vec<VertexId> {
        self.vertex_ids().filter(|&v| self.status(v) == VertexStatus::Frontier).collect()
    }

    /// `|V| - |E| + |F|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }
}

/// Recomputes statuses from the face structure: a vertex whose fan is closed
/// is `Interior`, one whose fan is an open chain between two edges listed in
/// `boundary_edges` is `Boundary`, everything else is `Frontier`.
pub fn infer_statuses(
    vertex_count: usize,
    faces: &[Vec<VertexId>],
    boundary_edges: &[(VertexId, VertexId)],
) -> Result<Vec<VertexStatus>, TessError> {
    let probe =
        Tessellation::new(false, vec![VertexStatus::Frontier; vertex_count], faces.to_vec())?;
    let marked: std::collections::HashSet<(VertexId, VertexId)> =
        boundary_edges.iter().map(|&(u, v)| key(u, v)).collect();
    Ok((0..vertex_count)
        .map(|v| {
            if probe.rotation(v).is_empty() || !probe.fan_ok(v) {
                return VertexStatus::Frontier;
            }
            if probe.fan_closed(v) {
                return VertexStatus::Interior;
            }
            let open: Vec<VertexId> = probe
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| probe.edge_between(v, w).is_some_and(|e| e.faces.len() < 2))
                .collect();
            if open.len() == 2 && open.iter().all(|&w| marked.contains(&key(v, w))) {
                VertexStatus::Boundary
            } else {
                VertexStatus::Frontier
            }
        })
        .collect())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn cube() -> Tessellation {
        let faces = vec![
            vec![0, 1, 2, 3],
            vec![4, 7, 6, 5],
            vec![0, 4, 5, 1],
            vec![1, 5, 6, 2],
            vec![2, 6, 7, 3],
            vec![3, 7, 4, 0],
        ];
        Tessellation::new(true, vec![VertexStatus::Interior; 8], faces).unwrap()
    }

    pub fn tetrahedron() -> Tessellation {
        let faces = vec![vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![2, 3, 0]];
        Tessellation::new(true, vec![VertexStatus::Interior; 4], faces).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn cube_counts_and_rotation() {
        let t = cube();
        assert_eq!((t.vertex_count(), t.edge_count(), t.face_count()), (8, 12, 6));
        assert_eq!(t.euler_characteristic(), 2);
        for v in t.vertex_ids() {
            assert_eq!(t.degree(v), 3);
            assert_eq!(t.rotation(v).len(), 3);
            assert!(t.has_complete_star(v));
        }
    }

    #[test]
    fn rejects_self_loops_and_multi_edges() {
        let e = Tessellation::new(false, vec![VertexStatus::Frontier; 3], vec![vec![0, 0, 1]]);
        assert!(matches!(e, Err(TessError::SelfLoop { .. })));
        let e = Tessellation::new(false, vec![VertexStatus::Frontier; 2], vec![vec![0, 1]]);
        assert!(matches!(e, Err(TessError::DegenerateFace { .. })));
        let faces = vec![vec![0, 1, 2], vec![0, 1, 3], vec![1, 0, 4]];
        let e = Tessellation::new(false, vec![VertexStatus::Frontier; 5], faces);
        assert!(matches!(e, Err(TessError::MultiEdge { u: 0, v: 1, sides: 3 })));
        let e = Tessellation::new(false, vec![VertexStatus::Frontier; 2], vec![vec![0, 1, 7]]);
        assert!(matches!(e, Err(TessError::UnknownVertex { vertex: 7, .. })));
    }

    #[test]
    fn inferred_statuses_on_open_fan() {
        // Three squares around vertex 0, with 0-1 and 0-7 marked as boundary.
        let faces = vec![vec![0, 1, 2, 3], vec![0, 3, 4, 5], vec![0, 5, 6, 7]];
        let st = infer_statuses(8, &faces, &[(0, 1), (0, 7)]).unwrap();
        assert_eq!(st[0], VertexStatus::Boundary);
        assert_eq!(st[2], VertexStatus::Frontier);
        let st = infer_statuses(8, &faces, &[]).unwrap();
        assert_eq!(st[0], VertexStatus::Frontier);
    }
}
