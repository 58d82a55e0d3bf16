use std::fmt;

use serde::Serialize;

use super::{FaceId, Tessellation, VertexId, VertexStatus};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    VertexDegree {
        vertex: VertexId,
        degree: usize,
        status: VertexStatus,
    },
    FaceDegree {
        face: FaceId,
        degree: usize,
    },
    /// The face boundary walk is not a simple cycle.
    NonSimpleFace {
        face: FaceId,
    },
    /// An edge away from the frontier/boundary must lie on two distinct faces.
    EdgeFaceCount {
        u: VertexId,
        v: VertexId,
        faces: Vec<FaceId>,
    },
    /// The faces around the vertex do not form the expected fan.
    Rotation {
        vertex: VertexId,
        faces: usize,
        degree: usize,
    },
    /// Two faces meet in something other than one vertex or one edge.
    FaceIntersection {
        a: FaceId,
        b: FaceId,
        shared: Vec<VertexId>,
    },
    OpenVertexInClosed {
        vertex: VertexId,
        status: VertexStatus,
    },
    FaceHandshake {
        degree_sum: usize,
        edges: usize,
    },
    VertexHandshake {
        degree_sum: usize,
        edges: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexDegree { vertex, degree, status } => {
                write!(f, "vertex {vertex} ({status:?}) has degree {degree}")
            }
            Violation::FaceDegree { face, degree } => write!(f, "face {face} has degree {degree}"),
            Violation::NonSimpleFace { face } => {
                write!(f, "face {face} boundary walk is not a simple cycle")
            }
            Violation::EdgeFaceCount { u, v, faces } => {
                write!(f, "edge {u}-{v} lies on faces {faces:?}, expected two distinct faces")
            }
            Violation::Rotation { vertex, faces, degree } => write!(
                f,
                "vertex {vertex}: rotation system has {faces} faces, inconsistent with degree {degree}"
            ),
            Violation::FaceIntersection { a, b, shared } => write!(
                f,
                "faces {a} and {b} share vertices {shared:?}, not a single vertex or edge"
            ),
            Violation::OpenVertexInClosed { vertex, status } => {
                write!(f, "closed patch has {status:?} vertex {vertex}")
            }
            Violation::FaceHandshake { degree_sum, edges } => {
                write!(f, "sum of face degrees {degree_sum} != 2 x {edges} edges")
            }
            Violation::VertexHandshake { degree_sum, edges } => {
                write!(f, "sum of vertex degrees {degree_sum} != 2 x {edges} edges")
            }
        }
    }
}

/// Violations in ascending order of discovery; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Tessellation {
    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();

        for (face, walk) in self.faces.iter().enumerate() {
            if walk.len() < 3 {
                out.push(Violation::FaceDegree { face, degree: walk.len() });
            }
            let mut sorted = walk.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != walk.len() {
                out.push(Violation::NonSimpleFace { face });
            }
        }

        for v in self.vertex_ids() {
            let status = self.status(v);
            let degree = self.degree(v);
            let min = match status {
                VertexStatus::Interior => 3,
                VertexStatus::Boundary => 2,
                VertexStatus::Frontier => 0,
            };
            if degree < min {
                out.push(Violation::VertexDegree { vertex: v, degree, status });
            }
            let faces = self.rotation(v).len();
            match status {
                VertexStatus::Interior => {
                    if !(self.fan_ok(v) && self.fan_closed(v)) || faces != degree {
                        out.push(Violation::Rotation { vertex: v, faces, degree });
                    }
                }
                VertexStatus::Boundary => {
                    if !self.fan_ok(v) || self.fan_closed(v) || faces + 1 != degree {
                        out.push(Violation::Rotation { vertex: v, faces, degree });
                    }
                }
                VertexStatus::Frontier => {}
            }
            if self.closed && status != VertexStatus::Interior {
                out.push(Violation::OpenVertexInClosed { vertex: v, status });
            }
        }

        for e in &self.edges {
            let (u, v) = e.ends;
            let distinct_two = e.faces.len() == 2 && e.faces[0] != e.faces[1];
            if distinct_two {
                continue;
            }
            let su = self.status(u);
            let sv = self.status(v);
            let exempt = e.faces.len() == 1
                && (su == VertexStatus::Frontier
                    || sv == VertexStatus::Frontier
                    || (su == VertexStatus::Boundary && sv == VertexStatus::Boundary));
            if !exempt {
                out.push(Violation::EdgeFaceCount { u, v, faces: e.faces.clone() });
            }
        }

        out.extend(self.face_intersections());

        if self.closed {
            let edges = self.edges.len();
            let face_sum: usize = self.faces.iter().map(Vec::len).sum();
            if face_sum != 2 * edges {
                out.push(Violation::FaceHandshake { degree_sum: face_sum, edges });
            }
            let vertex_sum: usize = self.vertex_ids().map(|v| self.degree(v)).sum();
            if vertex_sum != 2 * edges {
                out.push(Violation::VertexHandshake { degree_sum: vertex_sum, edges });
            }
        }

        ValidationReport { violations: out }
    }

    /// Face-intersection check over every pair of faces sharing at least one vertex.
    fn face_intersections(&self) -> Vec<Violation> {
        let mut incident: Vec<Vec<FaceId>> = vec![Vec::new(); self.vertex_count()];
        for (f, walk) in self.faces.iter().enumerate() {
            for &v in walk {
                if incident[v].last() != Some(&f) {
                    incident[v].push(f);
                }
            }
        }
        let mut pairs = std::collections::BTreeSet::new();
        for fs in &incident {
            for (i, &a) in fs.iter().enumerate() {
                for &b in &fs[i + 1..] {
                    pairs.insert((a.min(b), a.max(b)));
                }
            }
        }
        let mut out = Vec::new();
        for (a, b) in pairs {
            let fa = &self.faces[a];
            let fb = &self.faces[b];
            let mut shared: Vec<VertexId> = fa.iter().copied().filter(|v| fb.contains(v)).collect();
            shared.sort_unstable();
            shared.dedup();
            let ok = match shared.len() {
                1 => true,
                2 => adjacent_in(fa, shared[0], shared[1]) && adjacent_in(fb, shared[0], shared[1]),
                _ => false,
            };
            if !ok {
                out.push(Violation::FaceIntersection { a, b, shared });
            }
        }
        out
    }
}

fn adjacent_in(walk: &[VertexId], x: VertexId, y: VertexId) -> bool {
    let n = walk.len();
    (0..n).any(|i| {
        let (p, q) = (walk[i], walk[(i + 1) % n]);
        (p == x && q == y) || (p == y && q == x)
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::cube;
    use super::*;

    #[test]
    fn cube_is_valid() {
        let r = cube().validate();
        assert!(r.is_valid(), "{:?}", r);
    }

    #[test]
    fn pillow_of_two_triangles_has_bad_intersection() {
        let t = Tessellation::new(
            true,
            vec![VertexStatus::Interior; 3],
            vec![vec![0, 1, 2], vec![0, 2, 1]],
        )
        .unwrap();
        let r = t.validate();
        assert!(r.violations.iter().any(|v| matches!(v, Violation::FaceIntersection { .. })));
        // Degree-2 interior vertices are also flagged.
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::VertexDegree { degree: 2, .. })));
    }

    #[test]
    fn interior_degree_two_vertex_is_reported() {
        // Two squares glued along a path 1-0-3 make 0 a degree-2 vertex with a closed fan.
        let faces = vec![vec![0, 1, 2, 3], vec![0, 3, 4, 1]];
        let mut st = vec![VertexStatus::Frontier; 5];
        st[0] = VertexStatus::Interior;
        let t = Tessellation::new(false, st, faces).unwrap();
        let r = t.validate();
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::VertexDegree { vertex: 0, degree: 2, .. })));
    }

    #[test]
    fn open_edge_between_interior_vertices() {
        let faces = vec![vec![0, 1, 2]];
        let t = Tessellation::new(false, vec![VertexStatus::Interior; 3], faces).unwrap();
        let r = t.validate();
        assert!(r.violations.iter().any(|v| matches!(v, Violation::EdgeFaceCount { .. })));
    }
}
