//! Graphs with boundary: curvature of boundary vertices, the nonnegative
//! boundary patterns, degree-2 boundary vertices, and doubling along the boundary.
//!
//! A boundary vertex `x` with `deg(x)` neighbours touches `deg(x) - 1` faces
//! and has curvature `1 - deg(x)/2 + sum 1/p`, which equals `(pi - theta)/2pi`
//! for the inner angle `theta` when faces are regular polygons. Gluing two
//! mirrored copies along the boundary doubles every one of these values.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::curv::Curv;
use crate::curvature::{
    curvature_at, phi_from_parts, total_curvature, CurvatureError, ANGLE_TOLERANCE,
};
use crate::tess::{Tessellation, VertexId, VertexStatus, Violation};

#[derive(Debug, Clone, thiserror::Error)]
pub enum BoundaryError {
    #[error("vertex {vertex} has status {status:?}, not Boundary")]
    WrongStatus { vertex: VertexId, status: VertexStatus },
    #[error("boundary vertex {0} does not have a complete one-sided star")]
    IncompleteStar(VertexId),
    #[error("inner-angle form {angle_form} disagrees with curvature {phi} at vertex {vertex}")]
    AngleMismatch { vertex: VertexId, phi: Curv, angle_form: f64 },
    #[error("the patch has no boundary to double along")]
    NothingToDouble,
    #[error("the input patch is invalid: {0}")]
    InvalidInput(String),
    #[error("doubling does not give a tessellation: {}", describe(.0))]
    DegenerateDouble(Vec<Violation>),
    #[error("doubling creates a multi-edge: {0}")]
    DoubleMultiEdge(String),
    #[error("vertex {vertex} has negative curvature {phi}")]
    NotNonnegative { vertex: VertexId, phi: Curv },
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
}

fn describe(violations: &[Violation]) -> String {
    let shown: Vec<String> = violations.iter().take(3).map(|v| v.to_string()).collect();
    let more = violations.len().saturating_sub(3);
    if more > 0 {
        format!("{} (and {more} more)", shown.join("; "))
    } else {
        shown.join("; ")
    }
}

/// Ascending face degrees around a boundary vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BoundaryPattern(Vec<usize>);

impl BoundaryPattern {
    pub fn new(mut degrees: Vec<usize>) -> BoundaryPattern {
        degrees.sort_unstable();
        BoundaryPattern(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    /// Curvature of a boundary vertex with these faces (one more neighbour than faces).
    pub fn curvature(&self) -> Curv {
        phi_from_parts(self.0.len() + 1, &self.0)
    }
}

impl fmt::Display for BoundaryPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryCurvature {
    pub phi: Curv,
    pub pattern: BoundaryPattern,
    /// Sum of the interior angles of the incident regular polygons, in radians.
    pub inner_angle: f64,
    /// `(pi - inner_angle) / 2pi`.
    pub angle_form: f64,
}

pub fn boundary_curvature(
    t: &Tessellation,
    x: VertexId,
) -> Result<BoundaryCurvature, BoundaryError> {
    let status = t.status(x);
    if status != VertexStatus::Boundary {
        return Err(BoundaryError::WrongStatus { vertex: x, status });
    }
    if !t.has_complete_star(x) {
        return Err(BoundaryError::IncompleteStar(x));
    }
    let faces: Vec<usize> = t.rotation(x).iter().map(|&f| t.face_degree(f)).collect();
    let phi = phi_from_parts(t.degree(x), &faces);
    let inner_angle: f64 = faces.iter().map(|&p| PI * (p as f64 - 2.0) / p as f64).sum();
    let angle_form = (PI - inner_angle) / (2.0 * PI);
    // The two forms agree exactly when deg(x) = faces + 1, as on any proper boundary.
    if faces.len() + 1 == t.degree(x) && (angle_form - phi.to_f64()).abs() > ANGLE_TOLERANCE {
        return Err(BoundaryError::AngleMismatch { vertex: x, phi, angle_form });
    }
    Ok(BoundaryCurvature { phi, pattern: BoundaryPattern::new(faces), inner_angle, angle_form })
}

/// All boundary patterns with at least two faces and nonnegative curvature.
pub fn boundary_patterns_nonneg() -> Vec<(BoundaryPattern, Curv)> {
    fn extend(prefix: &mut Vec<usize>, len: usize, out: &mut Vec<(BoundaryPattern, Curv)>) {
        let remaining = len - prefix.len();
        if remaining == 0 {
            let p = BoundaryPattern::new(prefix.clone());
            let phi = p.curvature();
            if !phi.is_negative() {
                out.push((p, phi));
            }
            return;
        }
        let mut d = prefix.last().copied().unwrap_or(3);
        loop {
            // Best case: every remaining face is a d-gon.
            let fixed: Curv = prefix.iter().map(|&p| Curv::recip_of(p)).sum();
            let best = Curv::int(1) - Curv::new(len as i128 + 1, 2)
                + fixed
                + Curv::recip_of(d) * remaining as i128;
            if best.is_negative() {
                break;
            }
            prefix.push(d);
            extend(prefix, len, out);
            prefix.pop();
            d += 1;
        }
    }
    let mut out = Vec::new();
    // With n faces the curvature is at most 1 - (n+1)/2 + n/3, negative for n >= 4.
    for len in 2..=3 {
        extend(&mut Vec::new(), len, &mut out);
    }
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Degree2Entry {
    pub vertex: VertexId,
    pub face_degree: usize,
    pub phi: Curv,
    /// Face degree at most 6 and curvature at least 1/6.
    pub within_bounds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Degree2Report {
    pub entries: Vec<Degree2Entry>,
    /// Every other vertex with a known star has nonnegative curvature.
    pub nonnegative_elsewhere: bool,
}

impl Degree2Report {
    /// Vertices out of bounds in a graph that is otherwise nonnegative.
    pub fn contradictions(&self) -> Vec<VertexId> {
        if !self.nonnegative_elsewhere {
            return Vec::new();
        }
        self.entries.iter().filter(|e| !e.within_bounds).map(|e| e.vertex).collect()
    }

    pub fn passes(&self) -> bool {
        self.contradictions().is_empty()
    }
}

pub fn degree2_check(t: &Tessellation) -> Result<Degree2Report, BoundaryError> {
    let mut entries = Vec::new();
    let mut nonnegative_elsewhere = true;
    for v in t.vertex_ids() {
        if !t.has_complete_star(v) {
            continue;
        }
        if t.status(v) == VertexStatus::Boundary && t.degree(v) == 2 {
            let bc = boundary_curvature(t, v)?;
            let face_degree = bc.pattern.degrees()[0];
            entries.push(Degree2Entry {
                vertex: v,
                face_degree,
                phi: bc.phi,
                within_bounds: face_degree <= 6 && bc.phi >= Curv::new(1, 6),
            });
        } else if curvature_at(t, v)?.is_negative() {
            nonnegative_elsewhere = false;
        }
    }
    Ok(Degree2Report { entries, nonnegative_elsewhere })
}

/// Result of gluing two copies of a patch along its boundary.
#[derive(Debug, Clone)]
pub struct Doubling {
    pub tess: Tessellation,
    /// The involution swapping the copies; it fixes exactly the glued vertices.
    pub mirror: Vec<VertexId>,
    /// Vertices shared by both copies.
    pub boundary_vertices: usize,
    /// Edges shared by both copies.
    pub boundary_edges: usize,
}

/// Vertices shared by both copies: boundary vertices, plus frontier vertices
/// where a boundary curve leaves the window.
fn glued_vertices(t: &Tessellation) -> Vec<bool> {
    let mut glued: Vec<bool> =
        t.vertex_ids().map(|v| t.status(v) == VertexStatus::Boundary).collect();
    for e in t.edges() {
        if e.faces.len() != 1 {
            continue;
        }
        let (a, b) = e.ends;
        for (x, y) in [(a, b), (b, a)] {
            if t.status(x) == VertexStatus::Boundary && t.status(y) == VertexStatus::Frontier {
                glued[y] = true;
            }
        }
    }
    glued
}

/// Glues `t` to its mirror image along the boundary. Glued vertices keep
/// their ids; the second copy of every other vertex gets a fresh id.
/// Former boundary vertices become interior.
pub fn double(t: &Tessellation) -> Result<Doubling, BoundaryError> {
    let report = t.validate();
    if !report.is_valid() {
        return Err(BoundaryError::InvalidInput(describe(&report.violations)));
    }
    if t.boundary_vertices().is_empty() {
        return Err(BoundaryError::NothingToDouble);
    }
    let glued = glued_vertices(t);
    let mut copy = vec![0; t.vertex_count()];
    let mut statuses = t.statuses();
    for v in t.vertex_ids() {
        if glued[v] {
            copy[v] = v;
            if statuses[v] == VertexStatus::Boundary {
                statuses[v] = VertexStatus::Interior;
            }
        } else {
            copy[v] = statuses.len();
            statuses.push(t.status(v));
        }
    }
    let total = statuses.len();
    let mut faces: Vec<Vec<VertexId>> = t.faces().to_vec();
    for f in t.faces() {
        faces.push(f.iter().rev().map(|&v| copy[v]).collect());
    }
    let closed = !statuses.contains(&VertexStatus::Frontier);
    let tess = Tessellation::new(closed, statuses, faces)
        .map_err(|e| BoundaryError::DoubleMultiEdge(e.to_string()))?;
    let report = tess.validate();
    if !report.is_valid() {
        return Err(BoundaryError::DegenerateDouble(report.violations));
    }
    let mut mirror: Vec<VertexId> = (0..total).collect();
    for v in t.vertex_ids() {
        mirror[v] = copy[v];
        mirror[copy[v]] = v;
    }
    let shared_edges = t
        .edges()
        .iter()
        .filter(|e| e.faces.len() == 1 && glued[e.ends.0] && glued[e.ends.1])
        .count();
    Ok(Doubling {
        tess,
        mirror,
        boundary_vertices: glued.iter().filter(|&&g| g).count(),
        boundary_edges: shared_edges,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapBoundaryReport {
    pub total: Curv,
    pub doubled_total: Curv,
    pub stabilized: bool,
    /// The total is 0 or at least 1/12.
    pub in_gap_set: bool,
    /// The doubled total is exactly twice the total.
    pub doubling_identity: bool,
    /// A positive total does not double to exactly 1/12.
    pub double_avoids_twelfth: bool,
}

impl GapBoundaryReport {
    pub fn passes(&self) -> bool {
        self.in_gap_set && self.doubling_identity && self.double_avoids_twelfth
    }
}

pub fn gap_with_boundary_check(t: &Tessellation) -> Result<GapBoundaryReport, BoundaryError> {
    for v in t.vertex_ids().filter(|&v| t.has_complete_star(v)) {
        let phi = curvature_at(t, v)?;
        if phi.is_negative() {
            return Err(BoundaryError::NotNonnegative { vertex: v, phi });
        }
    }
    let total = total_curvature(t)?;
    let doubled = total_curvature(&double(t)?.tess)?;
    let twelfth = Curv::new(1, 12);
    Ok(GapBoundaryReport {
        total: total.value,
        doubled_total: doubled.value,
        stabilized: total.stabilized,
        in_gap_set: total.value.is_zero() || total.value >= twelfth,
        doubling_identity: doubled.value == total.value * 2,
        double_avoids_twelfth: !total.value.is_positive() || doubled.value != twelfth,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tess::infer_statuses;

    fn lone_face(p: usize) -> Tessellation {
        let faces = vec![(0..p).collect::<Vec<_>>()];
        let edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
        let statuses = infer_statuses(p, &faces, &edges).unwrap();
        Tessellation::new(false, statuses, faces).unwrap()
    }

    #[test]
    fn six_nonnegative_boundary_patterns() {
        let got: Vec<(String, String)> = boundary_patterns_nonneg()
            .iter()
            .map(|(p, c)| (p.to_string(), c.to_string()))
            .collect();
        let want = [
            ("(3,3)", "1/6"),
            ("(3,4)", "1/12"),
            ("(3,5)", "1/30"),
            ("(3,3,3)", "0/1"),
            ("(3,6)", "0/1"),
            ("(4,4)", "0/1"),
        ];
        let want: Vec<(String, String)> =
            want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn degree_two_vertex_on_a_face() {
        let t = lone_face(6);
        let bc = boundary_curvature(&t, 0).unwrap();
        assert_eq!(bc.phi, Curv::new(1, 6));
        assert!((bc.angle_form - 1.0 / 6.0).abs() < 1e-12);
        let report = degree2_check(&t).unwrap();
        assert_eq!(report.entries.len(), 6);
        assert!(report.passes());

        let report = degree2_check(&lone_face(7)).unwrap();
        assert_eq!(report.contradictions().len(), 7);
    }

    #[test]
    fn lone_square_double_is_rejected() {
        assert!(matches!(double(&lone_face(4)), Err(BoundaryError::DegenerateDouble(_))));
    }

    #[test]
    fn interior_vertex_is_not_boundary() {
        let t = crate::tess::fixtures::cube();
        assert!(matches!(boundary_curvature(&t, 0), Err(BoundaryError::WrongStatus { .. })));
        assert!(matches!(double(&t), Err(BoundaryError::NothingToDouble)));
    }
}
