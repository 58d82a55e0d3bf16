//! Exact vertex curvature, totals, and the global checks built on them.

use std::f64::consts::PI;

use serde::Serialize;

use crate::curv::Curv;
use crate::tess::{Tessellation, VertexId, VertexStar, VertexStatus};

/// Tolerance for comparing angle defects against exact curvature.
pub const ANGLE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurvatureError {
    #[error("vertex {0} does not have a complete star; its curvature is undefined")]
    IncompleteStar(VertexId),
    #[error("star is incomplete; its angle defect is undefined")]
    IncompleteCycle,
    #[error("the patch is not closed")]
    NotClosed,
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("total curvature {0} is outside the open interval (0, 1)")]
    DomainError(Curv),
}

/// An angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleDefect {
    pub radians: f64,
}

/// `1 - d/2 + sum 1/p_i` for the faces `p_i` of a star with `d` neighbours.
pub fn phi_from_parts(neighbor_count: usize, face_degrees: &[usize]) -> Curv {
    let sum: Curv = face_degrees.iter().map(|&p| Curv::recip_of(p)).sum();
    Curv::int(1) - Curv::new(neighbor_count as i128, 2) + sum
}

/// Curvature of a complete interior star with the given face degrees.
pub fn phi_of_pattern(face_degrees: &[usize]) -> Curv {
    phi_from_parts(face_degrees.len(), face_degrees)
}

pub fn curvature_at(t: &Tessellation, x: VertexId) -> Result<Curv, CurvatureError> {
    if !t.has_complete_star(x) {
        return Err(CurvatureError::IncompleteStar(x));
    }
    let faces: Vec<usize> = t.rotation(x).iter().map(|&f| t.face_degree(f)).collect();
    Ok(phi_from_parts(t.degree(x), &faces))
}

/// `2pi - sum pi (p - 2) / p`. Only defined for a complete interior cycle.
pub fn angle_defect(star: &VertexStar) -> Result<AngleDefect, CurvatureError> {
    if !star.complete {
        return Err(CurvatureError::IncompleteCycle);
    }
    let used: f64 = star.faces.iter().map(|&p| PI * (p as f64 - 2.0) / p as f64).sum();
    Ok(AngleDefect { radians: 2.0 * PI - used })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TotalCurvature {
    pub value: Curv,
    /// The patch has `Frontier` vertices, so `value` is a window total.
    pub window: bool,
    /// Every non-frontier vertex adjacent to the frontier is flat, so the
    /// curved set lies strictly inside the window. Trivially true without a frontier.
    pub stabilized: bool,
}

pub fn total_curvature(t: &Tessellation) -> Result<TotalCurvature, CurvatureError> {
    let mut value = Curv::ZERO;
    let mut stabilized = true;
    let mut window = false;
    for v in t.vertex_ids() {
        if t.status(v) == VertexStatus::Frontier {
            window = true;
            continue;
        }
        let phi = curvature_at(t, v)?;
        value += phi;
        if !phi.is_zero() && t.neighbors(v).iter().any(|&w| t.status(w) == VertexStatus::Frontier) {
            stabilized = false;
        }
    }
    Ok(TotalCurvature { value, window, stabilized })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaussBonnet {
    pub phi: Curv,
    pub chi: i64,
    pub equal: bool,
}

pub fn gauss_bonnet_check(t: &Tessellation) -> Result<GaussBonnet, CurvatureError> {
    if !t.is_closed() {
        return Err(CurvatureError::NotClosed);
    }
    let phi = total_curvature(t)?.value;
    let chi = t.euler_characteristic();
    Ok(GaussBonnet { phi, chi, equal: phi == Curv::int(chi as i128) })
}

/// For a stabilized window of an infinite planar graph, whether the total is at most 1.
pub fn cohn_vossen_check(t: &Tessellation) -> Result<bool, CurvatureError> {
    let total = total_curvature(t)?;
    if !total.stabilized {
        return Err(CurvatureError::Inconclusive(
            "curved vertices touch the frontier; the window has not stabilized".into(),
        ));
    }
    Ok(total.value <= Curv::int(1))
}

/// Non-frontier vertices with non-zero curvature, ascending.
pub fn nonzero_set(t: &Tessellation) -> Result<Vec<VertexId>, CurvatureError> {
    let mut out = Vec::new();
    for v in t.vertex_ids() {
        if t.status(v) != VertexStatus::Frontier && !curvature_at(t, v)?.is_zero() {
            out.push(v);
        }
    }
    Ok(out)
}

/// Apex angle `2 arcsin(1 - phi)` of the cone isometric to the far field.
pub fn apex_angle(phi_total: Curv) -> Result<AngleDefect, CurvatureError> {
    if !phi_total.is_positive() || phi_total >= Curv::int(1) {
        return Err(CurvatureError::DomainError(phi_total));
    }
    Ok(AngleDefect { radians: 2.0 * (1.0 - phi_total.to_f64()).asin() })
}
