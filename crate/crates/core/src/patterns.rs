//! Vertex patterns and their exhaustive enumeration.
//!
//! A pattern is the ascending multiset of face degrees around a vertex. The
//! enumerations here are brute force with monotone pruning: adding to any
//! entry lowers the curvature, so a branch is cut as soon as filling every
//! remaining slot with the current entry is already below the threshold.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::curv::Curv;
use crate::curvature::{phi_of_pattern, CurvatureError};
use crate::tess::{Tessellation, VertexId};

/// Default cap used when materializing unbounded families.
pub const DEFAULT_CAP: usize = 1000;

/// Six triangles are already flat, so no non-negative interior pattern is longer.
pub const MAX_PATTERN_LEN: usize = 6;

/// Largest face degree that occurs in a flat pattern, from (3,7,42).
pub const MAX_FLAT_ENTRY: usize = 42;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("face degree {0} is below 3")]
    FaceTooSmall(usize),
    #[error("cap {0} is below {MAX_FLAT_ENTRY}")]
    CapTooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Pattern(Vec<usize>);

impl Pattern {
    pub fn new(mut degrees: Vec<usize>) -> Pattern {
        degrees.sort_unstable();
        Pattern(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn curvature(&self) -> Curv {
        phi_of_pattern(&self.0)
    }

    pub fn contains(&self, k: usize) -> bool {
        self.0.contains(&k)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sorted face degrees around `x`.
pub fn pattern_of(t: &Tessellation, x: VertexId) -> Result<Pattern, CurvatureError> {
    if !t.has_complete_star(x) {
        return Err(CurvatureError::IncompleteStar(x));
    }
    Ok(Pattern::new(t.rotation(x).iter().map(|&f| t.face_degree(f)).collect()))
}

/// Patterns `prefix + (k)` for `k` in `[k_min, k_max]`, with curvature `offset + 1/k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternFamily {
    pub prefix: Vec<usize>,
    pub k_min: usize,
    /// `None` when every `k >= k_min` is admissible.
    pub k_max: Option<usize>,
    pub offset: Curv,
}

impl PatternFamily {
    /// The family whose fixed part is `prefix`, or `None` if no `k` gives positive curvature.
    pub fn from_prefix(prefix: Vec<usize>) -> Option<PatternFamily> {
        let k_min = *prefix.last()?;
        let offset = Curv::int(1) - Curv::new(prefix.len() as i128 + 1, 2)
            + prefix.iter().map(|&p| Curv::recip_of(p)).sum::<Curv>();
        let k_max = if offset.is_negative() {
            // Largest k with 1/k > -offset.
            let bound = -offset;
            let ceil = (bound.denom() + bound.numer() - 1) / bound.numer();
            let k = ceil as usize - 1;
            if k < k_min {
                return None;
            }
            Some(k)
        } else {
            None
        };
        Some(PatternFamily { prefix, k_min, k_max, offset })
    }

    pub fn formula(&self, k: usize) -> Curv {
        self.offset + Curv::recip_of(k)
    }

    pub fn instantiate(&self, k: usize) -> Pattern {
        let mut d = self.prefix.clone();
        d.push(k);
        Pattern::new(d)
    }

    pub fn admits(&self, k: usize) -> bool {
        k >= self.k_min && self.k_max.is_none_or(|m| k <= m)
    }

    /// Members with `k <= cap`.
    pub fn members(&self, cap: usize) -> Vec<Pattern> {
        let hi = self.k_max.map_or(cap, |m| m.min(cap));
        (self.k_min..=hi).map(|k| self.instantiate(k)).collect()
    }

    /// Layout of the parameter range, e.g. `k>=4` or `11<=k<=13`.
    pub fn range_label(&self) -> String {
        match self.k_max {
            None => format!("k>={}", self.k_min),
            Some(m) => format!("{}<=k<={}", self.k_min, m),
        }
    }

    /// Curvature formula, e.g. `1/12 + 1/k` or `1/k - 5/66`.
    pub fn formula_label(&self) -> String {
        if self.offset.is_zero() {
            "1/k".to_string()
        } else if self.offset.is_positive() {
            format!("{} + 1/k", self.offset)
        } else {
            format!("1/k - {}", -self.offset)
        }
    }
}

impl fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.prefix.iter().map(|d| d.to_string()).collect();
        parts.push("k".into());
        write!(f, "({})", parts.join(","))
    }
}

/// All sorted patterns of length 3..=6 with entries in `[3, cap]` and curvature `>= 0`,
/// ascending by length then lexicographically.
pub fn enumerate_nonnegative(cap: usize) -> Vec<Pattern> {
    let mut out = Vec::new();
    for len in 3..=MAX_PATTERN_LEN {
        let mut cur = Vec::with_capacity(len);
        extend(len, cap, &mut cur, &mut out);
    }
    out
}

fn extend(len: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Pattern>) {
    if cur.len() == len {
        if !phi_of_pattern(cur).is_negative() {
            out.push(Pattern(cur.clone()));
        }
        return;
    }
    let start = cur.last().copied().unwrap_or(3);
    for d in start..=cap {
        // Best completion: every remaining slot equal to d.
        let rest = len - cur.len();
        let best = Curv::int(1) - Curv::new(len as i128, 2)
            + cur.iter().map(|&p| Curv::recip_of(p)).sum::<Curv>()
            + Curv::new(rest as i128, d as i128);
        if best.is_negative() {
            break;
        }
        cur.push(d);
        extend(len, cap, cur, out);
        cur.pop();
    }
}

/// Positive-curvature patterns with entries `<= k_cap`, grouped into
/// families by their fixed prefix, in ascending prefix order (by length, then lexicographic).
pub fn enumerate_positive(k_cap: usize) -> Result<Vec<PatternFamily>, PatternError> {
    if k_cap < MAX_FLAT_ENTRY {
        return Err(PatternError::CapTooSmall(k_cap));
    }
    let mut groups: BTreeMap<(usize, Vec<usize>), ()> = BTreeMap::new();
    for p in enumerate_nonnegative(k_cap) {
        if p.curvature().is_positive() {
            let prefix = p.0[..p.len() - 1].to_vec();
            groups.insert((prefix.len(), prefix), ());
        }
    }
    Ok(groups.into_keys().filter_map(|(_, prefix)| PatternFamily::from_prefix(prefix)).collect())
}

/// The flat patterns, ascending by length then lexicographically.
pub fn enumerate_zero() -> Vec<Pattern> {
    enumerate_nonnegative(MAX_FLAT_ENTRY).into_iter().filter(|p| p.curvature().is_zero()).collect()
}

/// `k` times the least curvature of a non-negative pattern containing `k`:
/// a lower bound on the curvature carried by the vertices of a `k`-gon.
pub fn min_face_sum(k: usize) -> Result<Curv, PatternError> {
    if k < 3 {
        return Err(PatternError::FaceTooSmall(k));
    }
    let min = enumerate_nonnegative(k.max(MAX_FLAT_ENTRY))
        .into_iter()
        .filter(|p| p.contains(k))
        .map(|p| p.curvature())
        .min()
        .expect("(3,3,k) is always non-negative");
    Ok(min * k as i128)
}
