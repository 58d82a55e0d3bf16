//! Incremental construction of finite curved cores.
//!
//! A core is a topological disk grown face by face from a polygon. Its
//! boundary is kept as a counter-clockwise cycle (core on the left). New
//! faces are attached along boundary paths; vertices whose angle reaches a
//! full turn are closed up by zipping their two boundary neighbours together.

use std::collections::BTreeMap;

use crate::curv::Curv;
use crate::tess::VertexId;

use super::GenError;

/// Interior angle of a regular `p`-gon, in turns.
pub(crate) fn face_angle(p: usize) -> Curv {
    Curv::new(p as i128 - 2, 2 * p as i128)
}

#[derive(Debug, Clone)]
pub(crate) struct CoreBuilder {
    pub faces: Vec<Vec<VertexId>>,
    pub vertex_count: usize,
    pub boundary: Vec<VertexId>,
    /// Intended curvature of selected vertices; all others are meant to be flat.
    pub targets: BTreeMap<VertexId, Curv>,
}

fn fail(msg: impl Into<String>) -> GenError {
    GenError::Construction(msg.into())
}

impl CoreBuilder {
    pub fn polygon(p: usize) -> CoreBuilder {
        CoreBuilder {
            faces: vec![(0..p).collect()],
            vertex_count: p,
            boundary: (0..p).collect(),
            targets: BTreeMap::new(),
        }
    }

    fn index(&self, v: VertexId) -> Result<usize, GenError> {
        self.boundary
            .iter()
            .position(|&x| x == v)
            .ok_or_else(|| fail(format!("vertex {v} is not on the core boundary")))
    }

    pub fn next(&self, v: VertexId) -> Result<VertexId, GenError> {
        let i = self.index(v)?;
        Ok(self.boundary[(i + 1) % self.boundary.len()])
    }

    pub fn prev(&self, v: VertexId) -> Result<VertexId, GenError> {
        let i = self.index(v)?;
        let m = self.boundary.len();
        Ok(self.boundary[(i + m - 1) % m])
    }

    pub fn target(&self, v: VertexId) -> Curv {
        self.targets.get(&v).copied().unwrap_or(Curv::ZERO)
    }

    /// Sum of face angles at `v`, in turns.
    pub fn angle(&self, v: VertexId) -> Curv {
        self.faces.iter().filter(|f| f.contains(&v)).map(|f| face_angle(f.len())).sum()
    }

    /// Glues a new `degree`-gon onto the `span` boundary edges that start at
    /// `start`, adding `degree - span - 1` fresh vertices. Returns them in
    /// boundary order.
    pub fn attach(
        &mut self,
        start: VertexId,
        span: usize,
        degree: usize,
    ) -> Result<Vec<VertexId>, GenError> {
        let m = self.boundary.len();
        if span == 0 || span + 1 > degree || span >= m {
            return Err(fail(format!("cannot attach a {degree}-gon along {span} edges")));
        }
        let fresh_count = degree - span - 1;
        if fresh_count == 0 && span < 2 {
            return Err(fail("a face closing a single edge would be a digon"));
        }
        let i = self.index(start)?;
        self.boundary.rotate_left(i);
        let path: Vec<VertexId> = self.boundary[..=span].to_vec();
        if fresh_count == 0 && span + 1 == m {
            return Err(fail("attaching would close the core"));
        }
        let fresh: Vec<VertexId> = (self.vertex_count..self.vertex_count + fresh_count).collect();
        self.vertex_count += fresh_count;

        let mut walk: Vec<VertexId> = path.iter().rev().copied().collect();
        walk.extend(&fresh);
        self.faces.push(walk);

        let mut nb = Vec::with_capacity(m - span + 1 + fresh_count);
        nb.push(path[0]);
        nb.extend(&fresh);
        nb.extend_from_slice(&self.boundary[span..]);
        self.boundary = nb;
        Ok(fresh)
    }

    /// Closes the gap at boundary vertex `v` with faces of the given degrees,
    /// listed from the edge towards `next(v)` round to the edge from `prev(v)`.
    pub fn complete(&mut self, v: VertexId, degrees: &[usize]) -> Result<(), GenError> {
        let Some((&last, rest)) = degrees.split_last() else {
            return Err(fail("complete needs at least one face"));
        };
        for &d in rest {
            self.attach(v, 1, d)?;
        }
        let p = self.prev(v)?;
        self.attach(p, 2, last)?;
        Ok(())
    }

    /// Makes `v` interior by identifying its two boundary neighbours.
    pub fn zip(&mut self, v: VertexId) -> Result<(), GenError> {
        let p = self.prev(v)?;
        let n = self.next(v)?;
        if p == n || self.boundary.len() < 4 {
            return Err(fail(format!("cannot zip at {v}: boundary too short")));
        }
        let adjacent = self.faces.iter().any(|f| {
            let k = f.len();
            (0..k).any(|i| {
                let (a, b) = (f[i], f[(i + 1) % k]);
                (a == p && b == n) || (a == n && b == p)
            })
        });
        if adjacent {
            return Err(fail(format!("cannot zip at {v}: neighbours already adjacent")));
        }
        if self.targets.contains_key(&n) {
            return Err(fail(format!("cannot zip away curved vertex {n}")));
        }
        for f in &mut self.faces {
            for x in f.iter_mut() {
                if *x == n {
                    *x = p;
                }
            }
        }
        self.boundary.retain(|&x| x != v && x != n);
        Ok(())
    }

    /// Repeatedly zips vertices whose angle reached their full turn and, when
    /// `fill` is set, closes any reflex gap smaller than a third of a turn
    /// with one triangle or square.
    pub fn settle(&mut self, fill: bool) -> Result<(), GenError> {
        loop {
            let mut changed = false;
            for v in self.boundary.clone() {
                if !self.boundary.contains(&v) {
                    continue;
                }
                let full = Curv::int(1) - self.target(v);
                let gap = full - self.angle(v);
                if gap.is_negative() {
                    return Err(fail(format!("vertex {v} exceeds its full angle")));
                }
                if gap.is_zero() {
                    self.zip(v)?;
                    changed = true;
                } else if fill && gap < Curv::new(1, 3) {
                    let g12 = gap * 12;
                    let degree = if g12 == Curv::int(2) {
                        3
                    } else if g12 == Curv::int(3) {
                        4
                    } else {
                        return Err(fail(format!("vertex {v} has an unfillable gap {gap}")));
                    };
                    self.complete(v, &[degree])?;
                    changed = true;
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    /// Renumbers vertices densely in order of first appearance.
    pub fn compact(&mut self) {
        let mut map = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for f in &self.faces {
            for &v in f {
                if map[v] == usize::MAX {
                    map[v] = next;
                    next += 1;
                }
            }
        }
        for f in &mut self.faces {
            for v in f.iter_mut() {
                *v = map[*v];
            }
        }
        for v in &mut self.boundary {
            *v = map[*v];
        }
        self.targets = self.targets.iter().map(|(&v, &c)| (map[v], c)).collect();
        self.vertex_count = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_of_3444() {
        let mut b = CoreBuilder::polygon(3);
        b.complete(0, &[4, 4, 4]).unwrap();
        assert_eq!(b.angle(0), Curv::new(11, 12));
        assert!(!b.boundary.contains(&0));
        assert_eq!(b.faces.len(), 4);
        // 2 triangle corners, 2 spokes, 3 outer square corners.
        assert_eq!(b.boundary.len(), 2 + 2 + 3);
    }

    #[test]
    fn settle_zips_a_full_vertex() {
        // Six triangles fanned around vertex 0 leave it on the boundary with a
        // full turn; settling identifies the two ends of the fan.
        let mut b = CoreBuilder::polygon(3);
        for _ in 0..5 {
            b.attach(0, 1, 3).unwrap();
        }
        assert_eq!(b.angle(0), Curv::int(1));
        assert!(b.boundary.contains(&0));
        b.settle(false).unwrap();
        assert!(!b.boundary.contains(&0));
        assert_eq!(b.boundary.len(), 6);
        b.compact();
        assert_eq!(b.vertex_count, 7);
    }
}
