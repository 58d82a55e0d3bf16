//! Exact plane geometry over the cyclotomic integers Z[z], z = exp(2 pi i / 24).
//!
//! Every edge of a tiling by regular polygons with 3, 4, 6, 8 or 12 sides
//! points in a multiple of 15 degrees, so all vertices are integer sums of
//! powers of z. Points are stored in the basis 1, z, ..., z^7 using
//! z^8 = z^4 - 1, which makes equality (and hence vertex deduplication) exact.

use std::collections::{BTreeSet, HashMap};
use std::ops::Add;

use crate::curv::Curv;
use crate::tess::{infer_statuses, Tessellation, VertexId};

use super::core::CoreBuilder;
use super::{entry, Entry, GenError, GenKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub(crate) struct Pt([i64; 8]);

impl Add for Pt {
    type Output = Pt;
    fn add(self, o: Pt) -> Pt {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(o.0) {
            *a += b;
        }
        Pt(c)
    }
}

impl Pt {
    pub const ORIGIN: Pt = Pt([0; 8]);

    /// The unit vector at `15 * k` degrees.
    pub fn unit(k: i64) -> Pt {
        let mut c = [0i64; 8];
        c[0] = 1;
        for _ in 0..k.rem_euclid(24) {
            let top = c[7];
            for i in (1..8).rev() {
                c[i] = c[i - 1];
            }
            c[0] = -top;
            c[4] += top;
        }
        Pt(c)
    }

    /// Sum of unit vectors in the given directions.
    pub fn path(dirs: &[i64]) -> Pt {
        dirs.iter().fold(Pt::ORIGIN, |p, &k| p + Pt::unit(k))
    }

    pub fn scale(self, s: i64) -> Pt {
        Pt(self.0.map(|c| c * s))
    }

    pub fn xy(self) -> (f64, f64) {
        self.0.iter().enumerate().fold((0.0, 0.0), |(x, y), (i, &c)| {
            let a = (i as f64) * std::f64::consts::PI / 12.0;
            (x + c as f64 * a.cos(), y + c as f64 * a.sin())
        })
    }

    pub fn norm(self) -> f64 {
        let (x, y) = self.xy();
        x.hypot(y)
    }
}

/// Corners of the regular `p`-gon with side `side`, starting at `start` with
/// its first edge in direction `dir`, counter-clockwise.
pub(crate) fn polygon(start: Pt, dir: i64, p: usize, side: i64) -> Vec<Pt> {
    let turn = 24 / p as i64;
    let mut out = Vec::with_capacity(p);
    let mut cur = start;
    for i in 0..p as i64 {
        out.push(cur);
        cur = cur + Pt::unit(dir + i * turn).scale(side);
    }
    out
}

/// Faces given by exact corner coordinates, with vertices shared by position.
#[derive(Default)]
pub(crate) struct FaceSet {
    pub points: Vec<Pt>,
    index: HashMap<Pt, VertexId>,
    pub faces: Vec<Vec<VertexId>>,
    seen: BTreeSet<Vec<VertexId>>,
}

impl FaceSet {
    pub fn vertex(&mut self, p: Pt) -> VertexId {
        if let Some(&v) = self.index.get(&p) {
            return v;
        }
        self.points.push(p);
        self.index.insert(p, self.points.len() - 1);
        self.points.len() - 1
    }

    pub fn lookup(&self, p: Pt) -> Option<VertexId> {
        self.index.get(&p).copied()
    }

    /// Adds a face unless one with the same vertex set already exists.
    pub fn face(&mut self, corners: &[Pt]) {
        let ids: Vec<VertexId> = corners.iter().map(|&p| self.vertex(p)).collect();
        let mut key = ids.clone();
        key.sort_unstable();
        if self.seen.insert(key) {
            self.faces.push(ids);
        }
    }

    /// Adds every unit equilateral triangle on existing vertices.
    pub fn fill_triangles(&mut self) {
        for i in 0..self.points.len() {
            let u = self.points[i];
            for k in 0..24 {
                let v = u + Pt::unit(k);
                let w = u + Pt::unit(k + 4);
                if self.lookup(v).is_some() && self.lookup(w).is_some() {
                    self.face(&[u, v, w]);
                }
            }
        }
    }

    /// Boundary cycle of a disk, counter-clockwise with the faces on the left.
    pub fn boundary_cycle(&self) -> Result<Vec<VertexId>, GenError> {
        let mut directed: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for f in &self.faces {
            for i in 0..f.len() {
                *directed.entry((f[i], f[(i + 1) % f.len()])).or_default() += 1;
            }
        }
        let mut succ: HashMap<VertexId, VertexId> = HashMap::new();
        for &(a, b) in directed.keys() {
            if !directed.contains_key(&(b, a)) && succ.insert(a, b).is_some() {
                return Err(GenError::Construction("boundary is not a simple cycle".into()));
            }
        }
        let start =
            *succ.keys().min().ok_or_else(|| GenError::Construction("no boundary".into()))?;
        let mut cycle = vec![start];
        let mut cur = succ[&start];
        while cur != start {
            cycle.push(cur);
            cur = *succ.get(&cur).ok_or_else(|| GenError::Construction("open boundary".into()))?;
            if cycle.len() > succ.len() {
                return Err(GenError::Construction("boundary is not a single cycle".into()));
            }
        }
        if cycle.len() != succ.len() {
            return Err(GenError::Construction("boundary has several components".into()));
        }
        Ok(cycle)
    }

    pub fn into_core(self) -> Result<CoreBuilder, GenError> {
        let boundary = self.boundary_cycle()?;
        Ok(CoreBuilder {
            vertex_count: self.points.len(),
            faces: self.faces,
            boundary,
            targets: Default::default(),
        })
    }
}

/// Prototile: the `p`-gon at `start` (a path of unit steps from the cell origin) with first edge `dir`.
struct Tile {
    start: &'static [i64],
    dir: i64,
    p: usize,
}

struct Periodic {
    t1: &'static [i64],
    t2: &'static [i64],
    tiles: &'static [Tile],
    /// Fill remaining gaps with unit triangles.
    fill: bool,
}

const fn tile(start: &'static [i64], dir: i64, p: usize) -> Tile {
    Tile { start, dir, p }
}

/// Window of a periodic tiling: the ball of `radius` around the origin vertex.
fn periodic(spec: &Periodic, radius: usize) -> Result<Tessellation, GenError> {
    let t1 = Pt::path(spec.t1);
    let t2 = Pt::path(spec.t2);
    let (ax, ay) = t1.xy();
    let (bx, by) = t2.xy();
    let area = (ax * by - ay * bx).abs();
    let height = area / t1.norm().max(t2.norm());
    let reach = radius as f64 + 5.0;
    let n = ((reach + 8.0) / height).ceil() as i64 + 1;

    let mut fs = FaceSet::default();
    fs.vertex(Pt::ORIGIN);
    for a in -n..=n {
        for b in -n..=n {
            let shift = t1.scale(a) + t2.scale(b);
            for t in spec.tiles {
                let corners = polygon(shift + Pt::path(t.start), t.dir, t.p, 1);
                if corners.iter().all(|c| c.norm() <= reach) {
                    fs.face(&corners);
                }
            }
            if spec.fill && shift.norm() <= reach {
                fs.vertex(shift);
            }
        }
    }
    if spec.fill {
        fs.fill_triangles();
    }
    let statuses = infer_statuses(fs.points.len(), &fs.faces, &[])?;
    let t = Tessellation::new(false, statuses, fs.faces)?;
    Ok(t.ball(0, radius).tess)
}

const TRIANGLE: Periodic = Periodic { t1: &[0], t2: &[4], tiles: &[], fill: true };
const SQUARE: Periodic = Periodic { t1: &[0], t2: &[6], tiles: &[tile(&[], 0, 4)], fill: false };
const HEXAGON: Periodic =
    Periodic { t1: &[0, 4], t2: &[4, 8], tiles: &[tile(&[], 0, 6)], fill: false };
const KAGOME: Periodic =
    Periodic { t1: &[0, 0], t2: &[4, 4], tiles: &[tile(&[], 0, 6)], fill: true };
const T3_12_12: Periodic =
    Periodic { t1: &[0, 0, 2, 22], t2: &[4, 4, 6, 2], tiles: &[tile(&[], 0, 12)], fill: true };
const T4_8_8: Periodic = Periodic {
    t1: &[0, 3, 21],
    t2: &[6, 9, 3],
    tiles: &[tile(&[], 0, 8), tile(&[0], 21, 4)],
    fill: false,
};
// Dodecagon corners w_i sit at the partial sums of directions 0, 2, 4, ...;
// squares and hexagons go on the outside of its edges.
const T4_6_12: Periodic = Periodic {
    t1: &[22, 22, 22, 20, 0],
    t2: &[2, 2, 2, 0, 4],
    tiles: &[
        tile(&[], 0, 12),
        tile(&[0], 12, 4),
        tile(&[0, 2, 4], 16, 4),
        tile(&[0, 2, 4, 6, 8], 20, 4),
        tile(&[0, 2, 4, 6], 18, 6),
        tile(&[0, 2, 4, 6, 8, 10], 22, 6),
    ],
    fill: false,
};
const T3_4_6_4: Periodic = Periodic {
    t1: &[22, 20, 0],
    t2: &[2, 0, 4],
    tiles: &[tile(&[], 0, 6), tile(&[0], 12, 4), tile(&[0, 4], 16, 4), tile(&[0, 4, 8], 20, 4)],
    fill: true,
};
const SNUB_HEXAGONAL: Periodic =
    Periodic { t1: &[0, 0, 4], t2: &[4, 4, 8], tiles: &[tile(&[], 0, 6)], fill: true };
const ELONGATED: Periodic =
    Periodic { t1: &[0], t2: &[6, 4], tiles: &[tile(&[], 0, 4)], fill: true };
const SNUB_SQUARE: Periodic =
    Periodic { t1: &[0, 22], t2: &[6, 4], tiles: &[tile(&[], 0, 4), tile(&[], 10, 4)], fill: true };

/// Flat regular dodecagon of side 2, tiled by unit triangles and squares.
pub(crate) fn dodecagon_disk() -> FaceSet {
    let mut fs = FaceSet::default();
    let tri = |fs: &mut FaceSet, a: Pt, d: i64| {
        let u = Pt::unit(d);
        let v = Pt::unit(d + 4);
        fs.face(&[a, a + u, a + v]);
        fs.face(&[a + u, a + u + u, a + u + v]);
        fs.face(&[a + v, a + u + v, a + v + v]);
        fs.face(&[a + u, a + u + v, a + v]);
    };
    let quad = |fs: &mut FaceSet, a: Pt, d: i64| {
        let u = Pt::unit(d);
        let w = Pt::unit(d + 6);
        for (i, j) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let p = a + u.scale(i) + w.scale(j);
            fs.face(&[p, p + u, p + u + w, p + w]);
        }
    };
    let hex = polygon(Pt::ORIGIN, 0, 6, 2);
    for k in 0..6 {
        let a = 4 * k as i64;
        // Central hexagon as six subdivided triangles.
        tri(&mut fs, hex[k], a);
        quad(&mut fs, hex[(k + 1) % 6], a + 12);
        tri(&mut fs, hex[k], a - 10);
    }
    fs
}

pub(super) fn entries() -> Vec<Entry> {
    use GenKind::Infinite;
    let zero = Curv::ZERO;
    vec![
        entry("triangle_tiling", Infinite, "regular tiling 3^6", zero, &[], 0, 0, |r| {
            periodic(&TRIANGLE, r)
        }),
        entry("square_tiling", Infinite, "regular tiling 4^4", zero, &[], 0, 0, |r| {
            periodic(&SQUARE, r)
        }),
        entry("hex_tiling", Infinite, "regular tiling 6^3", zero, &[], 0, 0, |r| {
            periodic(&HEXAGON, r)
        }),
        entry("tiling_3_6_3_6", Infinite, "trihexagonal tiling", zero, &[], 0, 0, |r| {
            periodic(&KAGOME, r)
        }),
        entry("tiling_3_12_12", Infinite, "truncated hexagonal tiling", zero, &[], 0, 0, |r| {
            periodic(&T3_12_12, r)
        }),
        entry("tiling_4_8_8", Infinite, "truncated square tiling", zero, &[], 0, 0, |r| {
            periodic(&T4_8_8, r)
        }),
        entry("tiling_4_6_12", Infinite, "truncated trihexagonal tiling", zero, &[], 0, 0, |r| {
            periodic(&T4_6_12, r)
        }),
        entry("tiling_3_4_6_4", Infinite, "rhombitrihexagonal tiling", zero, &[], 0, 0, |r| {
            periodic(&T3_4_6_4, r)
        }),
        entry("tiling_3_3_3_3_6", Infinite, "snub hexagonal tiling", zero, &[], 0, 0, |r| {
            periodic(&SNUB_HEXAGONAL, r)
        }),
        entry("tiling_3_3_3_4_4", Infinite, "elongated triangular tiling", zero, &[], 0, 0, |r| {
            periodic(&ELONGATED, r)
        }),
        entry("tiling_3_3_4_3_4", Infinite, "snub square tiling", zero, &[], 0, 0, |r| {
            periodic(&SNUB_SQUARE, r)
        }),
    ]
}
