//! Flat collars around a finite core.
//!
//! Every core boundary edge grows a straight strip outwards, and every core
//! boundary vertex gets a fan of triangle and square wedges between the strips
//! of its two edges. Strips and wedges meet along straight rays of unit edges,
//! so every vertex off the core is flat: a ray vertex sees half a turn from
//! each side. Angles are tracked in units of 1/12 turn; the core fixes how
//! much angle each boundary vertex still needs, and a cyclic search chooses
//! strip types so every corner remainder is fillable by wedges (0 or >= 2 units).

use std::collections::BTreeSet;

use crate::curv::Curv;
use crate::tess::{infer_statuses, Tessellation, VertexId};

use super::core::CoreBuilder;
use super::GenError;

const H: f64 = 0.866_025_403_784_438_6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Side {
    /// Column of squares: 3 and 3 units.
    Square,
    /// Parallelogram strip of triangles, 2 units at its start and 4 at its end.
    Lean,
    /// Mirror image of `Lean`: 4 then 2.
    Mirror,
    /// Widening triangle strip: 4 and 4.
    Wedge,
}

impl Side {
    fn start(self) -> i128 {
        match self {
            Side::Square => 3,
            Side::Lean => 2,
            Side::Mirror | Side::Wedge => 4,
        }
    }

    fn end(self) -> i128 {
        match self {
            Side::Square => 3,
            Side::Mirror => 2,
            Side::Lean | Side::Wedge => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Piece {
    /// 60 degree wedge of the triangular lattice.
    Tri,
    /// 90 degree wedge of the square lattice.
    Quad,
}

const ORDERS: [[Side; 4]; 4] = [
    [Side::Square, Side::Lean, Side::Mirror, Side::Wedge],
    [Side::Wedge, Side::Square, Side::Lean, Side::Mirror],
    [Side::Lean, Side::Mirror, Side::Square, Side::Wedge],
    [Side::Mirror, Side::Wedge, Side::Lean, Side::Square],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Plan {
    pub sides: Vec<Side>,
    /// `fans[i]` fills the corner at `boundary[i]`.
    pub fans: Vec<Vec<Piece>>,
}

fn fan_for(units: i128, quads_first: bool) -> Option<Vec<Piece>> {
    if units < 0 || units == 1 {
        return None;
    }
    let quads = (units % 2) as usize;
    let tris = ((units - 3 * quads as i128) / 2) as usize;
    let mut fan = vec![Piece::Tri; tris];
    if quads_first {
        fan.splice(0..0, std::iter::repeat_n(Piece::Quad, quads));
    } else {
        fan.extend(std::iter::repeat_n(Piece::Quad, quads));
    }
    Some(fan)
}

/// Remaining angle, in twelfths of a turn, at each core boundary vertex.
fn needs(core: &CoreBuilder) -> Result<Vec<i128>, GenError> {
    core.boundary
        .iter()
        .map(|&v| {
            let need = (Curv::int(1) - core.target(v) - core.angle(v)) * 12;
            if need.denom() != 1 {
                return Err(GenError::Construction(format!(
                    "boundary vertex {v} needs {need}/12 turn, not a whole number of twelfths"
                )));
            }
            Ok(need.numer())
        })
        .collect()
}

pub(crate) fn plan(
    core: &CoreBuilder,
    style: usize,
    forced: Option<&[Side]>,
) -> Result<Plan, GenError> {
    let need = needs(core)?;
    let m = need.len();
    let order = ORDERS[style % ORDERS.len()];
    let allowed = |i: usize| -> Vec<Side> {
        match forced {
            Some(f) => vec![f[i]],
            None => order.to_vec(),
        }
    };
    let ok = |corner: usize, before: Side, after: Side| {
        let r = need[corner] - before.end() - after.start();
        r == 0 || r >= 2
    };
    for s0 in allowed(0) {
        // reach[i] = side types for side i that can be completed to a full cycle.
        let mut reach: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
        let idx = |s: Side| order.iter().position(|&x| x == s).unwrap_or(0);
        for i in (1..m).rev() {
            for t in allowed(i) {
                let good = if i == m - 1 {
                    ok(0, t, s0)
                } else {
                    reach[i + 1].iter().any(|&u| ok(i + 1, t, order[u]))
                };
                if good {
                    reach[i].insert(idx(t));
                }
            }
        }
        let first_ok =
            if m == 1 { ok(0, s0, s0) } else { reach[1].iter().any(|&u| ok(1, s0, order[u])) };
        if !first_ok {
            continue;
        }
        let mut sides = vec![s0];
        for i in 1..m {
            let prev = sides[i - 1];
            let pick = allowed(i)
                .into_iter()
                .find(|&t| reach[i].contains(&idx(t)) && ok(i, prev, t))
                .expect("reachability guarantees a continuation");
            sides.push(pick);
        }
        let fans = (0..m)
            .map(|i| {
                let before = sides[(i + m - 1) % m];
                let r = need[i] - before.end() - sides[i].start();
                fan_for(r, style / ORDERS.len() % 2 == 1).expect("checked by ok")
            })
            .collect();
        return Ok(Plan { sides, fans });
    }
    Err(GenError::Construction("no strip assignment closes every corner".into()))
}

/// Ordered ways to fill `units` twelfths of a turn with triangles (2) and squares (3).
fn flat_fills(units: i128) -> Vec<Vec<usize>> {
    if units == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (face, u) in [(3usize, 2i128), (4, 3)] {
        if units >= u {
            for mut rest in flat_fills(units - u) {
                rest.insert(0, face);
                out.push(rest);
            }
        }
    }
    out
}

/// Plans a collar, first closing up to `max_repairs` boundary vertices of the
/// core with flat fans of triangles and squares when no plan exists as is.
/// Candidates are tried breadth first in boundary order, so the result is deterministic.
pub(crate) fn plan_with_repairs(
    core: &CoreBuilder,
    style: usize,
    max_repairs: usize,
) -> Result<(CoreBuilder, Plan), GenError> {
    let mut frontier = vec![core.clone()];
    for depth in 0..=max_repairs {
        for c in &frontier {
            if let Ok(p) = plan(c, style, None) {
                return Ok((c.clone(), p));
            }
        }
        if depth == max_repairs {
            break;
        }
        let mut next = Vec::new();
        for c in &frontier {
            let need = needs(c)?;
            for (i, &v) in c.boundary.iter().enumerate() {
                if need[i] > 8 {
                    continue;
                }
                for fill in flat_fills(need[i]) {
                    let mut d = c.clone();
                    if d.complete(v, &fill).is_ok() && d.settle(true).is_ok() {
                        next.push(d);
                    }
                }
            }
        }
        frontier = next;
    }
    Err(GenError::Construction("no strip assignment closes every corner".into()))
}

/// A piece of lattice with two distinguished rays, each listed from its apex outwards.
pub(crate) struct Region {
    pub count: usize,
    pub faces: Vec<Vec<usize>>,
    pub first: Vec<usize>,
    pub last: Vec<usize>,
}

struct PointSet {
    points: Vec<(f64, f64)>,
    index: std::collections::HashMap<(i64, i64), usize>,
}

impl PointSet {
    fn new() -> PointSet {
        PointSet { points: Vec::new(), index: std::collections::HashMap::new() }
    }

    fn add(&mut self, key: (i64, i64), xy: (f64, f64)) -> usize {
        if let Some(&i) = self.index.get(&key) {
            return i;
        }
        self.points.push(xy);
        self.index.insert(key, self.points.len() - 1);
        self.points.len() - 1
    }

    fn get(&self, key: (i64, i64)) -> Option<usize> {
        self.index.get(&key).copied()
    }

    /// Orients a face counter-clockwise.
    fn ccw(&self, mut face: Vec<usize>) -> Vec<usize> {
        let n = face.len();
        let area: f64 = (0..n)
            .map(|i| {
                let (x0, y0) = self.points[face[i]];
                let (x1, y1) = self.points[face[(i + 1) % n]];
                x0 * y1 - x1 * y0
            })
            .sum();
        if area < 0.0 {
            face.reverse();
        }
        face
    }
}

fn tri_xy(a: i64, b: i64) -> (f64, f64) {
    (a as f64 + 0.5 * b as f64, H * b as f64)
}

/// Triangular-lattice region whose row `b` spans `a` in `rows(b)`, for `b` in `0..=depth`.
fn tri_region(
    depth: usize,
    rows: impl Fn(i64) -> (i64, i64),
    first: impl Fn(i64) -> (i64, i64),
    last: impl Fn(i64) -> (i64, i64),
) -> Region {
    let mut ps = PointSet::new();
    for b in 0..=depth as i64 {
        let (lo, hi) = rows(b);
        for a in lo..=hi {
            ps.add((a, b), tri_xy(a, b));
        }
    }
    let mut faces = Vec::new();
    for b in 0..depth as i64 {
        let (lo, hi) = rows(b);
        let (lo2, _) = rows(b + 1);
        for a in lo.min(lo2)..=hi {
            let up = [(a, b), (a + 1, b), (a, b + 1)];
            let down = [(a + 1, b), (a + 1, b + 1), (a, b + 1)];
            for tri in [up, down] {
                let ids: Option<Vec<usize>> = tri.iter().map(|&k| ps.get(k)).collect();
                if let Some(ids) = ids {
                    faces.push(ps.ccw(ids));
                }
            }
        }
    }
    let ray = |f: &dyn Fn(i64) -> (i64, i64)| -> Vec<usize> {
        (0..=depth as i64).map(|j| ps.get(f(j)).expect("ray inside region")).collect()
    };
    Region { count: ps.points.len(), first: ray(&first), last: ray(&last), faces }
}

fn square_region(
    depth: usize,
    xs: impl Fn(i64) -> (i64, i64),
    first: impl Fn(i64) -> (i64, i64),
    last: impl Fn(i64) -> (i64, i64),
) -> Region {
    let mut ps = PointSet::new();
    for y in 0..=depth as i64 {
        let (lo, hi) = xs(y);
        for x in lo..=hi {
            ps.add((x, y), (x as f64, y as f64));
        }
    }
    let mut faces = Vec::new();
    for y in 0..depth as i64 {
        let (lo, hi) = xs(y);
        for x in lo..hi {
            let sq = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)];
            let ids: Option<Vec<usize>> = sq.iter().map(|&k| ps.get(k)).collect();
            if let Some(ids) = ids {
                faces.push(ps.ccw(ids));
            }
        }
    }
    let ray = |f: &dyn Fn(i64) -> (i64, i64)| -> Vec<usize> {
        (0..=depth as i64).map(|j| ps.get(f(j)).expect("ray inside region")).collect()
    };
    Region { count: ps.points.len(), first: ray(&first), last: ray(&last), faces }
}

/// Strip on a core edge. Local frame: the edge's end at the origin, its start
/// at (1, 0), outward is +y. `first` is the ray from the start, `last` from the end.
pub(crate) fn side_region(side: Side, depth: usize) -> Region {
    match side {
        Side::Square => square_region(depth, |_| (0, 1), |j| (1, j), |j| (0, j)),
        Side::Lean => tri_region(depth, |b| (-b, 1 - b), |j| (1 - j, j), |j| (-j, j)),
        Side::Mirror => tri_region(depth, |_| (0, 1), |j| (1, j), |j| (0, j)),
        Side::Wedge => tri_region(depth, |b| (-b, 1), |j| (1, j), |j| (-j, j)),
    }
}

/// Wedge with apex at the origin; `first` along angle 0, `last` counter-clockwise from it.
pub(crate) fn fan_region(piece: Piece, depth: usize) -> Region {
    let d = depth as i64;
    match piece {
        Piece::Tri => tri_region(depth, move |b| (0, d - b), |j| (j, 0), |j| (0, j)),
        Piece::Quad => square_region(depth, move |_| (0, d), |j| (j, 0), |j| (0, j)),
    }
}

/// Vertex identification over several pieces, resolved by union-find.
#[derive(Default)]
pub(crate) struct Assembly {
    parent: Vec<usize>,
    faces: Vec<Vec<usize>>,
    boundary_edges: Vec<(usize, usize)>,
}

impl Assembly {
    pub fn with_core(vertex_count: usize, faces: &[Vec<VertexId>]) -> Assembly {
        Assembly {
            parent: (0..vertex_count).collect(),
            faces: faces.to_vec(),
            boundary_edges: Vec::new(),
        }
    }

    /// Adds a region and returns the offset of its local vertex ids.
    pub fn add(&mut self, region: &Region) -> usize {
        let base = self.parent.len();
        self.parent.extend(base..base + region.count);
        for f in &region.faces {
            self.faces.push(f.iter().map(|&v| v + base).collect());
        }
        base
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Identifies two vertices; the smaller id survives.
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    pub fn glue(&mut self, a: &[usize], b: &[usize]) {
        for (&x, &y) in a.iter().zip(b) {
            self.union(x, y);
        }
    }

    pub fn mark_boundary(&mut self, ray: &[usize]) {
        for w in ray.windows(2) {
            self.boundary_edges.push((w[0], w[1]));
        }
    }

    /// Final id of `x` in the patch returned by [`Assembly::finish`].
    pub fn resolve(&mut self, x: usize) -> usize {
        let r = self.find(x);
        (0..r).filter(|&y| self.find(y) == y).count()
    }

    /// Resolves identifications and builds the patch; surviving ids are
    /// renumbered in ascending order, so unmerged low ids keep their value.
    pub fn finish(mut self) -> Result<Tessellation, GenError> {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        let mut dense = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if roots[x] == x {
                dense[x] = next;
                next += 1;
            }
        }
        let map = |x: usize| dense[roots[x]];
        let faces: Vec<Vec<usize>> =
            self.faces.iter().map(|f| f.iter().map(|&v| map(v)).collect()).collect();
        let marked: Vec<(usize, usize)> =
            self.boundary_edges.iter().map(|&(a, b)| (map(a), map(b))).collect();
        let statuses = infer_statuses(next, &faces, &marked)?;
        Ok(Tessellation::new(false, statuses, faces)?)
    }
}

/// Core plus collar out to `depth` rows, with core vertex ids unchanged.
pub(crate) fn collar(
    core: &CoreBuilder,
    plan: &Plan,
    depth: usize,
) -> Result<Tessellation, GenError> {
    let m = core.boundary.len();
    let mut asm = Assembly::with_core(core.vertex_count, &core.faces);
    let mut strips = Vec::with_capacity(m);
    for (i, &side) in plan.sides.iter().enumerate() {
        let r = side_region(side, depth);
        let base = asm.add(&r);
        let first: Vec<usize> = r.first.iter().map(|&v| v + base).collect();
        let last: Vec<usize> = r.last.iter().map(|&v| v + base).collect();
        asm.union(first[0], core.boundary[i]);
        asm.union(last[0], core.boundary[(i + 1) % m]);
        strips.push((first, last));
    }
    for i in 0..m {
        let mut ray = strips[(i + m - 1) % m].1.clone();
        for &piece in &plan.fans[i] {
            let r = fan_region(piece, depth);
            let base = asm.add(&r);
            let first: Vec<usize> = r.first.iter().map(|&v| v + base).collect();
            asm.glue(&ray, &first);
            ray = r.last.iter().map(|&v| v + base).collect();
        }
        let next = strips[i].0.clone();
        asm.glue(&ray, &next);
    }
    asm.finish()
}
