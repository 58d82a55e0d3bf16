//! Curved cores for the extremal examples.

use crate::curv::Curv;
use crate::curvature::phi_of_pattern;
use crate::tess::Tessellation;

use super::collar::{collar, fan_region, plan, plan_with_repairs, Assembly, Piece, Side};
use super::core::CoreBuilder;
use super::cyclo::dodecagon_disk;
use super::{entry, Entry, GenError, GenKind};

fn twelfth() -> Curv {
    Curv::new(1, 12)
}

/// Core plus collar, cut to the ball of `radius` around the core. Without
/// forced sides, up to `repairs` flat fills may be added to the core first.
fn collared(
    core: &CoreBuilder,
    style: usize,
    forced: Option<&[Side]>,
    repairs: usize,
    radius: usize,
) -> Result<Tessellation, GenError> {
    let (core, p) = match forced {
        Some(_) => (core.clone(), plan(core, style, forced)?),
        None => plan_with_repairs(core, style, repairs)?,
    };
    let big = collar(&core, &p, radius + 3)?;
    let centers: Vec<usize> = (0..core.vertex_count).collect();
    Ok(big.ball_around(&centers, radius).tess)
}

/// The star of one curved vertex with the given cyclic face sequence.
pub(crate) fn star_core(cycle: &[usize]) -> Result<CoreBuilder, GenError> {
    let mut b = CoreBuilder::polygon(cycle[0]);
    b.complete(0, &cycle[1..])?;
    b.targets.insert(0, phi_of_pattern(cycle));
    b.settle(true)?;
    b.compact();
    Ok(b)
}

fn star(cycle: &[usize], style: usize, radius: usize) -> Result<Tessellation, GenError> {
    collared(&star_core(cycle)?, style, None, 0, radius)
}

/// Face placed between hendecagon-edge faces of degrees `a` and `b` at their
/// shared hendecagon vertex, so the vertex has curvature 1/132.
fn hendecagon_middle(a: usize, b: usize) -> Result<Option<usize>, GenError> {
    match (a.min(b), a.max(b)) {
        (3, 12) | (4, 6) => Ok(None),
        (3, 3) => Ok(Some(4)),
        (3, 4) => Ok(Some(3)),
        _ => Err(GenError::Construction(format!("no 1/132 vertex between {a} and {b}"))),
    }
}

/// A hendecagon whose `i`-th edge carries a face of degree `edges[i]`, with
/// middle faces inserted where needed so all eleven corners have curvature 1/132.
pub(crate) fn hendecagon_core(edges: &[usize; 11]) -> Result<CoreBuilder, GenError> {
    let mut b = CoreBuilder::polygon(11);
    let mid = |i: usize| hendecagon_middle(edges[(i + 10) % 11], edges[i]);
    let mut first = vec![edges[0]];
    first.extend(mid(0)?);
    first.push(edges[10]);
    b.complete(0, &first)?;
    for (i, &e) in edges.iter().enumerate().take(10).skip(1) {
        let mut faces = vec![e];
        faces.extend(mid(i)?);
        b.complete(i, &faces)?;
    }
    if let Some(m) = mid(10)? {
        b.complete(10, &[m])?;
    }
    for v in 0..11 {
        b.targets.insert(v, Curv::new(1, 132));
    }
    b.settle(true)?;
    b.compact();
    Ok(b)
}

fn hendecagon(
    edges: &[usize; 11],
    repairs: usize,
    radius: usize,
) -> Result<Tessellation, GenError> {
    collared(&hendecagon_core(edges)?, 0, None, repairs, radius)
}

/// A side-2 regular dodecagon of triangles and squares whose twelve corners
/// are completed to (3,4,4,4) by square strips, leaving every edge midpoint flat.
fn dodecagon_corners(radius: usize) -> Result<Tessellation, GenError> {
    let mut core = dodecagon_disk().into_core()?;
    for v in core.boundary.clone() {
        if core.angle(v) == Curv::new(5, 12) {
            core.targets.insert(v, twelfth());
        }
    }
    let forced = vec![Side::Square; core.boundary.len()];
    collared(&core, 0, Some(&forced), 0, radius)
}

/// Lattice wedges sharing an apex, glued in counter-clockwise order. The two
/// outer rays are the boundary; the window is the ball around the apex.
fn wedges(pieces: &[Piece], radius: usize) -> Result<Tessellation, GenError> {
    let mut asm = Assembly::default();
    let mut rays = Vec::new();
    for &piece in pieces {
        let r = fan_region(piece, radius + 3);
        let base = asm.add(&r);
        let shift = |ray: &[usize]| ray.iter().map(|&v| v + base).collect::<Vec<_>>();
        rays.push((shift(&r.first), shift(&r.last)));
    }
    for w in rays.windows(2) {
        asm.glue(&w[0].1, &w[1].0);
    }
    let (first, last) = (rays[0].0.clone(), rays[rays.len() - 1].1.clone());
    asm.mark_boundary(&first);
    asm.mark_boundary(&last);
    let apex = asm.resolve(first[0]);
    Ok(asm.finish()?.ball(apex, radius).tess)
}

pub(super) fn entries() -> Vec<Entry> {
    use GenKind::{Infinite, WithBoundary};
    vec![
        entry(
            "fig1",
            Infinite,
            "single curved vertex (3,4,4,4)",
            twelfth(),
            &[(&[3, 4, 4, 4], 1)],
            1,
            1,
            |r| star(&[3, 4, 4, 4], 0, r),
        ),
        entry(
            "fig25a",
            Infinite,
            "single curved vertex (3,6,12)",
            twelfth(),
            &[(&[3, 6, 12], 1)],
            1,
            1,
            |r| star(&[3, 6, 12], 0, r),
        ),
        entry(
            "fig25b",
            Infinite,
            "single curved vertex (3,3,3,12)",
            twelfth(),
            &[(&[3, 3, 3, 12], 1)],
            1,
            2,
            |r| star(&[3, 3, 3, 12], 0, r),
        ),
        entry(
            "fig25c",
            Infinite,
            "single curved vertex (3,3,4,6), faces in cyclic order 3,3,4,6",
            twelfth(),
            &[(&[3, 3, 4, 6], 1)],
            1,
            2,
            |r| star(&[3, 3, 4, 6], 0, r),
        ),
        entry(
            "fig25d",
            Infinite,
            "single curved vertex (3,3,3,3,4)",
            twelfth(),
            &[(&[3, 3, 3, 3, 4], 1)],
            1,
            1,
            |r| star(&[3, 3, 3, 3, 4], 0, r),
        ),
        entry(
            "fig26a",
            Infinite,
            "single curved vertex (4,6,6)",
            twelfth(),
            &[(&[4, 6, 6], 1)],
            1,
            1,
            |r| star(&[4, 6, 6], 0, r),
        ),
        entry(
            "fig26b",
            Infinite,
            "single curved vertex (3,3,4,6), faces in cyclic order 3,4,3,6",
            twelfth(),
            &[(&[3, 3, 4, 6], 1)],
            1,
            1,
            |r| star(&[3, 4, 3, 6], 0, r),
        ),
        entry(
            "fig26c",
            Infinite,
            "single curved vertex (3,3,3,3,4), alternate collar",
            twelfth(),
            &[(&[3, 3, 3, 3, 4], 1)],
            1,
            2,
            |r| star(&[3, 3, 3, 3, 4], 2, r),
        ),
        entry(
            "fig27a",
            Infinite,
            "single curved vertex (4,4,12)",
            twelfth(),
            &[(&[4, 4, 12], 1)],
            1,
            1,
            |r| star(&[4, 4, 12], 0, r),
        ),
        entry(
            "fig27b",
            Infinite,
            "single curved vertex (3,4,4,4), alternate collar",
            twelfth(),
            &[(&[3, 4, 4, 4], 1)],
            1,
            1,
            |r| star(&[3, 4, 4, 4], 1, r),
        ),
        entry(
            "fig2",
            Infinite,
            "hendecagon with eleven curved corners: ten (3,11,12) and one (3,3,4,11)",
            twelfth(),
            &[(&[3, 11, 12], 10), (&[3, 3, 4, 11], 1)],
            1,
            0,
            |r| hendecagon(&[12, 3, 12, 3, 12, 3, 12, 3, 12, 3, 3], 2, r),
        ),
        entry(
            "fig28",
            Infinite,
            "hendecagon with eleven curved corners (3,3,4,11)",
            twelfth(),
            &[(&[3, 3, 4, 11], 11)],
            1,
            1,
            |r| hendecagon(&[4, 3, 3, 4, 3, 3, 3, 4, 3, 3, 3], 0, r),
        ),
        entry(
            "fig29",
            Infinite,
            "hendecagon with eleven curved corners: eight (4,6,11) and three (3,3,4,11)",
            twelfth(),
            &[(&[4, 6, 11], 8), (&[3, 3, 4, 11], 3)],
            1,
            1,
            |r| hendecagon(&[6, 4, 6, 4, 6, 4, 6, 4, 3, 3, 4], 0, r),
        ),
        entry(
            "fig31",
            Infinite,
            "twelve isolated (3,4,4,4) vertices at the corners of a flat dodecagon",
            Curv::int(1),
            &[(&[3, 4, 4, 4], 12)],
            12,
            2,
            dodecagon_corners,
        ),
        entry(
            "fig32",
            WithBoundary,
            "half-plane-like patch whose boundary corner joins a square wedge and a triangle wedge",
            twelfth(),
            &[(&[3, 4], 1)],
            1,
            3,
            |r| wedges(&[Piece::Quad, Piece::Tri], r),
        ),
        entry(
            "half_plane",
            WithBoundary,
            "flat half-plane of squares",
            Curv::ZERO,
            &[],
            0,
            0,
            |r| wedges(&[Piece::Quad, Piece::Quad], r),
        ),
    ]
}
