//! Convex polyhedra as closed tessellations of the sphere.

use std::collections::{HashMap, VecDeque};

use crate::curv::Curv;
use crate::tess::{Tessellation, VertexId, VertexStatus};

use super::{entry, Entry, GenError, GenKind};

/// Reverses faces as needed so every edge is traversed once in each direction.
fn orient(mut faces: Vec<Vec<VertexId>>) -> Result<Vec<Vec<VertexId>>, GenError> {
    let mut by_edge: HashMap<(VertexId, VertexId), Vec<usize>> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for k in 0..f.len() {
            let (a, b) = (f[k], f[(k + 1) % f.len()]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(i);
        }
    }
    let mut done = vec![false; faces.len()];
    let mut queue = VecDeque::from([0]);
    done[0] = true;
    while let Some(i) = queue.pop_front() {
        let f = faces[i].clone();
        for k in 0..f.len() {
            let (a, b) = (f[k], f[(k + 1) % f.len()]);
            for &j in &by_edge[&(a.min(b), a.max(b))] {
                if j == i {
                    continue;
                }
                let g = &faces[j];
                let same_way = (0..g.len()).any(|t| g[t] == a && g[(t + 1) % g.len()] == b);
                if done[j] {
                    if same_way {
                        return Err(GenError::Construction("surface is not orientable".into()));
                    }
                } else {
                    if same_way {
                        faces[j].reverse();
                    }
                    done[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    Ok(faces)
}

fn closed(faces: Vec<Vec<VertexId>>) -> Result<Tessellation, GenError> {
    let faces = orient(faces)?;
    let n = faces.iter().flatten().max().map_or(0, |&v| v + 1);
    Ok(Tessellation::new(true, vec![VertexStatus::Interior; n], faces)?)
}

fn prism_faces(n: usize) -> Vec<Vec<VertexId>> {
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + j, n + i]);
    }
    faces
}

fn antiprism_faces(n: usize) -> Vec<Vec<VertexId>> {
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + i]);
        faces.push(vec![j, n + j, n + i]);
    }
    faces
}

/// Apex 0, upper ring 1..=5, lower ring 6..=10 (each lower vertex sits between
/// two upper ones), apex 11.
fn icosahedron_faces() -> Vec<Vec<VertexId>> {
    let mut faces = Vec::new();
    for k in 0..5 {
        let (u, u1) = (1 + k, 1 + (k + 1) % 5);
        let (l, l1) = (6 + k, 6 + (k + 1) % 5);
        faces.push(vec![0, u, u1]);
        faces.push(vec![u, l, u1]);
        faces.push(vec![u1, l, l1]);
        faces.push(vec![11, l, l1]);
    }
    faces
}

/// Dual of an oriented closed surface: one vertex per face, one face per vertex.
fn dual(faces: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    // For each directed edge (a, b), the face that traverses it.
    let mut owner: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for k in 0..f.len() {
            owner.insert((f[k], f[(k + 1) % f.len()]), i);
        }
    }
    let n = faces.iter().flatten().max().map_or(0, |&v| v + 1);
    (0..n)
        .map(|v| {
            let (&(_, first_b), &start) =
                owner.iter().find(|(&(a, _), _)| a == v).expect("every vertex lies on a face");
            let mut cycle = vec![start];
            let mut b = first_b;
            loop {
                // The face entering v along (b, v) comes next around v.
                let f = owner[&(b, v)];
                if f == start {
                    break;
                }
                cycle.push(f);
                let w = &faces[f];
                let at = w.iter().position(|&x| x == v).expect("face contains v");
                b = w[(at + 1) % w.len()];
            }
            cycle
        })
        .collect()
}

pub(super) fn entries() -> Vec<Entry> {
    use GenKind::Closed;
    let two = Curv::int(2);
    vec![
        entry("tetrahedron", Closed, "regular tetrahedron", two, &[(&[3, 3, 3], 4)], 1, 0, |_| {
            closed(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
        }),
        entry("cube", Closed, "cube", two, &[(&[4, 4, 4], 8)], 1, 0, |_| closed(prism_faces(4))),
        entry("octahedron", Closed, "regular octahedron", two, &[(&[3, 3, 3, 3], 6)], 1, 0, |_| {
            closed(antiprism_faces(3))
        }),
        entry(
            "icosahedron",
            Closed,
            "regular icosahedron",
            two,
            &[(&[3, 3, 3, 3, 3], 12)],
            1,
            0,
            |_| closed(icosahedron_faces()),
        ),
        entry(
            "dodecahedron",
            Closed,
            "regular dodecahedron",
            two,
            &[(&[5, 5, 5], 20)],
            1,
            0,
            |_| closed(dual(&orient(icosahedron_faces())?)),
        ),
        entry("prism3", Closed, "triangular prism", two, &[(&[3, 4, 4], 6)], 1, 0, |_| {
            closed(prism_faces(3))
        }),
        entry("prism5", Closed, "pentagonal prism", two, &[(&[4, 4, 5], 10)], 1, 0, |_| {
            closed(prism_faces(5))
        }),
        entry("prism6", Closed, "hexagonal prism", two, &[(&[4, 4, 6], 12)], 1, 0, |_| {
            closed(prism_faces(6))
        }),
        entry("antiprism4", Closed, "square antiprism", two, &[(&[3, 3, 3, 4], 8)], 1, 0, |_| {
            closed(antiprism_faces(4))
        }),
        entry(
            "antiprism5",
            Closed,
            "pentagonal antiprism",
            two,
            &[(&[3, 3, 3, 5], 10)],
            1,
            0,
            |_| closed(antiprism_faces(5)),
        ),
    ]
}
