//! Barycentric (Tutte) sketch of a patch as SVG.
//!
//! The outer cycle is pinned to a regular polygon and every other vertex is
//! relaxed towards the average of its neighbours. The picture is only a
//! sketch: windows of non-planar-looking patches may overlap.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::fmt::Write;

use combicurv::curvature::curvature_at;
use combicurv::{Tessellation, VertexId};

const SIZE: f64 = 600.0;
const ITERATIONS: usize = 2000;

/// Vertices of the outer cycle, in walk order.
fn outer_cycle(t: &Tessellation) -> Vec<VertexId> {
    if t.is_closed() {
        return t.faces().iter().max_by_key(|f| f.len()).cloned().unwrap_or_default();
    }
    // A face walking a -> b on a one-face edge leaves the outside running b -> a.
    let mut next: HashMap<VertexId, VertexId> = HashMap::new();
    for e in t.edges() {
        if e.faces.len() != 1 {
            continue;
        }
        let walk = t.face(e.faces[0]);
        let (a, b) = e.ends;
        let forward = (0..walk.len()).any(|i| walk[i] == a && walk[(i + 1) % walk.len()] == b);
        let (from, to) = if forward { (b, a) } else { (a, b) };
        next.entry(from).or_insert(to);
    }
    let mut best = Vec::new();
    let mut starts: Vec<VertexId> = next.keys().copied().collect();
    starts.sort_unstable();
    for s in starts {
        let mut cycle = vec![s];
        let mut v = next[&s];
        while v != s && cycle.len() <= next.len() {
            cycle.push(v);
            match next.get(&v) {
                Some(&w) => v = w,
                None => break,
            }
        }
        if v == s && cycle.len() > best.len() {
            best = cycle;
        }
    }
    best
}

fn layout(t: &Tessellation) -> Vec<(f64, f64)> {
    let n = t.vertex_count();
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    let outer = outer_cycle(t);
    for (i, &v) in outer.iter().enumerate() {
        let a = TAU * i as f64 / outer.len() as f64;
        pos[v] = (a.cos(), a.sin());
        fixed[v] = true;
    }
    for _ in 0..ITERATIONS {
        for v in 0..n {
            let nb = t.neighbors(v);
            if fixed[v] || nb.is_empty() {
                continue;
            }
            let (sx, sy) = nb.iter().fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            pos[v] = (sx / nb.len() as f64, sy / nb.len() as f64);
        }
    }
    pos
}

fn fill(degree: usize) -> &'static str {
    match degree {
        3 => "#f4d35e",
        4 => "#9bc1bc",
        5 => "#ee964b",
        6 => "#c4b7cb",
        _ => "#e6e6e6",
    }
}

pub fn svg(t: &Tessellation) -> String {
    let pos = layout(t);
    let scale = SIZE / 2.0 - 20.0;
    let at = |v: VertexId| (SIZE / 2.0 + scale * pos[v].0, SIZE / 2.0 - scale * pos[v].1);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    for (f, walk) in t.faces().iter().enumerate() {
        let points: Vec<String> = walk
            .iter()
            .map(|&v| {
                let (x, y) = at(v);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            out,
            r##"<polygon data-face="{f}" points="{}" fill="{}" stroke="#333" stroke-width="1"/>"##,
            points.join(" "),
            fill(walk.len())
        );
    }
    for v in t.vertex_ids() {
        let (x, y) = at(v);
        let curved = curvature_at(t, v).is_ok_and(|phi| !phi.is_zero());
        let (r, colour) = if curved { (4.0, "#c0392b") } else { (1.5, "#333") };
        let _ = writeln!(
            out,
            r#"<circle data-vertex="{v}" cx="{x:.3}" cy="{y:.3}" r="{r}" fill="{colour}"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}
