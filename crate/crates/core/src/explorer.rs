//! Bounded search over local configurations around a positively curved
//! vertex, and the connected components of the curved-vertex set.
//!
//! The search grows a disk outward from a seed star. At each step it picks an
//! unfinished boundary vertex within the radius and branches over every way to
//! finish its star: the sequence of face degrees placed in its gap, or closing
//! the gap by identifying its two boundary neighbours. A branch stops as soon
//! as the curvature collected from finished vertices reaches 1/12.
//!
//! Vertices created along different paths stay distinct unless a closing step
//! identifies them, so a configuration is a disk immersed in the real graph.
//!
//! With case reduction on, a branch also stops when a finished vertex has a
//! positive pattern from an earlier family than the seed's (families ordered
//! as by [`enumerate_positive`]). The verdict is then relative: it assumes the
//! earlier families are settled by their own searches.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::curv::Curv;
use crate::curvature::{nonzero_set, phi_of_pattern, total_curvature, CurvatureError};
use crate::generators::core::CoreBuilder;
use crate::patterns::{enumerate_positive, pattern_of, Pattern, MAX_FLAT_ENTRY};
use crate::tess::{cyclic_arrangements, Tessellation, VertexId, VertexStar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExploreError {
    #[error("seed {seed:?} has curvature {phi}; a positive seed is required")]
    InvalidSeed { seed: Vec<usize>, phi: Curv },
    #[error("seed star is incomplete")]
    IncompleteSeed,
    #[error("seed uses a face of degree {0}; degrees must lie in 3..=42")]
    FaceOutOfRange(usize),
    #[error("the window is not stabilized, so its curved-vertex set may be cut off")]
    NotStabilized,
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExploreOptions {
    /// Stars of vertices up to this distance from the seed may be completed.
    pub max_radius: usize,
    /// Maximum number of star completions tried.
    pub node_budget: usize,
    pub reduce_earlier_cases: bool,
}

impl Default for ExploreOptions {
    fn default() -> Self {
        ExploreOptions { max_radius: 2, node_budget: 200_000, reduce_earlier_cases: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    GapCertified,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapVerdict {
    pub kind: VerdictKind,
    /// Least curvature sum over the explored branches that ended by reaching
    /// 1/12 or by running out of radius.
    pub min_sum: Curv,
    /// Branches left open at the radius or budget limit.
    pub frontier_count: usize,
    pub nodes: usize,
    pub closed_by_sum: usize,
    pub closed_by_reduction: usize,
    /// Completions rejected because they break the tessellation structure.
    pub pruned: usize,
    pub budget_exhausted: bool,
}

impl GapVerdict {
    pub fn is_certified(&self) -> bool {
        self.kind == VerdictKind::GapCertified
    }

    fn immediate(phi: Curv) -> GapVerdict {
        GapVerdict {
            kind: VerdictKind::GapCertified,
            min_sum: phi,
            frontier_count: 0,
            nodes: 0,
            closed_by_sum: 1,
            closed_by_reduction: 0,
            pruned: 0,
            budget_exhausted: false,
        }
    }

    /// Combines verdicts for alternative seeds: certified only if all are.
    fn merge(self, other: GapVerdict) -> GapVerdict {
        let certified = self.is_certified() && other.is_certified();
        GapVerdict {
            kind: if certified { VerdictKind::GapCertified } else { VerdictKind::Inconclusive },
            min_sum: self.min_sum.min(other.min_sum),
            frontier_count: self.frontier_count + other.frontier_count,
            nodes: self.nodes + other.nodes,
            closed_by_sum: self.closed_by_sum + other.closed_by_sum,
            closed_by_reduction: self.closed_by_reduction + other.closed_by_reduction,
            pruned: self.pruned + other.pruned,
            budget_exhausted: self.budget_exhausted || other.budget_exhausted,
        }
    }
}

/// Whether some pattern with nonnegative curvature contains these face degrees.
/// Adding a face always lowers curvature, so the best completion pads with triangles.
pub fn extendable(partial: &[usize]) -> bool {
    if partial.iter().any(|&d| !(3..=MAX_FLAT_ENTRY).contains(&d)) {
        return false;
    }
    let mut padded = partial.to_vec();
    while padded.len() < 3 {
        padded.push(3);
    }
    !phi_of_pattern(&padded).is_negative()
}

/// Degrees that can fill the next slot shared by vertices with the given
/// partial stars, ascending.
pub fn candidate_degrees(partials: &[&[usize]]) -> Vec<usize> {
    (3..=MAX_FLAT_ENTRY)
        .filter(|&d| {
            partials.iter().all(|p| {
                let mut q = p.to_vec();
                q.push(d);
                extendable(&q)
            })
        })
        .collect()
}

fn twelfth() -> Curv {
    Curv::new(1, 12)
}

/// Position of each positive pattern's family in the family order.
fn family_ranks() -> HashMap<Vec<usize>, usize> {
    enumerate_positive(MAX_FLAT_ENTRY)
        .expect("the flat bound is an admissible cap")
        .into_iter()
        .enumerate()
        .map(|(i, f)| (f.prefix, i))
        .collect()
}

fn rank_of(ranks: &HashMap<Vec<usize>, usize>, p: &Pattern) -> Option<usize> {
    let d = p.degrees();
    ranks.get(&d[..d.len() - 1]).copied()
}

#[derive(Debug, Clone)]
enum Completion {
    /// Identify the two boundary neighbours; no new faces.
    Close,
    /// New faces in order from the `next` side to the `prev` side.
    Faces(Vec<usize>),
}

struct Search {
    opts: ExploreOptions,
    seed_rank: Option<usize>,
    ranks: HashMap<Vec<usize>, usize>,
    min_sum: Option<Curv>,
    frontier_count: usize,
    nodes: usize,
    closed_by_sum: usize,
    closed_by_reduction: usize,
    pruned: usize,
    budget_exhausted: bool,
}

fn fan(core: &CoreBuilder, v: VertexId) -> Vec<usize> {
    core.faces.iter().filter(|f| f.contains(&v)).map(|f| f.len()).collect()
}

fn distances(core: &CoreBuilder, from: VertexId) -> HashMap<VertexId, usize> {
    let mut adj: HashMap<VertexId, BTreeSet<VertexId>> = HashMap::new();
    for f in &core.faces {
        for i in 0..f.len() {
            let (a, b) = (f[i], f[(i + 1) % f.len()]);
            adj.entry(a).or_default().insert(b);
            adj.entry(b).or_default().insert(a);
        }
    }
    let mut dist = HashMap::from([(from, 0)]);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        for &w in adj.get(&u).into_iter().flatten() {
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                e.insert(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Faces are simple, no directed edge repeats, and the boundary is a simple
/// cycle whose edges each border exactly one face.
fn consistent(core: &CoreBuilder) -> bool {
    let mut directed = HashSet::new();
    for f in &core.faces {
        let distinct: HashSet<_> = f.iter().collect();
        if distinct.len() != f.len() {
            return false;
        }
        for i in 0..f.len() {
            if !directed.insert((f[i], f[(i + 1) % f.len()])) {
                return false;
            }
        }
    }
    let on_boundary: HashSet<_> = core.boundary.iter().collect();
    if on_boundary.len() != core.boundary.len() {
        return false;
    }
    let m = core.boundary.len();
    (0..m).all(|i| {
        let (a, b) = (core.boundary[i], core.boundary[(i + 1) % m]);
        directed.contains(&(a, b)) && !directed.contains(&(b, a))
    })
}

impl Search {
    fn record(&mut self, sum: Curv) {
        self.min_sum = Some(self.min_sum.map_or(sum, |m| m.min(sum)));
    }

    fn completions(&self, core: &CoreBuilder, v: VertexId) -> Vec<Completion> {
        let (Ok(p), Ok(n)) = (core.prev(v), core.next(v)) else {
            return Vec::new();
        };
        let fan_v = fan(core, v);
        let fan_p = fan(core, p);
        let fan_n = fan(core, n);
        let mut out = Vec::new();
        if fan_v.len() >= 3 && !phi_of_pattern(&fan_v).is_negative() {
            let merged: Vec<usize> = fan_p.iter().chain(&fan_n).copied().collect();
            if extendable(&merged) {
                out.push(Completion::Close);
            }
        }
        let mut seq = Vec::new();
        self.sequences(&fan_v, &fan_p, &fan_n, &mut seq, &mut out);
        out
    }

    /// Extends `seq` slot by slot; each slot's degree must keep `v` and the
    /// vertex across the shared edge extendable.
    fn sequences(
        &self,
        fan_v: &[usize],
        fan_p: &[usize],
        fan_n: &[usize],
        seq: &mut Vec<usize>,
        out: &mut Vec<Completion>,
    ) {
        let mut partial_v: Vec<usize> = fan_v.iter().chain(seq.iter()).copied().collect();
        let neighbour: Vec<usize> = match seq.last() {
            None => fan_n.to_vec(),
            Some(&d) => vec![d],
        };
        for d in candidate_degrees(&[&partial_v, &neighbour]) {
            seq.push(d);
            partial_v.push(d);
            // This face may be the last one, closing the gap against `prev`.
            let mut with_p = fan_p.to_vec();
            with_p.push(d);
            if partial_v.len() >= 3
                && !phi_of_pattern(&partial_v).is_negative()
                && extendable(&with_p)
            {
                out.push(Completion::Faces(seq.clone()));
            }
            self.sequences(fan_v, fan_p, fan_n, seq, out);
            partial_v.pop();
            seq.pop();
        }
    }

    fn apply(core: &CoreBuilder, v: VertexId, c: &Completion) -> Option<CoreBuilder> {
        let mut next = core.clone();
        let ok = match c {
            Completion::Close => next.zip(v).is_ok(),
            Completion::Faces(seq) => next.complete(v, seq).is_ok(),
        };
        (ok && consistent(&next)).then_some(next)
    }

    fn run(&mut self, core: CoreBuilder, acc: Curv) {
        if self.nodes >= self.opts.node_budget {
            self.budget_exhausted = true;
            self.frontier_count += 1;
            self.record(acc);
            return;
        }
        let dist = distances(&core, 0);
        let mut best: Option<(usize, usize, VertexId, Vec<Completion>)> = None;
        let nearest = core
            .boundary
            .iter()
            .filter_map(|v| dist.get(v))
            .filter(|&&d| d <= self.opts.max_radius)
            .min()
            .copied();
        let Some(nearest) = nearest else {
            self.frontier_count += 1;
            self.record(acc);
            return;
        };
        let mut candidates: Vec<VertexId> =
            core.boundary.iter().copied().filter(|v| dist.get(v) == Some(&nearest)).collect();
        candidates.sort_unstable();
        for v in candidates {
            let options = self.completions(&core, v);
            let key = (options.len(), v);
            if best.as_ref().is_none_or(|b| key < (b.0, b.2)) {
                best = Some((options.len(), nearest, v, options));
            }
        }
        let (_, _, v, options) = best.expect("at least one candidate");
        for c in options {
            if self.nodes >= self.opts.node_budget {
                self.budget_exhausted = true;
                self.frontier_count += 1;
                self.record(acc);
                return;
            }
            self.nodes += 1;
            let final_faces: Vec<usize> = match &c {
                Completion::Close => fan(&core, v),
                Completion::Faces(seq) => {
                    fan(&core, v).into_iter().chain(seq.iter().copied()).collect()
                }
            };
            let Some(next) = Search::apply(&core, v, &c) else {
                self.pruned += 1;
                continue;
            };
            let phi = phi_of_pattern(&final_faces);
            let acc2 = if phi.is_positive() { acc + phi } else { acc };
            if self.opts.reduce_earlier_cases && phi.is_positive() {
                let r = rank_of(&self.ranks, &Pattern::new(final_faces));
                if let (Some(r), Some(s)) = (r, self.seed_rank) {
                    if r < s {
                        self.closed_by_reduction += 1;
                        continue;
                    }
                }
            }
            if acc2 >= twelfth() {
                self.closed_by_sum += 1;
                self.record(acc2);
                continue;
            }
            self.run(next, acc2);
        }
    }
}

/// Searches configurations around a vertex with the given cyclic star.
pub fn explore(seed: &VertexStar, opts: ExploreOptions) -> Result<GapVerdict, ExploreError> {
    if !seed.complete || seed.faces.len() < 3 {
        return Err(ExploreError::IncompleteSeed);
    }
    if let Some(&d) = seed.faces.iter().find(|&&d| !(3..=MAX_FLAT_ENTRY).contains(&d)) {
        return Err(ExploreError::FaceOutOfRange(d));
    }
    let phi = phi_of_pattern(&seed.faces);
    if !phi.is_positive() {
        return Err(ExploreError::InvalidSeed { seed: seed.faces.clone(), phi });
    }
    if phi >= twelfth() {
        return Ok(GapVerdict::immediate(phi));
    }
    let ranks = family_ranks();
    let seed_rank = rank_of(&ranks, &Pattern::new(seed.faces.clone()));
    let mut core = CoreBuilder::polygon(seed.faces[0]);
    core.complete(0, &seed.faces[1..]).map_err(|_| ExploreError::IncompleteSeed)?;
    let mut search = Search {
        opts,
        seed_rank,
        ranks,
        min_sum: None,
        frontier_count: 0,
        nodes: 0,
        closed_by_sum: 0,
        closed_by_reduction: 0,
        pruned: 0,
        budget_exhausted: false,
    };
    search.run(core, phi);
    let certified = search.frontier_count == 0 && !search.budget_exhausted;
    Ok(GapVerdict {
        kind: if certified { VerdictKind::GapCertified } else { VerdictKind::Inconclusive },
        // Every branch closed by reduction or contradiction: nothing below 1/12 was seen.
        min_sum: search.min_sum.unwrap_or_else(twelfth),
        frontier_count: search.frontier_count,
        nodes: search.nodes,
        closed_by_sum: search.closed_by_sum,
        closed_by_reduction: search.closed_by_reduction,
        pruned: search.pruned,
        budget_exhausted: search.budget_exhausted,
    })
}

/// Runs [`explore`] for every cyclic arrangement of `pattern` and combines the verdicts.
pub fn explore_pattern(
    pattern: &Pattern,
    opts: ExploreOptions,
) -> Result<GapVerdict, ExploreError> {
    let mut combined: Option<GapVerdict> = None;
    for cycle in cyclic_arrangements(pattern.degrees()) {
        let v = explore(&VertexStar::from_cycle(cycle), opts)?;
        combined = Some(match combined {
            None => v,
            Some(c) => c.merge(v),
        });
    }
    combined.ok_or(ExploreError::IncompleteSeed)
}

/// A connected component of the subgraph induced on the curved vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<VertexId>,
    pub sum: Curv,
    pub patterns: Vec<Pattern>,
}

/// Components in order of their least vertex id.
pub fn components_of_t(t: &Tessellation) -> Result<Vec<Component>, ExploreError> {
    if !total_curvature(t)?.stabilized {
        return Err(ExploreError::NotStabilized);
    }
    let curved = nonzero_set(t)?;
    let phi: BTreeMap<VertexId, Curv> = curved
        .iter()
        .map(|&v| Ok((v, crate::curvature::curvature_at(t, v)?)))
        .collect::<Result<_, CurvatureError>>()?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &curved {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in t.neighbors(u) {
                if phi.contains_key(&w) && seen.insert(w) {
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        let sum = comp.iter().map(|v| phi[v]).sum();
        let patterns = comp.iter().map(|&v| pattern_of(t, v)).collect::<Result<_, _>>()?;
        out.push(Component { vertices: comp, sum, patterns });
    }
    Ok(out)
}

/// Upper bound on the number of components for nonnegative curvature.
pub const MAX_COMPONENTS: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentCheck {
    pub components: Vec<Component>,
    pub within_count_bound: bool,
    /// Components whose sum is below 1/15, or below 1/12 without being a (3,10,10) pair.
    pub offending: Vec<usize>,
}

impl ComponentCheck {
    pub fn passes(&self) -> bool {
        self.within_count_bound && self.offending.is_empty()
    }
}

pub fn component_sum_check(t: &Tessellation) -> Result<ComponentCheck, ExploreError> {
    let components = components_of_t(t)?;
    let pair = Pattern::new(vec![3, 10, 10]);
    let offending = components
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            if c.sum < Curv::new(1, 15) {
                return true;
            }
            c.sum < twelfth() && !(c.patterns.len() == 2 && c.patterns.iter().all(|p| *p == pair))
        })
        .map(|(i, _)| i)
        .collect();
    Ok(ComponentCheck {
        within_count_bound: components.len() <= MAX_COMPONENTS,
        components,
        offending,
    })
}
