use std::collections::VecDeque;

use super::{Tessellation, VertexId, VertexStatus};

/// A sub-patch cut out of a larger one, with the map back to original ids.
#[derive(Debug, Clone)]
pub struct SubPatch {
    pub tess: Tessellation,
    /// `original[new_id] = old_id`.
    pub original: Vec<VertexId>,
}

impl Tessellation {
    /// Multi-source BFS over the 1-skeleton; `None` for unreachable vertices.
    pub fn distances_from(&self, sources: &[VertexId]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Combinatorial distance: the fewest edges on a path from `x` to `y`.
    pub fn distance(&self, x: VertexId, y: VertexId) -> Option<usize> {
        self.distances_from(&[x])[y]
    }

    pub fn ball(&self, x: VertexId, r: usize) -> SubPatch {
        self.ball_around(&[x], r)
    }

    /// The sub-patch on all vertices within distance `r` of `centers`.
    ///
    /// A face is kept only when every vertex of its walk lies in the ball.
    /// A vertex keeps its status if all its original faces survive; otherwise
    /// it becomes `Frontier`. The result is never closed unless nothing was cut.
    pub fn ball_around(&self, centers: &[VertexId], r: usize) -> SubPatch {
        let dist = self.distances_from(centers);
        let inside = |v: VertexId| dist[v].is_some_and(|d| d <= r);
        let original: Vec<VertexId> = self.vertex_ids().filter(|&v| inside(v)).collect();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in original.iter().enumerate() {
            new_id[v] = i;
        }
        let kept: Vec<bool> = self.faces.iter().map(|w| w.iter().all(|&v| inside(v))).collect();
        let faces: Vec<Vec<VertexId>> = self
            .faces
            .iter()
            .zip(&kept)
            .filter(|(_, &k)| k)
            .map(|(w, _)| w.iter().map(|&v| new_id[v]).collect())
            .collect();
        let mut cut = false;
        let statuses = original
            .iter()
            .map(|&v| {
                let whole = self.rotation(v).iter().all(|&f| kept[f])
                    && self.neighbors(v).iter().all(|&w| inside(w));
                if whole {
                    self.status(v)
                } else {
                    cut = true;
                    VertexStatus::Frontier
                }
            })
            .collect();
        let closed = self.is_closed() && !cut && original.len() == self.vertex_count();
        let tess = Tessellation::new(closed, statuses, faces)
            .expect("a sub-patch of a valid patch is well formed");
        SubPatch { tess, original }
    }
}
