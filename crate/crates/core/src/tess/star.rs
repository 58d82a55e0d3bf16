use super::{Tessellation, VertexId};

/// Cyclic sequence of face degrees around a vertex, in rotation order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexStar {
    pub center: Option<VertexId>,
    pub faces: Vec<usize>,
    pub complete: bool,
}

impl VertexStar {
    /// A free-standing complete star, e.g. an explorer seed.
    pub fn from_cycle(faces: Vec<usize>) -> VertexStar {
        VertexStar { center: None, faces, complete: true }
    }

    pub fn of(t: &Tessellation, v: VertexId) -> VertexStar {
        VertexStar {
            center: Some(v),
            faces: t.rotation(v).iter().map(|&f| t.face_degree(f)).collect(),
            complete: t.has_complete_star(v),
        }
    }

    /// Lexicographically least sequence over all rotations and reflections.
    pub fn canonical(&self) -> Vec<usize> {
        canonical_cycle(&self.faces)
    }

    /// Equality up to rotation and reflection.
    pub fn same_cycle(&self, other: &VertexStar) -> bool {
        self.faces.len() == other.faces.len() && self.canonical() == other.canonical()
    }
}

pub fn canonical_cycle(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    let mut best: Option<Vec<usize>> = None;
    let mut rev = seq.to_vec();
    rev.reverse();
    for s in [seq, &rev[..]] {
        for r in 0..n.max(1) {
            let cand: Vec<usize> = (0..n).map(|i| s[(r + i) % n]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// All distinct cyclic arrangements of a multiset, each in canonical form,
/// in ascending order.
pub fn cyclic_arrangements(multiset: &[usize]) -> Vec<Vec<usize>> {
    let mut items = multiset.to_vec();
    items.sort_unstable();
    let mut out = std::collections::BTreeSet::new();
    permute(&mut items, 0, &mut |p| {
        out.insert(canonical_cycle(p));
    });
    out.into_iter().collect()
}

fn permute(items: &mut Vec<usize>, k: usize, emit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        emit(items);
        return;
    }
    let mut seen = Vec::new();
    for i in k..items.len() {
        if seen.contains(&items[i]) {
            continue;
        }
        seen.push(items[i]);
        items.swap(k, i);
        permute(items, k + 1, emit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_is_rotation_and_reflection_invariant() {
        // Exhaustive over all sequences of length <= 8 drawn from {3,4,6}.
        for len in 1..=8usize {
            let total = 3usize.pow(len as u32);
            for code in 0..total {
                let mut c = code;
                let seq: Vec<usize> = (0..len)
                    .map(|_| {
                        let d = [3, 4, 6][c % 3];
                        c /= 3;
                        d
                    })
                    .collect();
                let canon = canonical_cycle(&seq);
                for r in 0..len {
                    let rot: Vec<usize> = (0..len).map(|i| seq[(r + i) % len]).collect();
                    assert_eq!(canonical_cycle(&rot), canon);
                    let mut refl = rot.clone();
                    refl.reverse();
                    assert_eq!(canonical_cycle(&refl), canon);
                }
            }
        }
    }

    #[test]
    fn arrangements_of_3346() {
        let a = cyclic_arrangements(&[3, 3, 4, 6]);
        assert_eq!(a, vec![vec![3, 3, 4, 6], vec![3, 4, 3, 6]]);
        assert_eq!(cyclic_arrangements(&[3, 4, 4, 4]).len(), 1);
        assert_eq!(cyclic_arrangements(&[3, 3, 4, 4, 3]).len(), 2);
    }
}
