//! Permutations compatible with a quiver orientation (linear extensions of
//! the arrow relation), and restriction maps to full subquivers.

use quiver_core::{Quiver, QuiverError};

/// One-line image list: `pi.image(k)` is the vertex placed at position `k`
/// (both 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Perm {
        Perm(images)
    }

    pub fn identity(n: usize) -> Perm {
        Perm((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Position of vertex v in the one-line list.
    pub fn position(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x == v).expect("vertex not in permutation") + 1
    }

    /// A permutation respects the orientation when every arrow's tail occurs
    /// before its head.
    pub fn respects(&self, q: &Quiver) -> bool {
        q.arrows()
            .filter(|&(t, h, _)| t <= q.n() && h <= q.n())
            .all(|(t, h, _)| self.position(t) < self.position(h))
    }

    /// Swap the entries at positions k and k+1.
    pub fn swap_adjacent(&self, k: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(k - 1, k);
        Perm(v)
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// All linear extensions of the arrow order, in lexicographic order of the
/// one-line image list.
pub fn enumerate_p_q(q: &Quiver) -> Vec<Perm> {
    let n = q.n();
    let arrows: Vec<(usize, usize)> = q
        .arrows()
        .filter(|&(t, h, _)| t <= n && h <= n)
        .map(|(t, h, _)| (t, h))
        .collect();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n + 1];
    fn rec(
        n: usize,
        arrows: &[(usize, usize)],
        cur: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Perm>,
    ) {
        if cur.len() == n {
            out.push(Perm::new(cur.clone()));
            return;
        }
        'next: for v in 1..=n {
            if used[v] {
                continue;
            }
            // v may be placed once every arrow into v has its tail placed.
            for &(t, h) in arrows {
                if h == v && !used[t] {
                    continue 'next;
                }
            }
            used[v] = true;
            cur.push(v);
            rec(n, arrows, cur, used, out);
            cur.pop();
            used[v] = false;
        }
    }
    rec(n, &arrows, &mut cur, &mut used, &mut out);
    out
}

/// Relabeling data for a full subquiver: `vertices[j-1]` is the original
/// label of the subquiver's vertex j.
#[derive(Debug, Clone)]
pub struct SubquiverMap {
    pub vertices: Vec<usize>,
}

impl SubquiverMap {
    pub fn to_original(&self, j: usize) -> usize {
        self.vertices[j - 1]
    }

    pub fn from_original(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v).map(|p| p + 1)
    }
}

/// Full subquiver induced by a vertex subset, relabeled 1..k in ascending
/// original order.
pub fn subquiver_restrict(q: &Quiver, v_set: &[usize]) -> Result<(Quiver, SubquiverMap), QuiverError> {
    let mut vertices: Vec<usize> = v_set.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    let map = SubquiverMap { vertices };
    let mut arrows = Vec::new();
    for (t, h, m) in q.arrows() {
        if let (Some(a), Some(b)) = (map.from_original(t), map.from_original(h)) {
            for _ in 0..m {
                arrows.push((a, b));
            }
        }
    }
    let sub = Quiver::new(map.vertices.len(), &arrows)?;
    Ok((sub, map))
}

/// Restriction of a permutation to the subquiver: keep the subset's vertices
/// in their relative order, in subquiver labels.
pub fn phi(pi: &Perm, map: &SubquiverMap) -> Perm {
    let images: Vec<usize> = pi
        .images()
        .iter()
        .filter_map(|&v| map.from_original(v))
        .collect();
    Perm::new(images)
}

/// One member of the phi-preimage: peel leaves of the remaining underlying
/// tree outside the subset; a peeled sink goes to the back of the one-line
/// list, a peeled source to the front. Returns None when no peeling order
/// exists (cannot happen for finite type with a connected subset).
pub fn phi_preimage(pi_sub: &Perm, q: &Quiver, map: &SubquiverMap) -> Option<Perm> {
    let n = q.n();
    let mut remaining: Vec<usize> = (1..=n).collect();
    // Peeling order, recorded innermost-last.
    let mut peeled: Vec<(usize, bool)> = Vec::new(); // (vertex, is_sink)
    while remaining.len() > map.vertices.len() {
        let mut pick = None;
        for &v in &remaining {
            if map.from_original(v).is_some() {
                continue;
            }
            let sink = q
                .arrows()
                .all(|(t, h, _)| t != v || !remaining.contains(&h));
            let source = q
                .arrows()
                .all(|(t, h, _)| h != v || !remaining.contains(&t));
            if sink || source {
                pick = Some((v, sink));
                break;
            }
        }
        let (v, sink) = pick?;
        peeled.push((v, sink));
        remaining.retain(|&x| x != v);
    }
    let mut images: Vec<usize> = pi_sub
        .images()
        .iter()
        .map(|&j| map.to_original(j))
        .collect();
    for &(v, sink) in peeled.iter().rev() {
        if sink {
            images.push(v);
        } else {
            images.insert(0, v);
        }
    }
    let pi = Perm::new(images);
    debug_assert!(pi.respects(q));
    Some(pi)
}
