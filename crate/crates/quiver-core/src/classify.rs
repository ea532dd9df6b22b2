//! Underlying-graph classification (A / D / E / affine A cycle / other) and
//! the relabeling onto the fixed reference labeling that all fixtures use.
//!
//! Reference labelings:
//! - A_n: the path is labeled n, n-1, ..., 1 along the line; edge e_i joins
//!   i+1 and i.
//! - D_n: the branch vertex is n with leaf neighbors n-1 and n-2; the tail is
//!   the chain n-3, n-4, ..., 1.
//! - E6/E7/E8: branch vertex n; the single leaf below it is n-1; the short arm
//!   is n-2 then 1; the long arm walks n-3, n-4, ..., 2 outward.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    /// Underlying graph is a single cycle on n vertices.
    AffineACycle(usize),
    Other,
}

impl DynkinType {
    pub fn is_finite(&self) -> bool {
        !matches!(self, DynkinType::AffineACycle(_) | DynkinType::Other)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
            DynkinType::AffineACycle(n) => write!(f, "affine A cycle ({n} vertices)"),
            DynkinType::Other => write!(f, "other"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub ty: DynkinType,
    /// `to_paper[v-1]` is the reference label of user vertex `v`. Identity for
    /// cycle and unrecognized graphs.
    pub to_paper: Vec<usize>,
}

impl Classification {
    pub fn from_paper(&self) -> Vec<usize> {
        let mut inv = vec![0; self.to_paper.len()];
        for (u, &p) in self.to_paper.iter().enumerate() {
            inv[p - 1] = u + 1;
        }
        inv
    }
}

pub fn classify_graph(n: usize, edges: &BTreeSet<(usize, usize)>) -> Classification {
    let identity: Vec<usize> = (1..=n).collect();
    let other = Classification {
        ty: DynkinType::Other,
        to_paper: identity.clone(),
    };
    if n == 0 {
        return other;
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for v in 1..=n {
        adj[v].sort_unstable();
    }
    // Connectivity.
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1usize];
    seen[1] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != n {
        return other;
    }
    if edges.len() == n && (1..=n).all(|v| adj[v].len() == 2) {
        return Classification {
            ty: DynkinType::AffineACycle(n),
            to_paper: identity,
        };
    }
    if edges.len() != n - 1 {
        return other;
    }
    let branch: Vec<usize> = (1..=n).filter(|&v| adj[v].len() >= 3).collect();
    match branch.len() {
        0 => {
            // Path: label 1 at the smaller-indexed endpoint, count upward.
            if n == 1 {
                return Classification {
                    ty: DynkinType::A(1),
                    to_paper: identity,
                };
            }
            let ends: Vec<usize> = (1..=n).filter(|&v| adj[v].len() == 1).collect();
            let mut to_paper = vec![0usize; n];
            let mut prev = 0;
            let mut cur = ends[0];
            for label in 1..=n {
                to_paper[cur - 1] = label;
                let next = adj[cur].iter().copied().find(|&w| w != prev);
                prev = cur;
                if let Some(nx) = next {
                    cur = nx;
                }
            }
            Classification {
                ty: DynkinType::A(n),
                to_paper,
            }
        }
        1 => {
            let v = branch[0];
            if adj[v].len() != 3 {
                return other;
            }
            // Walk each arm outward from the branch vertex.
            let mut arms: Vec<Vec<usize>> = Vec::new();
            for &w in &adj[v] {
                let mut arm = vec![w];
                let (mut prev, mut cur) = (v, w);
                while adj[cur].len() == 2 {
                    let next = adj[cur].iter().copied().find(|&x| x != prev).unwrap();
                    prev = cur;
                    cur = next;
                    arm.push(cur);
                }
                if adj[cur].len() != 1 {
                    return other;
                }
                arms.push(arm);
            }
            arms.sort_by_key(|a| (a.len(), a[0]));
            let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
            let mut to_paper = vec![0usize; n];
            to_paper[v - 1] = n;
            let ty = match (lens[0], lens[1], lens[2]) {
                (1, 1, _) => {
                    // D_n; for D4 the three leaves take labels 1, 2, 3 by index.
                    if n == 4 {
                        for (k, arm) in arms.iter().enumerate() {
                            to_paper[arm[0] - 1] = k + 1;
                        }
                    } else {
                        to_paper[arms[0][0] - 1] = n - 2;
                        to_paper[arms[1][0] - 1] = n - 1;
                        for (k, &u) in arms[2].iter().enumerate() {
                            to_paper[u - 1] = n - 3 - k;
                        }
                    }
                    DynkinType::D(n)
                }
                (1, 2, l3) if (2..=4).contains(&l3) && n == 4 + l3 => {
                    // In E6 the two length-2 arms tie; the one with the
                    // smaller leaf index plays the short (n-2, 1) role.
                    if l3 == 2 && arms[2].last() < arms[1].last() {
                        arms.swap(1, 2);
                    }
                    to_paper[arms[0][0] - 1] = n - 1;
                    to_paper[arms[1][0] - 1] = n - 2;
                    to_paper[arms[1][1] - 1] = 1;
                    for (k, &u) in arms[2].iter().enumerate() {
                        to_paper[u - 1] = n - 3 - k;
                    }
                    match l3 {
                        2 => DynkinType::E6,
                        3 => DynkinType::E7,
                        _ => DynkinType::E8,
                    }
                }
                _ => return other,
            };
            Classification { ty, to_paper }
        }
        _ => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(list: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
        list.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
    }

    #[test]
    fn paths_and_cycles() {
        let c = classify_graph(3, &edges(&[(1, 2), (2, 3)]));
        assert_eq!(c.ty, DynkinType::A(3));
        assert_eq!(c.to_paper, vec![1, 2, 3]);
        let c = classify_graph(3, &edges(&[(1, 2), (2, 3), (3, 1)]));
        assert_eq!(c.ty, DynkinType::AffineACycle(3));
    }

    #[test]
    fn d_and_e_shapes() {
        // Star on 4 vertices centered at 2.
        let c = classify_graph(4, &edges(&[(2, 1), (2, 3), (2, 4)]));
        assert_eq!(c.ty, DynkinType::D(4));
        assert_eq!(c.to_paper[1], 4);
        // D5 in reference labels is fixed by the relabeling.
        let c = classify_graph(5, &edges(&[(1, 2), (2, 5), (3, 5), (4, 5)]));
        assert_eq!(c.ty, DynkinType::D(5));
        assert_eq!(c.to_paper, vec![1, 2, 3, 4, 5]);
        // E6 reference shape: chain 2-3-6-4-1 with 5 under 6.
        let c = classify_graph(6, &edges(&[(2, 3), (3, 6), (6, 4), (4, 1), (5, 6)]));
        assert_eq!(c.ty, DynkinType::E6);
        assert_eq!(c.to_paper, vec![1, 2, 3, 4, 5, 6]);
        // E8 reference shape: chain 2-3-4-5-8-6-1 with 7 under 8.
        let c = classify_graph(
            8,
            &edges(&[(2, 3), (3, 4), (4, 5), (5, 8), (8, 6), (6, 1), (7, 8)]),
        );
        assert_eq!(c.ty, DynkinType::E8);
        assert_eq!(c.to_paper, vec![1, 2, 3, 4, 5, 6, 7, 8]);
    }

    #[test]
    fn rejects_wide_branching() {
        let c = classify_graph(5, &edges(&[(1, 5), (2, 5), (3, 5), (4, 5)]));
        assert_eq!(c.ty, DynkinType::Other);
    }
}
