//! Roots, simple reflections, dominance order, Coxeter transformations and
//! their orbits, plus the permutation machinery attached to a quiver
//! orientation.

use std::collections::BTreeSet;

use quiver_core::CartanMatrix;
use thiserror::Error;

pub mod display;
pub mod perm;
pub mod unimodal;

pub use perm::{enumerate_p_q, phi, phi_preimage, subquiver_restrict, Perm, SubquiverMap};
pub use unimodal::{is_unimodal, unimodal_omega, unimodal_psi};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("reflection closure did not stabilize within {0} rounds; not finite type")]
    NotFiniteType(usize),
    #[error("Coxeter iteration did not return to the identity within {0} steps")]
    OrderBoundExceeded(usize),
}

/// Integer coefficient vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(n: usize, i: usize) -> Root {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0) && self.0.iter().any(|&x| x > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&x| x <= 0) && self.0.iter().any(|&x| x < 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|&x| -x).collect())
    }

    /// Sign-normalize to the positive representative.
    pub fn abs(&self) -> Root {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.0[i - 1] != 0).collect()
    }
}

/// Outcome of the coordinatewise dominance comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

pub fn leq_d(r1: &Root, r2: &Root) -> Result<Dominance, RootError> {
    if r1.rank() != r2.rank() {
        return Err(RootError::RankMismatch(r1.rank(), r2.rank()));
    }
    let mut any_less = false;
    let mut any_greater = false;
    for (a, b) in r1.0.iter().zip(&r2.0) {
        if a < b {
            any_less = true;
        } else if a > b {
            any_greater = true;
        }
    }
    Ok(match (any_less, any_greater) {
        (false, false) => Dominance::Equal,
        (true, false) => Dominance::Less,
        (false, true) => Dominance::Greater,
        (true, true) => Dominance::Incomparable,
    })
}

pub fn dominated(r1: &Root, r2: &Root) -> bool {
    matches!(
        leq_d(r1, r2),
        Ok(Dominance::Less) | Ok(Dominance::Equal)
    )
}

pub fn strictly_dominated(r1: &Root, r2: &Root) -> bool {
    matches!(leq_d(r1, r2), Ok(Dominance::Less))
}

/// s_i r: only coordinate i changes, by -sum_j a_ij r_j.
pub fn simple_reflection(a: &CartanMatrix, i: usize, r: &Root) -> Root {
    let n = a.n();
    debug_assert_eq!(r.rank(), n);
    let mut out = r.0.clone();
    let dot: i64 = (0..n).map(|j| a.a[i - 1][j] * r.0[j]).sum();
    out[i - 1] -= dot;
    Root(out)
}

/// Apply a reflection word given in composition order (rightmost acts first).
pub fn reflect_word(a: &CartanMatrix, word: &[usize], r: &Root) -> Root {
    let mut out = r.clone();
    for &i in word.iter().rev() {
        out = simple_reflection(a, i, &out);
    }
    out
}

const CLOSURE_ROUNDS_PER_N2: usize = 10;

/// All positive roots, via reflection closure of the simple roots, in
/// canonical order (height, then lexicographic). Errors if the closure is
/// still growing after 10 n^2 rounds.
pub fn positive_roots(a: &CartanMatrix) -> Result<Vec<Root>, RootError> {
    let n = a.n();
    let bound = CLOSURE_ROUNDS_PER_N2 * n * n;
    let mut set: BTreeSet<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    for _ in 0..bound {
        let mut fresh: Vec<Root> = Vec::new();
        for r in &set {
            for i in 1..=n {
                let s = simple_reflection(a, i, r);
                if s.is_positive() && !set.contains(&s) {
                    fresh.push(s);
                }
            }
        }
        if fresh.is_empty() {
            let mut out: Vec<Root> = set.into_iter().collect();
            sort_canonical(&mut out);
            return Ok(out);
        }
        set.extend(fresh);
    }
    Err(RootError::NotFiniteType(bound))
}

pub fn sort_canonical(roots: &mut [Root]) {
    roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
}

/// c_pi^{+1} = s_{pi(1)} ... s_{pi(n)} with the rightmost factor acting first;
/// dir = -1 applies the reverse product.
pub fn coxeter_apply(a: &CartanMatrix, pi: &Perm, r: &Root, dir: i32) -> Root {
    let mut out = r.clone();
    if dir >= 0 {
        for k in (1..=pi.len()).rev() {
            out = simple_reflection(a, pi.image(k), &out);
        }
    } else {
        for k in 1..=pi.len() {
            out = simple_reflection(a, pi.image(k), &out);
        }
    }
    out
}

const COXETER_ORDER_BOUND: usize = 10_000;

/// Least h >= 1 with c^h = id; independent of the permutation used.
pub fn coxeter_order(a: &CartanMatrix) -> Result<usize, RootError> {
    let n = a.n();
    let pi = Perm::identity(n);
    let simples: Vec<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
    let mut cur = simples.clone();
    for h in 1..=COXETER_ORDER_BOUND {
        cur = cur
            .iter()
            .map(|r| coxeter_apply(a, &pi, r, 1))
            .collect();
        if cur == simples {
            return Ok(h);
        }
    }
    Err(RootError::OrderBoundExceeded(COXETER_ORDER_BOUND))
}

/// theta_i = s_{pi(n)} ... s_{pi(i+1)} alpha_{pi(i)}; theta_n is the bare
/// simple root.
pub fn theta(a: &CartanMatrix, pi: &Perm, i: usize) -> Root {
    let n = pi.len();
    let mut out = Root::simple(n, pi.image(i));
    for k in i + 1..=n {
        out = simple_reflection(a, pi.image(k), &out);
    }
    out
}

#[derive(Debug, Clone)]
pub struct CoxeterOrbit {
    pub i: usize,
    pub elements: Vec<Root>,
}

/// The h-element orbits {c^k theta_i}; pairwise disjoint with union the whole
/// root set, both signs included.
pub fn omega_orbits(a: &CartanMatrix, pi: &Perm) -> Result<Vec<CoxeterOrbit>, RootError> {
    let h = coxeter_order(a)?;
    let mut orbits = Vec::new();
    for i in 1..=pi.len() {
        let mut elements = Vec::with_capacity(h);
        let mut cur = theta(a, pi, i);
        for _ in 0..h {
            elements.push(cur.clone());
            cur = coxeter_apply(a, pi, &cur, 1);
        }
        orbits.push(CoxeterOrbit { i, elements });
    }
    Ok(orbits)
}
