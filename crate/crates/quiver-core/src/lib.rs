//! Acyclic quivers with mutation, framing and c-vector extraction.
//!
//! Vertices are 1-based. A framed quiver on `n` mutable vertices stores its
//! frozen duplicates as `n+1..=2n`; arrows are kept as a multiset keyed by
//! ordered pair, so mutation is plain multiplicity arithmetic.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub mod classify;
pub mod text;

pub use classify::{classify_graph, Classification, DynkinType};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("oriented 2-cycle between {0} and {1}")]
    TwoCycle(usize, usize),
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("mutation requested at frozen vertex {0}")]
    MutateFrozen(usize),
    #[error("expected a plain quiver, got a framed one")]
    AlreadyFramed,
    #[error("expected a framed quiver")]
    NotFramed,
    #[error("mutable part contains a directed cycle")]
    DirectedCycle,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("exhaustive enumeration requires finite type; mutable part is {0}")]
    NotFiniteType(String),
}

/// Directed graph without loops or oriented 2-cycles. `n` counts the mutable
/// vertices; `frozen` is empty for plain quivers and `{n+1..=2n}` after framing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quiver {
    n: usize,
    arrows: BTreeMap<(usize, usize), u32>,
    frozen: BTreeSet<usize>,
}

impl Quiver {
    pub fn new(n: usize, arrows: &[(usize, usize)]) -> Result<Self, QuiverError> {
        let mut multi: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for &(t, h) in arrows {
            *multi.entry((t, h)).or_insert(0) += 1;
        }
        Self::from_multiset(n, multi, BTreeSet::new())
    }

    fn from_multiset(
        n: usize,
        arrows: BTreeMap<(usize, usize), u32>,
        frozen: BTreeSet<usize>,
    ) -> Result<Self, QuiverError> {
        let max_v = if frozen.is_empty() { n } else { 2 * n };
        for (&(t, h), _) in arrows.iter() {
            if t == h {
                return Err(QuiverError::Loop(t));
            }
            for v in [t, h] {
                if v < 1 || v > max_v {
                    return Err(QuiverError::VertexOutOfRange(v, max_v));
                }
            }
            if arrows.contains_key(&(h, t)) {
                return Err(QuiverError::TwoCycle(t.min(h), t.max(h)));
            }
        }
        Ok(Quiver { n, arrows, frozen })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_framed(&self) -> bool {
        !self.frozen.is_empty()
    }

    pub fn frozen(&self) -> &BTreeSet<usize> {
        &self.frozen
    }

    /// Arrow multiplicity of tail -> head (0 if absent).
    pub fn mult(&self, tail: usize, head: usize) -> u32 {
        self.arrows.get(&(tail, head)).copied().unwrap_or(0)
    }

    /// Arrows as (tail, head, multiplicity), sorted.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.arrows.iter().map(|(&(t, h), &m)| (t, h, m))
    }

    /// Flattened arrow list, one entry per parallel arrow.
    pub fn arrow_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, h, m) in self.arrows() {
            for _ in 0..m {
                out.push((t, h));
            }
        }
        out
    }

    /// Underlying undirected adjacency between mutable vertices (simple edges).
    pub fn mutable_edges(&self) -> BTreeSet<(usize, usize)> {
        let mut edges = BTreeSet::new();
        for (t, h, _) in self.arrows() {
            if t <= self.n && h <= self.n {
                edges.insert((t.min(h), t.max(h)));
            }
        }
        edges
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm over the mutable part only.
        let mut indeg = vec![0usize; self.n + 1];
        for (t, h, m) in self.arrows() {
            if t <= self.n && h <= self.n {
                indeg[h] += m as usize;
            }
        }
        let mut queue: VecDeque<usize> = (1..=self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for (t, h, m) in self.arrows() {
                if t == v && h <= self.n {
                    indeg[h] -= m as usize;
                    if indeg[h] == 0 {
                        queue.push_back(h);
                    }
                }
            }
        }
        seen == self.n
    }

    /// Sources and sinks of the mutable part.
    pub fn is_source(&self, v: usize) -> bool {
        self.arrows().all(|(t, h, _)| !(h == v && t <= self.n))
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows().all(|(t, h, _)| !(t == v && h <= self.n))
    }

    pub fn validate(&self) -> Diagnostics {
        let mut errors = Vec::new();
        if !self.is_acyclic() {
            errors.push(QuiverError::DirectedCycle);
        }
        Diagnostics {
            errors,
            class: classify_graph(self.n, &self.mutable_edges()),
        }
    }

    /// Add frozen duplicates `i' = n + i` with one arrow `i -> i'` each.
    pub fn framed(&self) -> Result<Quiver, QuiverError> {
        if self.is_framed() {
            return Err(QuiverError::AlreadyFramed);
        }
        if !self.is_acyclic() {
            return Err(QuiverError::DirectedCycle);
        }
        let mut arrows = self.arrows.clone();
        for i in 1..=self.n {
            arrows.insert((i, self.n + i), 1);
        }
        let frozen = (self.n + 1..=2 * self.n).collect();
        Ok(Quiver {
            n: self.n,
            arrows,
            frozen,
        })
    }

    /// Quiver mutation at a mutable vertex: compose paths through `i`, reverse
    /// arrows at `i`, cancel the 2-cycles this creates.
    pub fn mutate(&self, i: usize) -> Result<Quiver, QuiverError> {
        if i < 1 || i > self.n {
            return if self.frozen.contains(&i) {
                Err(QuiverError::MutateFrozen(i))
            } else {
                Err(QuiverError::VertexOutOfRange(i, self.n))
            };
        }
        let into: Vec<(usize, u32)> = self
            .arrows()
            .filter(|&(_, h, _)| h == i)
            .map(|(t, _, m)| (t, m))
            .collect();
        let out: Vec<(usize, u32)> = self
            .arrows()
            .filter(|&(t, _, _)| t == i)
            .map(|(_, h, m)| (h, m))
            .collect();

        // Signed multiplicities make the cancellation step one pass.
        let mut signed: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (&(t, h), &m) in self.arrows.iter() {
            if t == i {
                *signed.entry((h, t)).or_insert(0) += m as i64;
            } else if h == i {
                *signed.entry((h, t)).or_insert(0) += m as i64;
            } else {
                *signed.entry((t, h)).or_insert(0) += m as i64;
            }
        }
        for &(j, a) in &into {
            for &(k, b) in &out {
                *signed.entry((j, k)).or_insert(0) += (a * b) as i64;
            }
        }
        let mut arrows: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        let pairs: BTreeSet<(usize, usize)> = signed
            .keys()
            .map(|&(t, h)| (t.min(h), t.max(h)))
            .collect();
        for (t, h) in pairs {
            let fwd = signed.get(&(t, h)).copied().unwrap_or(0);
            let bwd = signed.get(&(h, t)).copied().unwrap_or(0);
            let net = fwd - bwd;
            if net > 0 {
                arrows.insert((t, h), net as u32);
            } else if net < 0 {
                arrows.insert((h, t), (-net) as u32);
            }
        }
        for (&(t, h), _) in arrows.iter() {
            assert!(
                !(self.frozen.contains(&t) && self.frozen.contains(&h)),
                "mutation produced a frozen-frozen arrow {t}->{h}"
            );
        }
        Ok(Quiver {
            n: self.n,
            arrows,
            frozen: self.frozen.clone(),
        })
    }

    /// Apply a product of mutations written in composition order: the
    /// rightmost entry acts first, so `[1, 2, 3]` means mutate at 3, then 2,
    /// then 1.
    pub fn mutate_seq(&self, seq: &[usize]) -> Result<Quiver, QuiverError> {
        let mut q = self.clone();
        for &i in seq.iter().rev() {
            q = q.mutate(i)?;
        }
        Ok(q)
    }

    /// Signed arrow counts between each mutable vertex and the frozen copies:
    /// entry `j` of vector `i` is positive for arrows `i -> j'`.
    pub fn c_vectors(&self) -> Result<Vec<Vec<i64>>, QuiverError> {
        if !self.is_framed() {
            return Err(QuiverError::NotFramed);
        }
        let mut out = Vec::with_capacity(self.n);
        for i in 1..=self.n {
            let mut v = vec![0i64; self.n];
            for j in 1..=self.n {
                let jp = self.n + j;
                v[j - 1] = self.mult(i, jp) as i64 - self.mult(jp, i) as i64;
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Canonical form under relabelings of the mutable vertices (frozen labels
    /// stay put, since c-vectors read them): minimal sorted arrow list.
    fn canonical_key(&self) -> Vec<(usize, usize, u32)> {
        let perms = permutations(self.n);
        let mut best: Option<Vec<(usize, usize, u32)>> = None;
        for p in &perms {
            let map = |v: usize| if v <= self.n { p[v - 1] } else { v };
            let mut img: Vec<(usize, usize, u32)> =
                self.arrows().map(|(t, h, m)| (map(t), map(h), m)).collect();
            img.sort_unstable();
            if best.as_ref().map_or(true, |b| img < *b) {
                best = Some(img);
            }
        }
        best.unwrap_or_default()
    }
}

#[derive(Debug)]
pub struct Diagnostics {
    pub errors: Vec<QuiverError>,
    pub class: Classification,
}

impl Diagnostics {
    pub fn is_valid(&self) -> bool {
        self.errors.is_empty()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n + 1];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerateMode {
    Exhaustive,
    DepthBounded(usize),
}

/// Breadth-first closure of the framed quiver under all mutations, collecting
/// every c-vector seen. States are deduplicated up to relabeling of the
/// mutable vertices.
pub fn enumerate_c_vectors(
    q: &Quiver,
    mode: EnumerateMode,
) -> Result<BTreeSet<Vec<i64>>, QuiverError> {
    if q.is_framed() {
        return Err(QuiverError::AlreadyFramed);
    }
    if let EnumerateMode::Exhaustive = mode {
        let class = classify_graph(q.n, &q.mutable_edges());
        if !class.ty.is_finite() {
            return Err(QuiverError::NotFiniteType(format!("{}", class.ty)));
        }
    }
    let depth_cap = match mode {
        EnumerateMode::Exhaustive => usize::MAX,
        EnumerateMode::DepthBounded(d) => d,
    };
    let start = q.framed()?;
    let mut seen: HashSet<Vec<(usize, usize, u32)>> = HashSet::new();
    seen.insert(start.canonical_key());
    let mut cvecs: BTreeSet<Vec<i64>> = start.c_vectors()?.into_iter().collect();
    let mut frontier = vec![start];
    let mut depth = 0;
    while !frontier.is_empty() && depth < depth_cap {
        let mut next = Vec::new();
        for state in &frontier {
            for i in 1..=q.n {
                let m = state.mutate(i)?;
                if seen.insert(m.canonical_key()) {
                    cvecs.extend(m.c_vectors()?);
                    next.push(m);
                }
            }
        }
        frontier = next;
        depth += 1;
    }
    Ok(cvecs)
}

/// Skew-symmetric matrix b_ij = #(i->j) - #(j->i) over the mutable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    pub b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn of(q: &Quiver) -> ExchangeMatrix {
        let n = q.n;
        let mut b = vec![vec![0i64; n]; n];
        for i in 1..=n {
            for j in 1..=n {
                b[i - 1][j - 1] = q.mult(i, j) as i64 - q.mult(j, i) as i64;
            }
        }
        ExchangeMatrix { b }
    }
}

/// Symmetrized Cartan matrix: 2 on the diagonal, -|b_ij| off it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn of(q: &Quiver) -> CartanMatrix {
        let n = q.n;
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
        }
        for (t, h, m) in q.arrows() {
            if t <= n && h <= n {
                a[t - 1][h - 1] -= m as i64;
                a[h - 1][t - 1] -= m as i64;
            }
        }
        CartanMatrix { a }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for (t, h, m) in self.arrows() {
            for _ in 0..m {
                writeln!(f, "arrow {t} {h}")?;
            }
        }
        Ok(())
    }
}
