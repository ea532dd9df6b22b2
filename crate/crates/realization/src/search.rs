//! Pruned depth-first search for a non-decreasing curve with a bounded
//! number of line crossings.
//!
//! The curve is grown backwards from the basepoint, so the alternation of
//! arc sides is known at every step and the final arc is below by
//! construction. The running root starts at the target and sheds one
//! reflection per ray crossed; a branch dies as soon as an intermediate root
//! stops being positive or stops being dominated by its successor, which also
//! caps every coefficient by the target's. Chords are checked incrementally
//! on each side. Extension order is fixed (interval, then slot), so results
//! are deterministic.

use curve_model::{renormalize, ArcDiagram, Pos};
use num_rational::Rational64;
use quiver_core::{CartanMatrix, Quiver};
use root_system::{dominated, simple_reflection, Perm, Root};

use crate::report::SearchStats;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    /// Maximum number of crossings with the line.
    pub budget: usize,
    /// Hard cap on explored partial diagrams, for bounded wall time.
    pub max_nodes: u64,
}

impl SearchParams {
    pub const DEFAULT_MAX_NODES: u64 = 2_000_000;

    pub fn with_budget(budget: usize) -> SearchParams {
        SearchParams { budget, max_nodes: Self::DEFAULT_MAX_NODES }
    }
}

struct Dfs<'a> {
    a: &'a CartanMatrix,
    pi: &'a Perm,
    n: usize,
    target: usize,
    nodes: u64,
    max_nodes: u64,
    capped: bool,
}

/// Iterative deepening on the crossing count: the first witness returned has
/// the fewest crossings among all witnesses within budget.
pub fn bounded_search(
    q: &Quiver,
    pi: &Perm,
    alpha: &Root,
    params: SearchParams,
) -> Result<(ArcDiagram, SearchStats), SearchStats> {
    search_levels(q, pi, alpha, params, 0)
}

/// Like `bounded_search`, but only looks at exactly `params.budget` crossings.
/// Useful when a witness of that size is known to exist and the cheaper
/// levels would be exhausted for nothing.
pub fn bounded_search_exact(
    q: &Quiver,
    pi: &Perm,
    alpha: &Root,
    params: SearchParams,
) -> Result<(ArcDiagram, SearchStats), SearchStats> {
    search_levels(q, pi, alpha, params, params.budget)
}

fn search_levels(
    q: &Quiver,
    pi: &Perm,
    alpha: &Root,
    params: SearchParams,
    from: usize,
) -> Result<(ArcDiagram, SearchStats), SearchStats> {
    let a = CartanMatrix::of(q);
    let n = q.n();
    let mut nodes_total = 0;
    let mut capped = false;
    for m in from..=params.budget {
        let mut st = Dfs {
            a: &a,
            pi,
            n,
            target: m,
            nodes: 0,
            max_nodes: params.max_nodes.saturating_sub(nodes_total),
            capped: false,
        };
        let mut rev = Vec::new();
        let mut per_interval = vec![Vec::new(); n + 2];
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let found = st.extend(
            &mut rev,
            &mut per_interval,
            &mut upper,
            &mut lower,
            Rational64::from_integer(0),
            false,
            alpha.clone(),
            0,
        );
        nodes_total += st.nodes;
        capped |= st.capped;
        let stats =
            SearchStats { nodes_explored: nodes_total, budget: params.budget, capped };
        if let Some((start, mut xs)) = found {
            xs.reverse();
            let d = renormalize(&ArcDiagram { n, start, crossings: xs });
            return Ok((d, stats));
        }
        if capped {
            return Err(stats);
        }
    }
    Err(SearchStats { nodes_explored: nodes_total, budget: params.budget, capped })
}

impl Dfs<'_> {
    /// Strip the reflections of one arc from `r`, walking the rays opposite
    /// to travel direction. Returns None when an intermediate root breaks
    /// positivity or the non-decreasing chain.
    fn strip(&self, from: Pos, to: Pos, r: &Root) -> Option<Root> {
        let (lo, hi) = if from < to { (from, to) } else { (to, from) };
        let first = lo.floor().to_integer() + 1;
        let last = hi.floor().to_integer().min(self.n as i64);
        let mut rays: Vec<i64> = (first.max(1)..=last)
            .filter(|&k| Rational64::from_integer(k) > lo && Rational64::from_integer(k) < hi)
            .collect();
        // forward order follows travel direction; we undo back-to-front
        if from < to {
            rays.reverse();
        }
        let mut cur = r.clone();
        for k in rays {
            let prev = simple_reflection(self.a, self.pi.image(k as usize), &cur);
            if !prev.is_positive() || !dominated(&prev, &cur) {
                return None;
            }
            cur = prev;
        }
        Some(cur)
    }

    fn chord_ok(list: &[(Pos, Pos)], c: (Pos, Pos)) -> bool {
        let (a, b) = c;
        list.iter().all(|&(x, y)| !((x < a && a < y && y < b) || (a < x && x < b && b < y)))
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        rev: &mut Vec<Pos>,
        per_interval: &mut [Vec<Pos>],
        upper: &mut Vec<(Pos, Pos)>,
        lower: &mut Vec<(Pos, Pos)>,
        e: Pos,
        side_up: bool,
        r: Root,
        depth: usize,
    ) -> Option<(usize, Vec<Pos>)> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.capped = true;
            return None;
        }
        if depth == self.target {
            // close with the arc out of a marked point
            for s in 1..=self.n {
                let sp = Rational64::from_integer(s as i64);
                let chord = (sp.min(e), sp.max(e));
                let side = if side_up { &*upper } else { &*lower };
                if !Self::chord_ok(side, chord) {
                    continue;
                }
                let stripped = if side_up { self.strip(sp, e, &r) } else { Some(r.clone()) };
                let Some(rr) = stripped else { continue };
                if rr == Root::simple(self.n, self.pi.image(s)) {
                    return Some((s, rev.clone()));
                }
            }
            return None;
        }
        for iv in 0..=self.n {
            let slots = per_interval[iv].len();
            for t in 0..=slots {
                let lo = if t == 0 {
                    Rational64::from_integer(iv as i64)
                } else {
                    per_interval[iv][t - 1]
                };
                let hi = if t == slots {
                    Rational64::from_integer(iv as i64 + 1)
                } else {
                    per_interval[iv][t]
                };
                let y = (lo + hi) / 2;
                let chord = (y.min(e), y.max(e));
                {
                    let side = if side_up { &*upper } else { &*lower };
                    if !Self::chord_ok(side, chord) {
                        continue;
                    }
                }
                let stripped = if side_up { self.strip(y, e, &r) } else { Some(r.clone()) };
                let Some(rr) = stripped else { continue };
                rev.push(y);
                per_interval[iv].insert(t, y);
                if side_up {
                    upper.push(chord);
                } else {
                    lower.push(chord);
                }
                let found =
                    self.extend(rev, per_interval, upper, lower, y, !side_up, rr, depth + 1);
                if side_up {
                    upper.pop();
                } else {
                    lower.pop();
                }
                per_interval[iv].remove(t);
                rev.pop();
                if found.is_some() || self.capped {
                    return found;
                }
            }
        }
        None
    }
}
