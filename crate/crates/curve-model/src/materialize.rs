//! Rebuilding an arc diagram from a signed crossing word.
//!
//! The search places line crossings one arc at a time. An arc above the line
//! must cross exactly the rays it spans, so it can only realize a run of
//! consecutive ray indices travelled in one direction; arcs below the line
//! cross nothing and serve as routing. Runs may be split across several upper
//! arcs when planarity demands it, so every split point and every insertion
//! gap is a branch. Iterative deepening on the crossing count makes the first
//! solution minimal, which also guarantees the output carries no empty bigon.

use num_rational::Rational64;

use crate::word::{CurveWord, Letter};
use crate::{ArcDiagram, CurveError};

type Pos = Rational64;

fn rat(v: i64) -> Pos {
    Rational64::from_integer(v)
}

fn half() -> Pos {
    Rational64::new(1, 2)
}

/// Interval index of a non-integer position: i for (i, i+1), capped at n for
/// everything beyond the last marked point.
fn interval(n: usize, x: Pos) -> usize {
    let f = x.floor().to_integer();
    (f.max(0) as usize).min(n)
}

struct Params<'a> {
    n: usize,
    start: usize,
    letters: &'a [Letter],
    budget: usize,
    allow_empty: bool,
    nodes: &'a std::cell::Cell<u64>,
}

/// Total placement attempts across every deepening round of one call. A word
/// with an embedding is found far below this; the cap keeps hopeless words
/// from taking exponential time to refuse.
const NODE_CAP: u64 = 400_000;

struct State {
    crossings: Vec<Pos>,
    upper: Vec<(Pos, Pos)>,
    lower: Vec<(Pos, Pos)>,
    idx: usize,
    cur: Pos,
    next_upper: bool,
}

fn interleaves(chords: &[(Pos, Pos)], c: (Pos, Pos)) -> bool {
    chords
        .iter()
        .any(|&(a, b)| (a < c.0 && c.0 < b && b < c.1) || (c.0 < a && a < c.1 && c.1 < b))
}

fn run_continues(prev: Letter, next: Letter) -> bool {
    prev.1 == next.1
        && ((prev.1 < 0 && next.0 == prev.0 + 1) || (prev.1 > 0 && next.0 + 1 == prev.0))
}

fn count_runs(letters: &[Letter]) -> usize {
    let mut runs = 0;
    let mut i = 0;
    while i < letters.len() {
        runs += 1;
        let mut j = i + 1;
        while j < letters.len() && run_continues(letters[j - 1], letters[j]) {
            j += 1;
        }
        i = j;
    }
    runs
}

/// Candidate positions inside one interval: midpoints of the gaps between
/// crossings already placed there, plus the two outer gaps.
fn gaps(p: &Params, st: &State, iv: usize) -> Vec<Pos> {
    let mut present: Vec<Pos> = st
        .crossings
        .iter()
        .copied()
        .filter(|&x| interval(p.n, x) == iv)
        .collect();
    present.sort();
    let lo = rat(iv as i64);
    if present.is_empty() {
        return vec![lo + half()];
    }
    let mut out = Vec::with_capacity(present.len() + 1);
    out.push((lo + present[0]) / rat(2));
    for w in present.windows(2) {
        // midpoints of crossings beyond the last marked point can hit an
        // integer; any point in the gap works, so nudge to the third-point
        let mid = (w[0] + w[1]) / rat(2);
        out.push(if mid.is_integer() { w[0] + (w[1] - w[0]) / rat(3) } else { mid });
    }
    let last = *present.last().unwrap();
    if iv < p.n {
        out.push((last + rat(iv as i64 + 1)) / rat(2));
    } else {
        out.push(last + rat(1));
    }
    out
}

fn dfs(p: &Params, st: &mut State) -> Option<Vec<Pos>> {
    p.nodes.set(p.nodes.get() + 1);
    if p.nodes.get() > NODE_CAP {
        return None;
    }
    let rem = &p.letters[st.idx..];
    let lb = (2 * count_runs(rem)).saturating_sub(2);
    if st.crossings.len() + lb > p.budget {
        return None;
    }
    if st.next_upper {
        if !rem.is_empty() {
            let (k, s) = rem[0];
            let reachable = if s < 0 {
                st.cur >= rat(k as i64 - 1) && st.cur < rat(k as i64)
            } else if k == p.n {
                st.cur > rat(p.n as i64)
            } else {
                st.cur > rat(k as i64) && st.cur <= rat(k as i64 + 1)
            };
            if reachable {
                let mut r_max = 1;
                while r_max < rem.len() && run_continues(rem[r_max - 1], rem[r_max]) {
                    r_max += 1;
                }
                if s < 0 {
                    r_max = r_max.min(p.n - k + 1);
                } else {
                    r_max = r_max.min(k);
                }
                for r in (1..=r_max).rev() {
                    let land = if s < 0 { (k + r - 1).min(p.n) } else { k - r };
                    if let Some(xs) = try_upper(p, st, r, land) {
                        return Some(xs);
                    }
                }
            }
        }
        if p.allow_empty {
            // An arc above the line that crosses nothing: land in the same
            // interval, possibly around enclosed crossings.
            let ivs: Vec<usize> = if st.cur.is_integer() {
                let s = st.cur.to_integer() as usize;
                vec![s - 1, s]
            } else {
                vec![interval(p.n, st.cur)]
            };
            for iv in ivs {
                if let Some(xs) = try_upper(p, st, 0, iv) {
                    return Some(xs);
                }
            }
        }
        None
    } else {
        if rem.is_empty() {
            // Close up: the run home to the basepoint sits below everything
            // placed so far, so no chord below the line may strictly
            // straddle the current position.
            let ok = !st
                .lower
                .iter()
                .any(|&(a, b)| a < st.cur && st.cur < b);
            if ok {
                return Some(st.crossings.clone());
            }
        }
        let targets: Vec<usize> = if p.allow_empty {
            (0..=p.n).collect()
        } else if let Some(&(k, s)) = rem.first() {
            vec![if s < 0 { k - 1 } else { k.min(p.n) }]
        } else {
            return None;
        };
        for iv in targets {
            for y in gaps(p, st, iv) {
                let chord = (st.cur.min(y), st.cur.max(y));
                if interleaves(&st.lower, chord) {
                    continue;
                }
                if st.crossings.len() >= p.budget {
                    continue;
                }
                let saved = st.cur;
                st.crossings.push(y);
                st.lower.push(chord);
                st.cur = y;
                st.next_upper = true;
                if let Some(xs) = dfs(p, st) {
                    return Some(xs);
                }
                st.next_upper = false;
                st.cur = saved;
                st.lower.pop();
                st.crossings.pop();
            }
        }
        None
    }
}

/// Place one upper arc consuming `r` letters (0 for a bare routing arc) and
/// landing in interval `land`.
fn try_upper(p: &Params, st: &mut State, r: usize, land: usize) -> Option<Vec<Pos>> {
    if st.crossings.len() >= p.budget {
        return None;
    }
    for y in gaps(p, st, land) {
        let chord = (st.cur.min(y), st.cur.max(y));
        if interleaves(&st.upper, chord) {
            continue;
        }
        let saved = st.cur;
        st.crossings.push(y);
        st.upper.push(chord);
        st.cur = y;
        st.idx += r;
        st.next_upper = false;
        if let Some(xs) = dfs(p, st) {
            return Some(xs);
        }
        st.next_upper = true;
        st.idx -= r;
        st.cur = saved;
        st.upper.pop();
        st.crossings.pop();
    }
    None
}

pub fn materialize(word: &CurveWord) -> Result<ArcDiagram, CurveError> {
    let mut w = word.clone();
    w.reduce();
    let key = (w.n, w.start, w.letters.clone());
    let cached = MEMO.with(|m| m.borrow().get(&key).cloned());
    if let Some(hit) = cached {
        return hit.ok_or(CurveError::NoEmbedding);
    }
    let out = materialize_uncached(&w);
    MEMO.with(|m| {
        let mut m = m.borrow_mut();
        if m.len() >= MEMO_CAP {
            m.clear();
        }
        m.insert(key, out.as_ref().ok().cloned());
    });
    out
}

thread_local! {
    static MEMO: std::cell::RefCell<
        std::collections::HashMap<(usize, usize, Vec<Letter>), Option<ArcDiagram>>,
    > = std::cell::RefCell::new(std::collections::HashMap::new());
}
const MEMO_CAP: usize = 100_000;

fn materialize_uncached(w: &CurveWord) -> Result<ArcDiagram, CurveError> {
    let m = w.letters.len();
    let nodes = std::cell::Cell::new(0u64);
    for allow_empty in [false, true] {
        let cap = if allow_empty { 2 * m + 10 } else { 2 * m + 2 };
        for budget in 0..=cap {
            for first_upper in [false, true] {
                let p = Params {
                    n: w.n,
                    start: w.start,
                    letters: &w.letters,
                    budget,
                    allow_empty,
                    nodes: &nodes,
                };
                let mut st = State {
                    crossings: Vec::new(),
                    upper: Vec::new(),
                    lower: Vec::new(),
                    idx: 0,
                    cur: rat(p.start as i64),
                    next_upper: first_upper,
                };
                if let Some(xs) = dfs(&p, &mut st) {
                    let d = crate::renormalize(&ArcDiagram {
                        n: w.n,
                        start: w.start,
                        crossings: xs,
                    });
                    debug_assert!(crate::is_non_self_crossing(&d));
                    debug_assert_eq!(crate::signed_word(&d).letters, w.letters);
                    return Ok(d);
                }
            }
        }
    }
    Err(CurveError::NoEmbedding)
}
