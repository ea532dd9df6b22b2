//! Curves from a marked point to the basepoint, drawn as arc diagrams.
//!
//! The model: marked points p_1..p_n sit at integer positions on a horizontal
//! line, each with a vertical ray going up, and the basepoint b sits at
//! position 0 below the line. A curve is recorded by its start vertex and the
//! ordered positions where it crosses the line. Arcs between consecutive
//! crossings alternate sides, with the final arc into b below; only arcs
//! above the line cross rays. Each arc is drawn taut, so viewed over the
//! positions it is a chord, and the curve is embedded exactly when the chords
//! on each side are pairwise non-interleaving. The basepoint enters the test
//! as position 0 on the lower side: walking the boundary of the lower strip
//! gives the cyclic order b, 0+, ..., +inf, which is the same order the chord
//! rule encodes.

use num_rational::Rational64;
use quiver_core::{CartanMatrix, Quiver};
use root_system::{dominated, simple_reflection, strictly_dominated, Perm, Root};
use thiserror::Error;

pub mod materialize;
pub mod render;
pub mod text;
pub mod word;

pub use materialize::materialize;
pub use word::{gen, inverse, sigma_interval, sigma_step, BraidGen, CurveWord, Letter};

pub type Pos = Rational64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("curve crosses itself")]
    SelfCrossing,
    #[error("invalid crossing position: {0}")]
    BadPosition(String),
    #[error("no embedded curve realizes this crossing word")]
    NoEmbedding,
    #[error("quiver is not a linearly labeled type A path")]
    NotTypeA,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A curve drawn as ordered line crossings; `crossings` follows the curve
/// from the start point towards b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcDiagram {
    pub n: usize,
    pub start: usize,
    pub crossings: Vec<Pos>,
}

/// Unsigned crossing record: the start vertex and the rays met in order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossingWord {
    pub start: usize,
    pub rays: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CurveClass {
    pub positive: bool,
    pub non_decreasing: bool,
    pub strictly_increasing: bool,
    /// Root after each reflection prefix, starting with the bare simple root.
    pub intermediate_roots: Vec<Root>,
}

/// The straight drop from p_i to b; crosses nothing.
pub fn gamma(n: usize, i: usize) -> ArcDiagram {
    assert!(1 <= i && i <= n);
    ArcDiagram { n, start: i, crossings: Vec::new() }
}

impl ArcDiagram {
    pub fn validate(&self) -> Result<(), CurveError> {
        for &x in &self.crossings {
            if x <= Rational64::from_integer(0) {
                return Err(CurveError::BadPosition(format!("{x} is not positive")));
            }
            if x.is_integer() && x.to_integer() as usize <= self.n {
                return Err(CurveError::BadPosition(format!("{x} sits on a marked point")));
            }
        }
        for (i, &x) in self.crossings.iter().enumerate() {
            if self.crossings[i + 1..].contains(&x) {
                return Err(CurveError::BadPosition(format!("{x} appears twice")));
            }
        }
        Ok(())
    }

    /// Arc endpoints and sides in curve order; `true` marks an arc above the
    /// line. Endpoints use the start position and 0 for b.
    pub(crate) fn arcs(&self) -> Vec<(Pos, Pos, bool)> {
        let m = self.crossings.len();
        let s = Rational64::from_integer(self.start as i64);
        let mut pts = Vec::with_capacity(m + 2);
        pts.push(s);
        pts.extend(self.crossings.iter().copied());
        pts.push(Rational64::from_integer(0));
        (0..=m)
            .map(|j| (pts[j], pts[j + 1], (m - j) % 2 == 1))
            .collect()
    }
}

fn chords_interleave(list: &[(Pos, Pos)]) -> bool {
    for (i, &(a, b)) in list.iter().enumerate() {
        for &(c, d) in &list[i + 1..] {
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return true;
            }
        }
    }
    false
}

pub fn is_non_self_crossing(d: &ArcDiagram) -> bool {
    if d.validate().is_err() {
        return false;
    }
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (a, b, up) in d.arcs() {
        let chord = (a.min(b), a.max(b));
        if up {
            upper.push(chord);
        } else {
            lower.push(chord);
        }
    }
    !chords_interleave(&upper) && !chords_interleave(&lower)
}

/// Signed crossing sequence: every arc above the line crosses exactly the
/// rays it spans, ordered in travel direction, leftward positive. An arc with
/// the start point as endpoint never crosses the start vertex's own ray.
pub fn signed_word(d: &ArcDiagram) -> CurveWord {
    let n = d.n as i64;
    let mut letters = Vec::new();
    for (a, b, up) in d.arcs() {
        if !up {
            continue;
        }
        if a < b {
            let lo = (a.floor().to_integer() + 1).max(1);
            let hi = b.floor().to_integer().min(n);
            for k in lo..=hi {
                if Rational64::from_integer(k) > a {
                    letters.push((k as usize, -1i8));
                }
            }
        } else {
            let lo = (b.floor().to_integer() + 1).max(1);
            let hi = a.floor().to_integer().min(n);
            for k in (lo..=hi).rev() {
                if Rational64::from_integer(k) < a {
                    letters.push((k as usize, 1i8));
                }
            }
        }
    }
    CurveWord { n: d.n, start: d.start, letters }
}

pub fn crossing_word(d: &ArcDiagram) -> Result<CrossingWord, CurveError> {
    if !is_non_self_crossing(d) {
        return Err(CurveError::SelfCrossing);
    }
    Ok(signed_word(d).unsigned())
}

/// Rank positions within their unit interval so that equal reduced diagrams
/// compare bytewise.
pub fn renormalize(d: &ArcDiagram) -> ArcDiagram {
    let mut out = d.clone();
    for iv in 0..=d.n {
        let mut idxs: Vec<usize> = (0..d.crossings.len())
            .filter(|&j| pos_interval(d.n, d.crossings[j]) == iv)
            .collect();
        idxs.sort_by(|&a, &b| d.crossings[a].cmp(&d.crossings[b]));
        let cnt = idxs.len() as i64;
        for (rank, &j) in idxs.iter().enumerate() {
            out.crossings[j] =
                Rational64::from_integer(iv as i64) + Rational64::new(rank as i64 + 1, cnt + 1);
        }
    }
    out
}

fn pos_interval(n: usize, x: Pos) -> usize {
    (x.floor().to_integer().max(0) as usize).min(n)
}

/// Canonical minimal-crossing form: rebuild the diagram from its freely
/// reduced crossing word. Ad hoc bigon surgery is subtle (merging arcs next
/// to the start point can silently drop a crossing of the start's own ray),
/// so rebuilding is both simpler and provably word-preserving. Self-crossing
/// input is returned renormalized but otherwise untouched.
pub fn reduce(d: &ArcDiagram) -> ArcDiagram {
    if !is_non_self_crossing(d) {
        return renormalize(d);
    }
    let mut w = signed_word(d);
    w.reduce();
    materialize(&w).unwrap_or_else(|_| renormalize(d))
}

/// Root obtained by reflecting the start's simple root along the crossing
/// sequence, read through pi and normalized positive.
fn reduced_word(d: &ArcDiagram) -> Result<CurveWord, CurveError> {
    if !is_non_self_crossing(d) {
        return Err(CurveError::SelfCrossing);
    }
    let mut w = signed_word(d);
    w.reduce();
    Ok(w)
}

pub fn associated_root(d: &ArcDiagram, pi: &Perm, a: &CartanMatrix) -> Result<Root, CurveError> {
    let w = reduced_word(d)?;
    let mut r = Root::simple(d.n, pi.image(w.start));
    for &(k, _) in &w.letters {
        r = simple_reflection(a, pi.image(k), &r);
    }
    Ok(r.abs())
}

pub fn classify(d: &ArcDiagram, pi: &Perm, a: &CartanMatrix) -> Result<CurveClass, CurveError> {
    let w = reduced_word(d)?;
    let mut roots = vec![Root::simple(d.n, pi.image(w.start))];
    for &(k, _) in &w.letters {
        let next = simple_reflection(a, pi.image(k), roots.last().unwrap());
        roots.push(next);
    }
    let positive = roots.iter().all(|r| r.is_positive());
    let non_decreasing = roots.windows(2).all(|p| dominated(&p[0], &p[1]));
    let strictly_increasing = roots.windows(2).all(|p| strictly_dominated(&p[0], &p[1]));
    Ok(CurveClass { positive, non_decreasing, strictly_increasing, intermediate_roots: roots })
}

/// One half-twist applied as word surgery followed by rebuilding; the result
/// is reduced and has minimal crossing count in its class.
pub fn braid_apply(d: &ArcDiagram, g: BraidGen) -> Result<ArcDiagram, CurveError> {
    let mut w = signed_word(d);
    w.apply(g);
    materialize(&w)
}

pub fn braid_apply_all(d: &ArcDiagram, word: &[BraidGen]) -> Result<ArcDiagram, CurveError> {
    let mut w = signed_word(d);
    w.apply_all(word);
    materialize(&w)
}

/// Append the loop around all marked points: counter-clockwise for dir >= 0,
/// clockwise otherwise.
pub fn c_wrap(d: &ArcDiagram, dir: i32) -> Result<ArcDiagram, CurveError> {
    let mut w = signed_word(d);
    w.wrap(dir);
    materialize(&w)
}

/// Strictly increasing curve for the interval root on a linearly labeled
/// type A quiver: start at the point carrying vertex l and extend one vertex
/// at a time up to m.
pub fn construct_type_a_strict(q: &Quiver, l: usize, m: usize) -> Result<ArcDiagram, CurveError> {
    assert!(l <= m && m <= q.n());
    let pi = root_system::unimodal_psi(q).map_err(|_| CurveError::NotTypeA)?;
    let mut w = CurveWord::gamma(q.n(), pi.position(l));
    for i in l..m {
        w.apply_all(&sigma_step(&pi, i));
    }
    materialize(&w)
}
