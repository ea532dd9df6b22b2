//! Signed ray-crossing words and the braid action on them.
//!
//! Cutting the half-plane along the rays leaves a simply connected region, so
//! a curve is pinned down, up to isotopy fixing endpoints, by its start point
//! together with the freely reduced sequence of ray crossings, each signed by
//! travel direction. We take a leftward crossing as positive. All braid
//! surgery is done on these words; diagrams are rebuilt afterwards.

use root_system::Perm;

use crate::CrossingWord;

/// Ray index together with crossing direction: +1 leftward, -1 rightward.
pub type Letter = (usize, i8);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveWord {
    pub n: usize,
    pub start: usize,
    pub letters: Vec<Letter>,
}

/// A half-twist generator; `inverse` selects the clockwise twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidGen {
    pub i: usize,
    pub inverse: bool,
}

pub fn gen(i: usize, inverse: bool) -> BraidGen {
    BraidGen { i, inverse }
}

impl CurveWord {
    pub fn gamma(n: usize, i: usize) -> CurveWord {
        CurveWord { n, start: i, letters: Vec::new() }
    }

    /// Cancel adjacent crossings of the same ray in opposite directions.
    pub fn reduce(&mut self) {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &(k, s) in &self.letters {
            if out.last() == Some(&(k, -s)) {
                out.pop();
            } else {
                out.push((k, s));
            }
        }
        self.letters = out;
    }

    /// Apply one half-twist swapping the marked points i and i+1. The letter
    /// substitution is the usual free-group automorphism; when the curve
    /// starts at one of the two swapped points, the start moves and the word
    /// picks up the crossing made while the base of the curve turns.
    pub fn apply(&mut self, g: BraidGen) {
        let i = g.i;
        debug_assert!(i >= 1 && i < self.n);
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len() + 2);
        if !g.inverse {
            if self.start == i {
                self.start = i + 1;
                out.push((i, 1));
            } else if self.start == i + 1 {
                self.start = i;
            }
            for &(k, s) in &self.letters {
                if k == i {
                    out.extend([(i, -1), (i + 1, s), (i, 1)]);
                } else if k == i + 1 {
                    out.push((i, s));
                } else {
                    out.push((k, s));
                }
            }
        } else {
            if self.start == i {
                self.start = i + 1;
            } else if self.start == i + 1 {
                self.start = i;
                out.push((i + 1, -1));
            }
            for &(k, s) in &self.letters {
                if k == i {
                    out.push((i + 1, s));
                } else if k == i + 1 {
                    out.extend([(i + 1, 1), (i, s), (i + 1, -1)]);
                } else {
                    out.push((k, s));
                }
            }
        }
        self.letters = out;
        self.reduce();
    }

    pub fn apply_all(&mut self, word: &[BraidGen]) {
        for &g in word {
            self.apply(g);
        }
    }

    /// Wrap around all marked points at the end: counter-clockwise for
    /// dir >= 0 (crossing the rays n, n-1, ..., 1 leftward), clockwise
    /// otherwise.
    pub fn wrap(&mut self, dir: i32) {
        if dir >= 0 {
            self.letters.extend((1..=self.n).rev().map(|k| (k, 1)));
        } else {
            self.letters.extend((1..=self.n).map(|k| (k, -1)));
        }
        self.reduce();
    }

    pub fn unsigned(&self) -> CrossingWord {
        CrossingWord {
            start: self.start,
            rays: self.letters.iter().map(|&(k, _)| k).collect(),
        }
    }
}

/// Ascending product of twists moving the endpoint of a curve from point
/// `from` to point `to`; applied left entry first.
pub fn sigma_interval(from: usize, to: usize) -> Vec<BraidGen> {
    if from < to {
        (from..to).map(|i| gen(i, false)).collect()
    } else {
        (to..from).rev().map(|i| gen(i, false)).collect()
    }
}

pub fn inverse(word: &[BraidGen]) -> Vec<BraidGen> {
    word.iter().rev().map(|g| gen(g.i, !g.inverse)).collect()
}

/// The composite move that extends a curve ending over the point carrying
/// vertex i so that it also picks up vertex i+1: one twist at the current
/// position, then untwisted transport to the point carrying i+1.
pub fn sigma_step(pi: &Perm, i: usize) -> Vec<BraidGen> {
    let a = pi.position(i);
    let b = pi.position(i + 1);
    if a < b {
        let mut w = vec![gen(a, false)];
        w.extend((a + 1..b).map(|t| gen(t, true)));
        w
    } else {
        let mut w = vec![gen(a - 1, true)];
        w.extend((b..a - 1).rev().map(|t| gen(t, false)));
        w
    }
}
