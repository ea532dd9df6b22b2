//! The bijection between linearly labeled type-A orientations and unimodal
//! permutations. Vertices follow the reference A-labeling (n .. 1 along the
//! line), so edge e_i joins vertices i+1 and i.

use quiver_core::Quiver;
use thiserror::Error;

use crate::perm::Perm;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UnimodalError {
    #[error("quiver is not of type A in the reference labeling")]
    NotTypeA,
    #[error("permutation is not unimodal")]
    NotUnimodal,
}

pub fn is_unimodal(pi: &Perm) -> bool {
    let n = pi.len();
    if n == 0 {
        return false;
    }
    let k = pi.position(n);
    (2..=k).all(|i| pi.image(i - 1) < pi.image(i))
        && (k..n).all(|i| pi.image(i) > pi.image(i + 1))
}

/// Quiver of a unimodal permutation: edge e_i points i -> i+1 when i sits in
/// the rising part, i+1 -> i when it sits in the falling part.
pub fn unimodal_omega(pi: &Perm) -> Result<Quiver, UnimodalError> {
    if !is_unimodal(pi) {
        return Err(UnimodalError::NotUnimodal);
    }
    let n = pi.len();
    let peak = pi.position(n);
    let mut arrows = Vec::new();
    for i in 1..n {
        if pi.position(i) < peak {
            arrows.push((i, i + 1));
        } else {
            arrows.push((i + 1, i));
        }
    }
    Ok(Quiver::new(n, &arrows).expect("path arrows are loop-free"))
}

/// Unimodal permutation of a type-A quiver: rising tails ascending, then n,
/// then falling heads descending.
pub fn unimodal_psi(q: &Quiver) -> Result<Perm, UnimodalError> {
    let n = q.n();
    // Reference labeling required: exactly one arrow between i and i+1.
    let path_ok = n >= 1
        && (1..n).all(|i| q.mult(i, i + 1) + q.mult(i + 1, i) == 1)
        && q.arrow_list().len() == n - 1;
    if !path_ok {
        return Err(UnimodalError::NotTypeA);
    }
    let mut up: Vec<usize> = (1..n).filter(|&i| q.mult(i, i + 1) == 1).collect();
    let mut down: Vec<usize> = (1..n).filter(|&i| q.mult(i + 1, i) == 1).collect();
    up.sort_unstable();
    down.sort_unstable();
    down.reverse();
    let mut images = up;
    images.push(n);
    images.extend(down);
    Ok(Perm::new(images))
}
