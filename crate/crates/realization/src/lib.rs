//! Realizing positive roots by non-decreasing non-self-crossing curves:
//! constructive descent, pruned bounded search, curve tables for the rank-7
//! holdouts, the affine cycle family, and whole-root-system verification.

use curve_model::ArcDiagram;
use root_system::Perm;

pub mod affine;
pub mod descent;
pub mod fixtures;
pub mod report;
pub mod search;
pub mod verify;

pub use affine::{affine_a_roots, affine_quiver, verify_affine_a, AffineFamily, Variant};
pub use descent::{
    construct_for_pi, coxeter_lift, default_budget, descent_construct, dynkin_type,
    leaf_loop_extend, quiver_id,
};
pub use report::{
    AnyPiSummary, Entry, Method, Mode, RealizationReport, SearchStats, Summary,
};
pub use search::{bounded_search, bounded_search_exact, SearchParams};
pub use verify::{e8_campaign, verify_theorem, VerifyError, ANY_PI_CAP};

/// A verified curve for one root: the ordering it lives under, the diagram,
/// and how it was found.
#[derive(Debug, Clone)]
pub struct Witness {
    pub pi: Perm,
    pub diagram: ArcDiagram,
    pub method: Method,
    pub word_len: usize,
    pub stats: SearchStats,
}

#[cfg(test)]
mod tests;
