//! Whole-root-system verification drivers.

use quiver_core::{CartanMatrix, DynkinType, Quiver};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use root_system::{enumerate_p_q, positive_roots, sort_canonical, Root, RootError};
use thiserror::Error;

use crate::descent::{construct_for_pi, default_budget, descent_construct, dynkin_type, quiver_id};
use crate::report::{AnyPiSummary, Entry, Mode, RealizationReport, SearchStats};
use crate::search::SearchParams;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("root enumeration failed: {0}")]
    Roots(#[from] RootError),
}

/// Orderings to check exhaustively before falling back to a seeded sample.
pub const ANY_PI_CAP: usize = 5040;
const ANY_PI_SAMPLE: usize = 100;
const ANY_PI_SEED: u64 = 0x0A11;

fn entry_for(q: &Quiver, alpha: &Root, mode: Mode, budget: Option<SearchParams>) -> Entry {
    match descent_construct(q, alpha, mode, budget) {
        Ok(w) => Entry {
            root: alpha.clone(),
            pi: Some(w.pi),
            diagram: Some(w.diagram),
            method: Some(w.method),
            word_len: w.word_len,
            stats: w.stats,
            failure: Vec::new(),
        },
        Err(trace) => Entry {
            root: alpha.clone(),
            pi: None,
            diagram: None,
            method: None,
            word_len: 0,
            stats: SearchStats::default(),
            failure: trace,
        },
    }
}

/// Realize every positive root of a finite-type quiver. In strict mode the
/// strictly-increasing claim is checked (type A only); in non-decreasing mode
/// the per-ordering claim is additionally verified for types A and D, over
/// all compatible orderings up to a cap, else over a seeded sample.
pub fn verify_theorem(
    q: &Quiver,
    mode: Mode,
    budget: Option<usize>,
) -> Result<RealizationReport, VerifyError> {
    let a = CartanMatrix::of(q);
    let mut roots = positive_roots(&a)?;
    sort_canonical(&mut roots);
    let entries: Vec<Entry> = roots
        .par_iter()
        .map(|alpha| {
            let params = SearchParams::with_budget(
                budget.unwrap_or_else(|| default_budget(alpha, q.n())),
            );
            entry_for(q, alpha, mode, Some(params))
        })
        .collect();
    let mut report = RealizationReport::summarize(quiver_id(q), mode, entries);

    if mode == Mode::NonDecreasing {
        if let DynkinType::A(_) | DynkinType::D(_) = dynkin_type(q) {
            report.any_pi = Some(any_pi_check(q, &roots, budget));
        }
    }
    Ok(report)
}

fn any_pi_check(q: &Quiver, roots: &[Root], budget: Option<usize>) -> AnyPiSummary {
    let all = enumerate_p_q(q);
    let total = all.len();
    let (pis, sampled) = if total <= ANY_PI_CAP {
        (all, false)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(ANY_PI_SEED);
        let mut sample = all;
        sample.shuffle(&mut rng);
        sample.truncate(ANY_PI_SAMPLE);
        (sample, true)
    };
    let mut failures: Vec<(Vec<usize>, Root)> = pis
        .par_iter()
        .flat_map_iter(|pi| {
            roots
                .iter()
                .filter(|alpha| {
                    let params = SearchParams::with_budget(
                        budget.unwrap_or_else(|| default_budget(alpha, q.n())),
                    );
                    construct_for_pi(q, pi, alpha, Some(params)).is_none()
                })
                .map(|alpha| (pi.images().to_vec(), alpha.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    failures.sort();
    AnyPiSummary { pis_checked: pis.len(), pis_total: total, sampled, failures }
}

/// Best-effort campaign for the rank-8 exceptional type: descent first, then
/// escalating search budgets for whatever resists, with node caps so the run
/// is bounded and deterministic. Unrealized entries are report content.
pub fn e8_campaign(q: &Quiver, schedule: &[usize], max_nodes: u64) -> Result<RealizationReport, VerifyError> {
    let a = CartanMatrix::of(q);
    let mut roots = positive_roots(&a)?;
    sort_canonical(&mut roots);
    let pis = enumerate_p_q(q);
    let entries: Vec<Entry> = roots
        .par_iter()
        .map(|alpha| {
            // constructive arms only; the schedule below owns all searching
            let no_search = SearchParams { budget: 0, max_nodes: 1 };
            let mut e = entry_for(q, alpha, Mode::NonDecreasing, Some(no_search));
            if e.realized() {
                return e;
            }
            let mut nodes = 0;
            let mut capped = false;
            for &budget in schedule {
                let params = SearchParams { budget, max_nodes };
                for pi in &pis {
                    match crate::search::bounded_search(q, pi, alpha, params) {
                        Ok((d, stats)) => {
                            if crate::descent::check(q, pi, &d, alpha, Mode::NonDecreasing) {
                                let word_len =
                                    curve_model::signed_word(&d).letters.len();
                                e.pi = Some(pi.clone());
                                e.diagram = Some(d);
                                e.method = Some(crate::report::Method::BoundedSearch);
                                e.word_len = word_len;
                                e.stats = SearchStats {
                                    nodes_explored: nodes + stats.nodes_explored,
                                    budget,
                                    capped,
                                };
                                e.failure.clear();
                                return e;
                            }
                        }
                        Err(stats) => {
                            nodes += stats.nodes_explored;
                            capped |= stats.capped;
                        }
                    }
                }
            }
            e.stats = SearchStats {
                nodes_explored: nodes,
                budget: schedule.last().copied().unwrap_or(0),
                capped,
            };
            e.failure.push(if capped {
                "search stopped on node cap".into()
            } else {
                "search exhausted schedule".into()
            });
            e
        })
        .collect();
    Ok(RealizationReport::summarize(quiver_id(q), Mode::NonDecreasing, entries))
}
