//! Proof-driven curve construction. The entry points either fix the vertex
//! ordering (`construct_for_pi`) or pick one (`descent_construct`); both
//! recurse on strictly smaller roots or strictly smaller quivers, so they
//! terminate, and every returned curve is re-verified from scratch.

use std::collections::HashMap;

use curve_model::{
    c_wrap, classify, construct_type_a_strict, gamma, is_non_self_crossing, materialize,
    signed_word, ArcDiagram, CurveWord,
};
use quiver_core::{CartanMatrix, DynkinType, Quiver};
use root_system::{
    coxeter_apply, dominated, enumerate_p_q, phi, phi_preimage, simple_reflection,
    subquiver_restrict, unimodal_psi, Perm, Root,
};

use crate::report::{Method, Mode, SearchStats};
use crate::search::{bounded_search, SearchParams};
use crate::{fixtures, Witness};

/// Crossing budget used when none is given: generous enough for every table
/// witness while keeping the search space bounded.
pub fn default_budget(alpha: &Root, n: usize) -> usize {
    2 * alpha.height().max(0) as usize + n
}

pub(crate) fn check(q: &Quiver, pi: &Perm, d: &ArcDiagram, alpha: &Root, mode: Mode) -> bool {
    if !is_non_self_crossing(d) {
        return false;
    }
    let a = CartanMatrix::of(q);
    match classify(d, pi, &a) {
        Ok(c) => {
            let ordered = match mode {
                Mode::NonDecreasing => c.non_decreasing,
                Mode::StrictlyIncreasing => c.strictly_increasing,
            };
            c.positive
                && ordered
                && c.intermediate_roots.last().map(|r| r.abs()) == Some(alpha.clone())
        }
        Err(_) => false,
    }
}

/// Append a loop around the marked point at position `pos` (must be an end
/// position holding a leaf vertex). The associated root gains one reflection
/// by the leaf's simple root.
pub fn leaf_loop_extend(
    q: &Quiver,
    d: &ArcDiagram,
    leaf: usize,
    pi: &Perm,
) -> Result<ArcDiagram, String> {
    let n = q.n();
    let pos = pi.position(leaf);
    if pos != 1 && pos != n {
        return Err(format!("vertex {leaf} is not at an end of the ordering"));
    }
    if !(q.is_source(leaf) || q.is_sink(leaf)) {
        return Err(format!("vertex {leaf} is not a source or sink"));
    }
    if signed_word(d).letters.iter().any(|&(k, _)| k == pos) {
        return Err(format!("curve already crosses the ray of position {pos}"));
    }
    for dir in [1i8, -1] {
        let mut w = signed_word(d);
        w.letters.push((pos, dir));
        if let Ok(out) = materialize(&w) {
            if is_non_self_crossing(&out) {
                return Ok(out);
            }
        }
    }
    Err("no embedded extension".into())
}

/// Wrap a non-decreasing curve once around all marked points; valid when the
/// associated root is dominated by its image under the Coxeter element (or
/// its inverse, for dir < 0).
pub fn coxeter_lift(
    q: &Quiver,
    d: &ArcDiagram,
    pi: &Perm,
    dir: i32,
) -> Result<ArcDiagram, String> {
    let a = CartanMatrix::of(q);
    let alpha = curve_model::associated_root(d, pi, &a).map_err(|e| e.to_string())?;
    let target = coxeter_apply(&a, pi, &alpha, dir);
    if !(dominated(&alpha, &target) && alpha != target) {
        return Err("root is not dominated by its Coxeter image".into());
    }
    let out = c_wrap(d, dir).map_err(|e| e.to_string())?;
    if !check(q, pi, &out, &target, Mode::NonDecreasing) {
        return Err("wrapped curve failed re-verification".into());
    }
    Ok(out)
}

/// Closed-form curve for a root whose Coxeter image collapses to a negative
/// simple root: alpha = s_{pi(n)}...s_{pi(2)} alpha_{pi(1)} when dir > 0
/// (start at position 1), mirrored for dir < 0.
fn collapse_curve(n: usize, dir: i32) -> CurveWord {
    if dir > 0 {
        CurveWord { n, start: 1, letters: (2..=n).map(|k| (k, -1i8)).collect() }
    } else {
        CurveWord { n, start: n, letters: (1..n).rev().map(|k| (k, 1i8)).collect() }
    }
}

type Memo = HashMap<Vec<i64>, Option<Witness>>;

/// Build a non-decreasing curve realizing `alpha` under the fixed ordering
/// `pi`. `budget` enables the search fallback; `None` restricts to the
/// constructive arms.
pub fn construct_for_pi(
    q: &Quiver,
    pi: &Perm,
    alpha: &Root,
    budget: Option<SearchParams>,
) -> Option<Witness> {
    let mut memo = Memo::new();
    go(q, &CartanMatrix::of(q), pi, alpha, budget, &mut memo)
}

fn go(
    q: &Quiver,
    a: &CartanMatrix,
    pi: &Perm,
    alpha: &Root,
    budget: Option<SearchParams>,
    memo: &mut Memo,
) -> Option<Witness> {
    if let Some(hit) = memo.get(&alpha.0) {
        return hit.clone();
    }
    // park a failure marker so a cyclic revisit cannot loop
    memo.insert(alpha.0.clone(), None);
    let out = go_uncached(q, a, pi, alpha, budget, memo);
    memo.insert(alpha.0.clone(), out.clone());
    out
}

fn go_uncached(
    q: &Quiver,
    a: &CartanMatrix,
    pi: &Perm,
    alpha: &Root,
    budget: Option<SearchParams>,
    memo: &mut Memo,
) -> Option<Witness> {
    let n = q.n();
    if !alpha.is_positive() {
        return None;
    }
    let supp = alpha.support();

    // bare simple root
    if alpha.height() == 1 {
        let d = gamma(n, pi.position(supp[0]));
        return finish(q, pi, d, alpha, Method::Gamma);
    }

    // proper support: build inside the support subquiver and re-space the
    // crossing word around the ignored marked points
    if supp.len() < n {
        if let Ok((sub_q, map)) = subquiver_restrict(q, &supp) {
            let sub_pi = phi(pi, &map);
            let sub_alpha = Root(supp.iter().map(|&v| alpha.0[v - 1]).collect());
            let sub_a = CartanMatrix::of(&sub_q);
            let mut sub_memo = Memo::new();
            if let Some(w) = go(&sub_q, &sub_a, &sub_pi, &sub_alpha, budget, &mut sub_memo) {
                if let Some(d) = lift_subcurve(&w.diagram, &sub_pi, &map, pi) {
                    return finish(q, pi, d, alpha, Method::SubquiverLift);
                }
            }
        }
    }

    // loop around a leaf sitting at an end of the ordering
    for pos in [1, n] {
        let v = pi.image(pos);
        if !is_graph_leaf(q, v) || alpha.0[v - 1] < 1 {
            continue;
        }
        let beta = simple_reflection(a, v, alpha);
        let expect: Vec<i64> = alpha
            .0
            .iter()
            .enumerate()
            .map(|(i, &c)| if i == v - 1 { c - 1 } else { c })
            .collect();
        if beta.0 != expect || !beta.is_positive() {
            continue;
        }
        if let Some(w) = go(q, a, pi, &beta, budget, memo) {
            if let Ok(d) = leaf_loop_extend(q, &w.diagram, v, pi) {
                if let Some(out) = finish(q, pi, d, alpha, Method::LeafLoop) {
                    return Some(out);
                }
            }
        }
    }

    // Coxeter element descent, both directions; a collapse to a negative
    // simple root has a direct closed-form curve
    for dir in [1i32, -1] {
        let img = coxeter_apply(a, pi, alpha, dir);
        if img.is_negative() {
            if let Ok(d) = materialize(&collapse_curve(n, dir)) {
                if let Some(out) = finish(q, pi, d, alpha, Method::CoxeterLift) {
                    return Some(out);
                }
            }
        } else if dominated(&img, alpha) && img != *alpha {
            if let Some(w) = go(q, a, pi, &img, budget, memo) {
                // alpha = c_pi^{-dir} img, so wrap opposite to the descent
                if let Ok(d) = coxeter_lift(q, &w.diagram, pi, -dir) {
                    if let Some(out) = finish(q, pi, d, alpha, Method::CoxeterLift) {
                        return Some(out);
                    }
                }
            }
        }
    }

    // last resort: pruned search
    if let Some(params) = budget {
        match bounded_search(q, pi, alpha, params) {
            Ok((d, stats)) => {
                let mut w = finish(q, pi, d, alpha, Method::BoundedSearch)?;
                w.stats = stats;
                return Some(w);
            }
            Err(_) => return None,
        }
    }
    None
}

fn is_graph_leaf(q: &Quiver, v: usize) -> bool {
    let mut deg = 0;
    for (t, h) in q.arrow_list() {
        if t == v || h == v {
            deg += 1;
        }
    }
    deg == 1
}

fn lift_subcurve(
    d: &ArcDiagram,
    sub_pi: &Perm,
    map: &root_system::SubquiverMap,
    pi: &Perm,
) -> Option<ArcDiagram> {
    let w = signed_word(d);
    let to_pos = |j: usize| pi.position(map.to_original(sub_pi.image(j)));
    let lifted = CurveWord {
        n: pi.len(),
        start: to_pos(w.start),
        letters: w.letters.iter().map(|&(j, s)| (to_pos(j), s)).collect(),
    };
    materialize(&lifted).ok()
}

fn finish(q: &Quiver, pi: &Perm, d: ArcDiagram, alpha: &Root, method: Method) -> Option<Witness> {
    if !check(q, pi, &d, alpha, Mode::NonDecreasing) {
        return None;
    }
    let word_len = signed_word(&d).letters.len();
    Some(Witness {
        pi: pi.clone(),
        diagram: d,
        method,
        word_len,
        stats: SearchStats::default(),
    })
}

/// Build a curve for `alpha` choosing the ordering freely. Strategies are
/// tried in a fixed order; the failure trace lists what was attempted.
pub fn descent_construct(
    q: &Quiver,
    alpha: &Root,
    mode: Mode,
    budget: Option<SearchParams>,
) -> Result<Witness, Vec<String>> {
    let mut trace = Vec::new();
    let n = q.n();
    let pis = enumerate_p_q(q);
    let pi0 = pis.first().cloned().unwrap_or_else(|| Perm::identity(n));

    // simple root: straight drop
    if alpha.height() == 1 {
        let d = gamma(n, pi0.position(alpha.support()[0]));
        if let Some(w) = finish_mode(q, &pi0, d, alpha, Method::Gamma, mode) {
            return Ok(w);
        }
        trace.push("gamma: verification failed".into());
    }

    // proper support: recurse on the support subquiver, then pull the
    // ordering back through a preimage that keeps the ignored points free
    let supp = alpha.support();
    if supp.len() < n && alpha.height() > 1 {
        match subquiver_restrict(q, &supp) {
            Ok((sub_q, map)) => {
                let sub_alpha = Root(supp.iter().map(|&v| alpha.0[v - 1]).collect());
                match descent_construct(&sub_q, &sub_alpha, mode, budget) {
                    Ok(w) => {
                        if let Some(pi) = phi_preimage(&w.pi, q, &map) {
                            let sub_pi = phi(&pi, &map);
                            if let Some(d) = lift_subcurve(&w.diagram, &sub_pi, &map, &pi) {
                                if let Some(out) =
                                    finish_mode(q, &pi, d, alpha, Method::SubquiverLift, mode)
                                {
                                    return Ok(out);
                                }
                            }
                        }
                        trace.push("subquiver lift: pullback failed".into());
                    }
                    Err(sub_trace) => {
                        trace.push(format!("subquiver descent failed: {}", sub_trace.join("; ")));
                    }
                }
            }
            Err(e) => trace.push(format!("subquiver restrict: {e}")),
        }
    }

    // type A with linear labels: strictly increasing interval curve
    if supp.len() == n || mode == Mode::StrictlyIncreasing {
        if let Some(w) = type_a_interval(q, alpha, mode) {
            return Ok(w);
        }
        trace.push("type A closed form: not applicable".into());
    }
    if mode == Mode::StrictlyIncreasing {
        trace.push("strict mode: no strictly increasing construction".into());
        return Err(trace);
    }

    // fixed-ordering descent (leaf loops + Coxeter descent) over every
    // compatible ordering
    for pi in &pis {
        if let Some(w) = construct_for_pi(q, pi, alpha, None) {
            return Ok(w);
        }
    }
    trace.push(format!("per-ordering descent failed for all {} orderings", pis.len()));

    // table fixture, as printed or mirrored
    if let Some((pi, d)) = fixtures::lookup(q, alpha) {
        if let Some(w) = finish_mode(q, &pi, d, alpha, Method::TableFixture, mode) {
            return Ok(w);
        }
        trace.push("table fixture: verification failed".into());
    } else {
        trace.push("table fixture: no matching row".into());
    }

    // pruned search
    let params = budget.unwrap_or(SearchParams {
        budget: default_budget(alpha, n),
        max_nodes: SearchParams::DEFAULT_MAX_NODES,
    });
    let mut total_nodes = 0;
    let mut capped = false;
    for pi in &pis {
        match bounded_search(q, pi, alpha, params) {
            Ok((d, stats)) => {
                if let Some(mut w) = finish_mode(q, pi, d, alpha, Method::BoundedSearch, mode) {
                    w.stats = SearchStats {
                        nodes_explored: total_nodes + stats.nodes_explored,
                        ..stats
                    };
                    return Ok(w);
                }
            }
            Err(stats) => {
                total_nodes += stats.nodes_explored;
                capped |= stats.capped;
            }
        }
    }
    trace.push(format!(
        "bounded search: no witness at budget {} ({} nodes{})",
        params.budget,
        total_nodes,
        if capped { ", node cap hit" } else { "" }
    ));
    Err(trace)
}

fn type_a_interval(q: &Quiver, alpha: &Root, mode: Mode) -> Option<Witness> {
    if unimodal_psi(q).is_err() {
        return None;
    }
    let supp = alpha.support();
    if alpha.0.iter().any(|&c| c > 1) {
        return None;
    }
    let (l, m) = (supp[0], *supp.last().unwrap());
    if supp.len() != m - l + 1 {
        return None;
    }
    let pi = unimodal_psi(q).ok()?;
    let d = construct_type_a_strict(q, l, m).ok()?;
    finish_mode(q, &pi, d, alpha, Method::TypeAClosedForm, mode)
}

fn finish_mode(
    q: &Quiver,
    pi: &Perm,
    d: ArcDiagram,
    alpha: &Root,
    method: Method,
    mode: Mode,
) -> Option<Witness> {
    if !check(q, pi, &d, alpha, mode) {
        return None;
    }
    let word_len = signed_word(&d).letters.len();
    Some(Witness { pi: pi.clone(), diagram: d, method, word_len, stats: SearchStats::default() })
}

/// Stable text identity of the quiver, in the same format the parser reads.
pub fn quiver_id(q: &Quiver) -> String {
    let mut s = format!("n {}\n", q.n());
    for (t, h) in q.arrow_list() {
        s.push_str(&format!("arrow {t} {h}\n"));
    }
    s
}

/// Classification shorthand used across the verification drivers.
pub fn dynkin_type(q: &Quiver) -> DynkinType {
    let edges = q
        .arrow_list()
        .iter()
        .map(|&(t, h)| (t.min(h), t.max(h)))
        .collect();
    quiver_core::classify_graph(q.n(), &edges).ty
}
