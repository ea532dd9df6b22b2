//! End-to-end acceptance checks, one test per shipped claim. Each prints a
//! single pass/fail line in the harness output; run serially with
//! `cargo test --test acceptance` to see them in order.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use curve_model::{
    associated_root, braid_apply_all, classify, construct_type_a_strict, gamma, gen,
    is_non_self_crossing, materialize, signed_word, CurveWord,
};
use quiver_core::{CartanMatrix, EnumerateMode, Quiver};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use realization::{
    bounded_search_exact, descent_construct, e8_campaign, fixtures, verify_affine_a,
    verify_theorem, Mode, SearchParams,
};
use root_system::{
    coxeter_apply, dominated, enumerate_p_q, omega_orbits, positive_roots,
    simple_reflection, unimodal_omega, unimodal_psi, Perm, Root,
};

fn q(n: usize, arrows: &[(usize, usize)]) -> Quiver {
    Quiver::new(n, arrows).unwrap()
}

/// All 2^m orientations of an undirected edge list.
fn orientations(n: usize, edges: &[(usize, usize)]) -> Vec<Quiver> {
    let m = edges.len();
    (0..1usize << m)
        .map(|mask| {
            let arrows: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if mask >> i & 1 == 0 { (a, b) } else { (b, a) })
                .collect();
            q(n, &arrows)
        })
        .collect()
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i, i + 1)).collect()
}

fn d_edges(n: usize) -> Vec<(usize, usize)> {
    let mut e = path_edges(n - 1);
    e.push((n - 2, n));
    e
}

// branch vertex 6; arms 2-3-6 and 1-4-6, with 5 below 6
const E6_EDGES: [(usize, usize); 5] = [(2, 3), (3, 6), (6, 4), (4, 1), (5, 6)];
// branch vertex 7; arms 2-3-4-7 and 1-5-7, with 6 below 7 (the labeling the
// bundled curve tables use)
const E7_EDGES: [(usize, usize); 6] = [(2, 3), (3, 4), (4, 7), (7, 5), (5, 1), (7, 6)];
// branch vertex 8; arms 2-3-4-5-8 and 1-6-8, with 7 below 8
const E8_EDGES: [(usize, usize); 7] =
    [(2, 3), (3, 4), (4, 5), (5, 8), (8, 6), (6, 1), (8, 7)];

#[test]
fn criterion_01_framed_mutation_c_vectors_exact() {
    let framed = q(3, &[(1, 2), (2, 3)]).framed().unwrap();
    let _ = framed.mutate_seq(&[1, 2, 3]).unwrap(); // warm up
    let t = Instant::now();
    let cv = framed.mutate_seq(&[1, 2, 3]).unwrap().c_vectors().unwrap();
    let elapsed = t.elapsed();
    assert_eq!(cv, vec![vec![-1, -1, -1], vec![1, 0, 0], vec![0, 1, 0]]);
    assert!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
}

#[test]
fn criterion_02_three_curves_one_root_flags() {
    let qv = q(3, &[(1, 2), (2, 3)]);
    let a = CartanMatrix::of(&qv);
    let pi = Perm::identity(3);
    let alpha2 = Root::simple(3, 2);

    let tau1 = gamma(3, 2);
    let c1 = classify(&tau1, &pi, &a).unwrap();
    assert!(c1.strictly_increasing && c1.non_decreasing && c1.positive);
    assert_eq!(associated_root(&tau1, &pi, &a).unwrap(), alpha2);

    let tau2 =
        materialize(&CurveWord { n: 3, start: 3, letters: vec![(2, -1), (3, -1)] }).unwrap();
    let c2 = classify(&tau2, &pi, &a).unwrap();
    assert!(c2.positive && !c2.non_decreasing && !c2.strictly_increasing);
    assert_eq!(associated_root(&tau2, &pi, &a).unwrap(), alpha2);

    let tau3 = materialize(&CurveWord {
        n: 3,
        start: 2,
        letters: vec![(1, 1), (3, 1), (1, -1), (3, -1)],
    })
    .unwrap();
    let c3 = classify(&tau3, &pi, &a).unwrap();
    assert!(c3.positive && !c3.non_decreasing && !c3.strictly_increasing);
    assert_eq!(associated_root(&tau3, &pi, &a).unwrap(), alpha2);
}

#[test]
fn criterion_03_type_a_strictly_increasing_closed_form() {
    let t = Instant::now();
    for n in 2..=6 {
        for qv in orientations(n, &path_edges(n)) {
            let a = CartanMatrix::of(&qv);
            let pi = unimodal_psi(&qv).unwrap();
            let mut count = 0;
            for l in 1..=n {
                for m in l..=n {
                    let d = construct_type_a_strict(&qv, l, m).unwrap();
                    let c = classify(&d, &pi, &a).unwrap();
                    assert!(c.strictly_increasing, "n={n} [{l},{m}]");
                    let expect =
                        Root((1..=n).map(|i| i64::from(l <= i && i <= m)).collect());
                    assert_eq!(associated_root(&d, &pi, &a).unwrap(), expect);
                    count += 1;
                }
            }
            assert_eq!(count, n * (n + 1) / 2);
        }
    }
    let elapsed = t.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
}

#[test]
fn criterion_04_types_a_and_d_every_ordering() {
    let t = Instant::now();
    let mut cases: Vec<Quiver> = Vec::new();
    for n in 2..=5 {
        cases.extend(orientations(n, &path_edges(n)));
    }
    for n in 4..=6 {
        cases.extend(orientations(n, &d_edges(n)));
    }
    for qv in &cases {
        let report = verify_theorem(qv, Mode::NonDecreasing, None).unwrap();
        let ap = report.any_pi.as_ref().expect("per-ordering summary");
        assert!(!ap.sampled, "expected full coverage for {:?}", qv.arrow_list());
        assert!(
            report.complete(),
            "incomplete for {:?}: {:?}",
            qv.arrow_list(),
            report.summary
        );
    }
    let elapsed = t.elapsed();
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
}

#[test]
fn criterion_05_e6_e7_union_over_orderings_and_tables() {
    let t = Instant::now();

    // the rank-6 diagram has one symmetry swapping the long arms; skip the
    // mirror of an orientation already checked
    let sigma = |v: usize| [0, 2, 1, 4, 3, 5, 6][v];
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    for qv in orientations(6, &E6_EDGES) {
        let mut arrows = qv.arrow_list();
        arrows.sort();
        let mut mirrored: Vec<(usize, usize)> =
            arrows.iter().map(|&(a, b)| (sigma(a), sigma(b))).collect();
        mirrored.sort();
        if seen.contains(&mirrored) {
            continue;
        }
        seen.insert(arrows);
        let report = verify_theorem(&qv, Mode::NonDecreasing, None).unwrap();
        assert_eq!(report.summary.total, 36);
        assert_eq!(report.summary.realized, 36, "{:?}", qv.arrow_list());
    }

    for qv in orientations(7, &E7_EDGES) {
        let report = verify_theorem(&qv, Mode::NonDecreasing, None).unwrap();
        assert_eq!(report.summary.total, 63);
        assert_eq!(report.summary.realized, 63, "{:?}", qv.arrow_list());
    }

    // every bundled table row re-verifies, and an independent search at that
    // row's crossing count finds a witness for the stated ordering
    for row in fixtures::rows().unwrap() {
        let a = CartanMatrix::of(&row.quiver);
        let c = classify(&row.diagram, &row.pi, &a).unwrap();
        assert!(c.positive && c.non_decreasing, "row {}", row.index);
        assert_eq!(c.intermediate_roots.last().unwrap().abs(), row.root, "row {}", row.index);
        // a witness of exactly this size exists, so search that level directly
        // instead of exhausting every cheaper one first
        let params =
            SearchParams { budget: row.diagram.crossings.len(), max_nodes: u64::MAX };
        let (d, _) = bounded_search_exact(&row.quiver, &row.pi, &row.root, params)
            .unwrap_or_else(|stats| panic!("row {} search failed: {stats:?}", row.index));
        assert!(is_non_self_crossing(&d));
    }

    let elapsed = t.elapsed();
    assert!(elapsed < Duration::from_secs(3600), "took {elapsed:?}");
}

#[test]
fn criterion_06_coxeter_orbits_partition_the_roots() {
    for qv in [
        q(3, &[(1, 2), (2, 3)]),
        q(3, &[(1, 2), (3, 2)]),
        q(4, &[(1, 3), (2, 3), (3, 4)]),
        q(6, E6_EDGES.as_slice()),
    ] {
        let a = CartanMatrix::of(&qv);
        let mut pos = positive_roots(&a).unwrap();
        root_system::sort_canonical(&mut pos);
        let full: BTreeSet<Vec<i64>> = pos
            .iter()
            .flat_map(|r| [r.0.clone(), r.neg().0])
            .collect();
        let pos_set: BTreeSet<Vec<i64>> = pos.iter().map(|r| r.0.clone()).collect();
        for pi in enumerate_p_q(&qv) {
            let orbits = omega_orbits(&a, &pi).unwrap();
            let mut union: BTreeSet<Vec<i64>> = BTreeSet::new();
            let mut total = 0;
            for orb in &orbits {
                for r in &orb.elements {
                    union.insert(r.0.clone());
                    total += 1;
                }
            }
            assert_eq!(total, union.len(), "orbits overlap under {pi}");
            assert_eq!(union, full, "orbits miss roots under {pi}");
            let abs: BTreeSet<Vec<i64>> = orbits
                .iter()
                .flat_map(|o| o.elements.iter().map(|r| r.abs().0))
                .collect();
            assert_eq!(abs, pos_set);
        }
    }
}

#[test]
fn criterion_07_sign_coherence_fuzz() {
    let mut families: Vec<(Quiver, BTreeSet<Vec<i64>>)> = Vec::new();
    let mut shapes: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for n in 2..=8 {
        shapes.push((n, path_edges(n)));
    }
    for n in 4..=8 {
        shapes.push((n, d_edges(n)));
    }
    shapes.push((6, E6_EDGES.to_vec()));
    shapes.push((7, E7_EDGES.to_vec()));
    shapes.push((8, E8_EDGES.to_vec()));
    for (n, edges) in &shapes {
        let base = q(*n, edges);
        let pos: BTreeSet<Vec<i64>> = positive_roots(&CartanMatrix::of(&base))
            .unwrap()
            .into_iter()
            .map(|r| r.0)
            .collect();
        families.push((base, pos));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0xC01D);
    for trial in 0..1000 {
        let (base, pos) = &families[rng.gen_range(0..families.len())];
        let n = base.n();
        let edges: Vec<(usize, usize)> = base
            .arrow_list()
            .iter()
            .map(|&(a, b)| if rng.gen() { (a, b) } else { (b, a) })
            .collect();
        let mut state = q(n, &edges).framed().unwrap();
        let depth = rng.gen_range(1..=10);
        for _ in 0..depth {
            state = state.mutate(rng.gen_range(1..=n)).unwrap();
            for cv in state.c_vectors().unwrap() {
                let pos_cnt = cv.iter().filter(|&&c| c > 0).count();
                let neg_cnt = cv.iter().filter(|&&c| c < 0).count();
                assert!(pos_cnt == 0 || neg_cnt == 0, "trial {trial}: mixed signs {cv:?}");
                if pos_cnt > 0 {
                    assert!(pos.contains(&cv), "trial {trial}: {cv:?} not a positive root");
                }
            }
        }
    }
}

#[test]
fn criterion_08_closure_c_vectors_match_root_systems() {
    let t = Instant::now();
    for qv in [
        q(2, &[(1, 2)]),
        q(3, &[(1, 2), (2, 3)]),
        q(4, &[(1, 3), (2, 3), (3, 4)]),
    ] {
        let set = quiver_core::enumerate_c_vectors(&qv, EnumerateMode::Exhaustive).unwrap();
        let positive: BTreeSet<Vec<i64>> =
            set.into_iter().filter(|v| v.iter().any(|&c| c > 0)).collect();
        let expected: BTreeSet<Vec<i64>> = positive_roots(&CartanMatrix::of(&qv))
            .unwrap()
            .into_iter()
            .map(|r| r.0)
            .collect();
        assert_eq!(positive, expected, "{:?}", qv.arrow_list());
    }
    let elapsed = t.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

#[test]
fn criterion_09_affine_cycle_family_realized() {
    for (k, l) in [(0, 1), (0, 2), (1, 1), (0, 3), (1, 2), (0, 4), (1, 3), (2, 2)] {
        let budget = 4 * 3 + k + l + 2;
        let report = verify_affine_a(k, l, 3, budget).unwrap();
        assert!(report.complete(), "k={k} l={l}: {:?}", report.summary);
        assert!(report.notes.iter().any(|n| n.contains("cross-check")));
        assert!(!report.notes.iter().any(|n| n.contains("miss")), "k={k} l={l}");
    }
}

#[test]
fn criterion_10_rank_8_campaign_classifies_holdouts() {
    // arrows: 1->6, 2->3, 3->4, 5->4, 8->5, 8->7, 8->6
    let qv = q(8, &[(1, 6), (2, 3), (3, 4), (5, 4), (8, 5), (8, 7), (8, 6)]);
    let pi = Perm::new(vec![1, 2, 3, 8, 7, 6, 5, 4]);
    assert!(pi.respects(&qv));
    let a = CartanMatrix::of(&qv);

    let alpha = Root(vec![1, 1, 2, 2, 3, 2, 1, 3]);
    assert_eq!(coxeter_apply(&a, &pi, &alpha, 1), Root(vec![1, 1, 2, 3, 3, 2, 2, 4]));
    assert_eq!(coxeter_apply(&a, &pi, &alpha, -1), Root(vec![1, 1, 1, 1, 2, 2, 2, 3]));

    // the sixteen roots where neither wrap direction compares with the root
    // under any compatible ordering
    let residual: Vec<Root> = [
        [1, 1, 2, 2, 2, 2, 1, 3],
        [1, 1, 2, 2, 2, 2, 2, 3],
        [1, 1, 2, 2, 3, 2, 1, 3],
        [1, 1, 2, 2, 3, 2, 2, 3],
        [1, 1, 2, 3, 3, 2, 1, 3],
        [1, 1, 2, 2, 3, 2, 2, 4],
        [1, 1, 2, 2, 3, 3, 2, 4],
        [1, 1, 2, 3, 3, 2, 2, 4],
        [1, 1, 2, 3, 3, 3, 2, 4],
        [1, 1, 2, 3, 4, 2, 2, 4],
        [2, 1, 2, 3, 3, 3, 2, 4],
        [1, 1, 2, 3, 4, 3, 2, 4],
        [1, 1, 2, 3, 4, 3, 2, 5],
        [1, 1, 2, 3, 4, 3, 3, 5],
        [2, 1, 2, 3, 4, 3, 2, 5],
        [2, 1, 2, 3, 4, 4, 2, 5],
    ]
    .iter()
    .map(|c| Root(c.to_vec()))
    .collect();
    assert!(residual.contains(&alpha));

    let incomparable = |r1: &Root, r2: &Root| !dominated(r1, r2) && !dominated(r2, r1);
    let pis = enumerate_p_q(&qv);
    for rho in &residual {
        for p in &pis {
            for dir in [1, -1] {
                let img = coxeter_apply(&a, p, rho, dir);
                assert!(incomparable(&img, rho), "{rho:?} comparable under {p} dir {dir}");
            }
        }
    }

    let report = e8_campaign(&qv, &[2], 20_000).unwrap();
    assert_eq!(report.summary.total, 120);
    for e in &report.entries {
        if !residual.contains(&e.root) {
            assert!(e.realized(), "non-holdout root {:?} unrealized", e.root.0);
        } else if !e.realized() {
            // budgeted search was attempted and its outcome logged
            assert!(
                e.failure.iter().any(|f| f.contains("search")),
                "{:?}: {:?}",
                e.root.0,
                e.failure
            );
        }
    }
}

#[test]
fn criterion_11_property_suites() {
    // braid relations on curve words: adjacent generators satisfy the
    // Artin relation, distant ones commute
    let base = materialize(&CurveWord {
        n: 4,
        start: 2,
        letters: vec![(3, -1), (4, -1)],
    })
    .unwrap();
    let aba = [gen(1, false), gen(2, false), gen(1, false)];
    let bab = [gen(2, false), gen(1, false), gen(2, false)];
    assert_eq!(
        signed_word(&braid_apply_all(&base, &aba).unwrap()),
        signed_word(&braid_apply_all(&base, &bab).unwrap())
    );
    let ac = [gen(1, false), gen(3, false)];
    let ca = [gen(3, false), gen(1, false)];
    assert_eq!(
        signed_word(&braid_apply_all(&base, &ac).unwrap()),
        signed_word(&braid_apply_all(&base, &ca).unwrap())
    );

    // reduce is idempotent and materialize preserves the reduced word
    let mut w = CurveWord {
        n: 3,
        start: 1,
        letters: vec![(2, -1), (2, 1), (3, -1), (1, 1), (1, -1), (3, 1), (3, -1)],
    };
    w.reduce();
    let once = w.clone();
    w.reduce();
    assert_eq!(w, once);
    let d = materialize(&w).unwrap();
    assert_eq!(signed_word(&d), w);

    // associated roots of embedded curves are (sign-normalized) positive,
    // and the flag implications hold: strict => non-decreasing => positive
    let qv = q(4, &[(1, 2), (2, 3), (3, 4)]);
    let a = CartanMatrix::of(&qv);
    let pi = Perm::identity(4);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for _ in 0..200 {
        let len = rng.gen_range(0..6);
        let word = CurveWord {
            n: 4,
            start: rng.gen_range(1..=4),
            letters: (0..len)
                .map(|_| (rng.gen_range(1..=4), if rng.gen() { 1 } else { -1 }))
                .collect(),
        };
        if let Ok(d) = materialize(&word) {
            let r = associated_root(&d, &pi, &a).unwrap();
            assert!(r.is_positive());
            let c = classify(&d, &pi, &a).unwrap();
            if c.strictly_increasing {
                assert!(c.non_decreasing);
            }
            if c.non_decreasing {
                assert!(c.positive);
            }
        }
    }

    // mutation at a vertex is an involution
    let framed = q(4, &[(1, 3), (2, 3), (3, 4)]).framed().unwrap();
    for i in 1..=4 {
        assert_eq!(framed.mutate(i).unwrap().mutate(i).unwrap(), framed);
    }

    // simple reflections are involutions
    let roots = positive_roots(&a).unwrap();
    for r in &roots {
        for i in 1..=4 {
            assert_eq!(simple_reflection(&a, i, &simple_reflection(&a, i, r)), *r);
        }
    }

    // the unimodal correspondence inverts both ways, exhaustively to rank 8
    for n in 2..=8 {
        for qv in orientations(n, &path_edges(n)) {
            let pi = unimodal_psi(&qv).unwrap();
            assert_eq!(unimodal_omega(&pi).unwrap(), qv);
        }
    }
}
