//! Acceptance gate: one test per criterion, each printing a PASS line (run
//! with `cargo test --test acceptance -- --nocapture` to see them). All
//! comparisons are exact; runtime budgets are asserted.

use coulomb_kit::anomaly::{anomaly_check, sl2_monopole_number, sl2_parity_criterion};
use coulomb_kit::cli::{
    cmd_hilbert, cmd_kostant_verify, sl2_theory, torus_lattice_oracle, HilbertFlags,
};
use coulomb_kit::kostant::suite::run_suite;
use coulomb_kit::lie::{
    cotangent, defining_rep, random_weyl_invariant_rep, rebuild_from_isotypic, sl2_irrep,
    Preset, RootDatum, WeightRep,
};
use coulomb_kit::monopole::{
    compare_series, delta, monopole_hilbert_series, presentation_hilbert_series, sl2_presentation,
    MonopoleOptions,
};
use coulomb_kit::rat::{is_integer, rat, ratio};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

fn budget(started: Instant, limit: Duration, what: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= limit,
        "{what} took {elapsed:?}, budget is {limit:?}"
    );
}

/// Criterion 1: over every symplectic `⊕_{k≤6} V^k ⊗ C^{m_k}` with
/// `m_k ≤ 3`, the three rank-1 anomaly criteria agree exactly.
#[test]
fn criterion_1_sl2_criterion_equivalence() {
    let started = Instant::now();
    let d = RootDatum::sl2();
    let even_choices = [0u64, 2];
    let odd_choices = [0u64, 1, 2, 3];
    let mut cases = 0usize;
    for m0 in even_choices {
        for m1 in odd_choices {
            for m2 in even_choices {
                for m3 in odd_choices {
                    for m4 in even_choices {
                        for m5 in odd_choices {
                            for m6 in even_choices {
                                let decomp = BTreeMap::from([
                                    (0u64, m0),
                                    (1, m1),
                                    (2, m2),
                                    (3, m3),
                                    (4, m4),
                                    (5, m5),
                                    (6, m6),
                                ]);
                                let rep = rebuild_from_isotypic(&d, &decomp).unwrap();
                                let anomaly = anomaly_check(&d, &rep).unwrap().pass();
                                let n = sl2_monopole_number(&rep).unwrap();
                                let parity = sl2_parity_criterion(&decomp);
                                assert_eq!(
                                    anomaly,
                                    is_integer(&n),
                                    "anomaly vs integrality disagree at {decomp:?}"
                                );
                                assert_eq!(
                                    anomaly, parity,
                                    "anomaly vs parity disagree at {decomp:?}"
                                );
                                cases += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    assert_eq!(cases, 1024);
    budget(started, Duration::from_secs(5), "criterion 1");
    println!("criterion 1: PASS — three rank-1 criteria agree on all {cases} symplectic cases");
}

/// Criterion 2: `N ⊕ N*` passes the anomaly check for 200 seeded random
/// Weyl-invariant `N` across five groups.
#[test]
fn criterion_2_cotangent_always_passes() {
    let started = Instant::now();
    let sp4 = RootDatum::preset(Preset::Sp(4)).unwrap();
    let so4 = RootDatum::preset(Preset::So(4)).unwrap();
    let data = [
        RootDatum::sl2(),
        RootDatum::pgl2(),
        sp4.clone(),
        RootDatum::preset(Preset::So(5)).unwrap(),
        sp4.product(&so4),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut total = 0usize;
    for datum in &data {
        for _ in 0..40 {
            let n = random_weyl_invariant_rep(datum, &mut rng);
            let m = cotangent(&n);
            let verdict = anomaly_check(datum, &m).unwrap();
            assert!(
                verdict.pass(),
                "cotangent rep failed the anomaly check on {} with N = {n}",
                datum.name()
            );
            total += 1;
        }
    }
    assert_eq!(total, 200);
    budget(started, Duration::from_secs(10), "criterion 2");
    println!("criterion 2: PASS — anomaly check passes for all {total} cotangent samples");
}

/// Criterion 3: the monopole series equals the presentation series through
/// order 40 for N = 3..8, with the N = 3 leading coefficients pinned.
#[test]
fn criterion_3_hilbert_series_equality() {
    let started = Instant::now();
    let order = 40;
    for big_n in 3u64..=8 {
        let (d, r) = sl2_theory(2 * big_n);
        let monopole = monopole_hilbert_series(&d, &r, &MonopoleOptions::new(order)).unwrap();
        assert!(monopole.warnings.is_empty());
        let pres = sl2_presentation(&d, &r).unwrap();
        assert_eq!(pres.monopole_number, big_n);
        let pres_series = presentation_hilbert_series(&pres, order).unwrap();
        let cmp = compare_series(&monopole.series, &pres_series);
        assert!(
            cmp.is_equal(),
            "N = {big_n}: monopole vs presentation: {cmp}"
        );
    }
    // Pinned leading coefficients for N = 3.
    let (d, r) = sl2_theory(6);
    let series = monopole_hilbert_series(&d, &r, &MonopoleOptions::new(order))
        .unwrap()
        .series;
    for (k, expected) in [1i64, 1, 3, 3, 5].into_iter().enumerate() {
        assert_eq!(series.coeff(k as i64), rat(expected));
    }
    // A mixed rep with the same monopole number gives the same series:
    // V^3 ⊕ V^1 ⊗ C^2 also has N = 3.
    let v3 = sl2_irrep(&d, 3).unwrap();
    let v1 = sl2_irrep(&d, 1).unwrap();
    let mixed = coulomb_kit::lie::direct_sum(
        &v3,
        &coulomb_kit::lie::direct_sum(&v1, &v1).unwrap(),
    )
    .unwrap();
    assert_eq!(sl2_monopole_number(&mixed).unwrap(), rat(3));
    let mixed_series = monopole_hilbert_series(&d, &mixed, &MonopoleOptions::new(order))
        .unwrap()
        .series;
    assert!(compare_series(&mixed_series, &series).is_equal());
    budget(started, Duration::from_secs(30), "criterion 3");
    println!("criterion 3: PASS — monopole = presentation through q^40 for N = 3..8");
}

/// Criterion 4: the rank-1 torus with weights {±1, ±1} has series
/// (1+q)/(1−q)² = 1, 3, 5, 7, … through order 30, matching the direct
/// lattice summation oracle.
#[test]
fn criterion_4_torus_oracle() {
    let started = Instant::now();
    let d = RootDatum::torus(1);
    let r = WeightRep::from_pairs(1, [(vec![1], 2), (vec![-1], 2)]).unwrap();
    let order = 30;
    let out = monopole_hilbert_series(&d, &r, &MonopoleOptions::new(order)).unwrap();
    for k in 0..=order {
        assert_eq!(out.series.coeff(k), rat(2 * k + 1), "coefficient of q^{k}");
    }
    let oracle = torus_lattice_oracle(&r, order);
    assert!(compare_series(&out.series, &oracle).is_equal());
    // Closed form (1+q)/(1−q)² expanded independently.
    let closed = coulomb_kit::series::HilbertSeries::rational_function(
        &[(0, rat(1)), (1, rat(1))],
        &[1, 1],
        2 * order,
    );
    assert!(compare_series(&out.series, &closed).is_equal());
    budget(started, Duration::from_secs(1), "criterion 4");
    println!("criterion 4: PASS — torus series 1, 3, 5, … matches the lattice oracle");
}

/// Criterion 5: anomalous cases are detected with exact witnesses:
/// a single V^1 on the rank-1 datum (N = 1/2, Δ(α∨) = −3/2) and the
/// defining representation of Sp(2n), n ≤ 3.
#[test]
fn criterion_5_anomalous_detection() {
    let started = Instant::now();
    let d = RootDatum::sl2();
    let v1 = sl2_irrep(&d, 1).unwrap();
    let verdict = anomaly_check(&d, &v1).unwrap();
    assert!(!verdict.pass());
    assert_eq!(verdict.coroot_failures, vec![vec![1]]);
    assert_eq!(sl2_monopole_number(&v1).unwrap(), ratio(1, 2));
    assert_eq!(delta(&d, &v1, &[1]), ratio(-3, 2));

    // The CLI surfaces the half-integral warning on the same input.
    let spec = r#"{
        "schema": "coulomb-kit/repspec/1",
        "group": [{"preset": "SL", "size": 2}],
        "representation": [["sl2_irrep", 1]]
    }"#;
    let out = cmd_hilbert(
        spec,
        &HilbertFlags {
            order: 4,
            threads: 1,
            shell_cap: None,
        },
    );
    assert!(out
        .report
        .warnings
        .iter()
        .any(|w| w.contains("exponents may lie in (1/2)Z")));
    // The divergence report carries the half-integral Δ(α∨) = −3/2 witness.
    let text = out.report.to_json();
    assert!(text.contains("-3/2"), "missing Δ witness in: {text}");
    assert_eq!(out.exit, 3);

    for n in 1..=3 {
        let datum = RootDatum::preset(Preset::Sp(2 * n)).unwrap();
        let rep = defining_rep(Preset::Sp(2 * n)).unwrap();
        let verdict = anomaly_check(&datum, &rep).unwrap();
        assert!(!verdict.pass(), "Sp({}) defining must fail", 2 * n);
    }
    budget(started, Duration::from_secs(5), "criterion 5");
    println!("criterion 5: PASS — anomalous inputs detected with exact witnesses");
}

/// Criterion 6: the seeded moment-map property suite holds exactly for
/// n ∈ {1, 2} with at least 50 samples each.
#[test]
fn criterion_6_kostant_suite() {
    let started = Instant::now();
    for n in 1..=2 {
        let report = run_suite(n, 50, 7).unwrap();
        assert_eq!(report.samples, 50);
        for p in &report.properties {
            assert!(
                p.passed(),
                "n = {n}: property {} failed {}/{} (first counterexample at sample {:?})",
                p.name,
                p.failures,
                p.samples,
                p.first_counterexample
            );
        }
    }
    budget(started, Duration::from_secs(60), "criterion 6");
    println!("criterion 6: PASS — all moment-map properties hold exactly for n = 1, 2");
}

/// Criterion 7: machine-readable reports are byte-identical across repeated
/// runs and across thread counts.
#[test]
fn criterion_7_determinism() {
    let started = Instant::now();
    let spec = r#"{
        "schema": "coulomb-kit/repspec/1",
        "group": [{"preset": "SL", "size": 2}],
        "representation": [["weights", [[[1], 6], [[-1], 6]]]]
    }"#;
    let mut hilbert_outputs = Vec::new();
    for threads in [1usize, 2, 4] {
        for _ in 0..3 {
            let out = cmd_hilbert(
                spec,
                &HilbertFlags {
                    order: 20,
                    threads,
                    shell_cap: None,
                },
            );
            assert_eq!(out.exit, 0);
            hilbert_outputs.push(out.report.to_json());
        }
    }
    assert!(
        hilbert_outputs.windows(2).all(|w| w[0] == w[1]),
        "hilbert reports differ across runs or thread counts"
    );

    let mut suite_outputs = Vec::new();
    for _ in 0..3 {
        let out = cmd_kostant_verify(2, 20, 11);
        assert_eq!(out.exit, 0);
        suite_outputs.push(out.report.to_json());
    }
    assert!(
        suite_outputs.windows(2).all(|w| w[0] == w[1]),
        "kostant-verify reports differ across runs"
    );
    budget(started, Duration::from_secs(60), "criterion 7");
    println!("criterion 7: PASS — reports are byte-identical across runs and thread counts");
}
