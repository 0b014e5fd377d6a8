//! Acceptance suite: one test per criterion, each printing its own
//! pass/fail line through the harness.
//!
//! Criteria:
//!   c01  arity-2 set equals the known ten-element list, < 1 s
//!   c02  arity-3 set equals the known thirty-element list, < 1 s
//!   c03  arity-4 set: 120 members, methods agree, exact re-check,
//!        central symmetry, < 60 s single-threaded
//!   c04  sum-of-squares identities hold coefficient-exactly
//!   c05  split components equal the hand-expanded references
//!   c06  symmetry-group relations, order, invariance, orbit
//!   c07  candidate pairs and their fibers partition the arity-3 set
//!   c08  oracle self-consistency on randomized positive definite forms
//!   c09  ring-axiom property tests at 10⁴ cases each
//!   c10  byte-identical reruns of `solve --dim 4 --stable-output`

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config as ProptestConfig, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tauring::forms::{
    builtin_form, builtin_sos, reference_components, split_components, verify_sos, IntPoly,
    QForm,
};
use tauring::golden_ring::{GoldenInt, GoldenVec};
use tauring::solver::{
    pair_candidates_d3, solutions_for_pair_d3, solve_oracle, solve_sos, SolutionSet,
};
use tauring::symmetry::{
    coordinate_swap, generate, orbit, preserves_form, tau_reflection,
};

fn gv(pairs: &[(i64, i64)]) -> GoldenVec {
    GoldenVec::from_pairs(pairs)
}

/// Closes a list of positive representatives under negation and sorts.
fn with_negatives(positives: &[GoldenVec]) -> Vec<GoldenVec> {
    let mut all: Vec<GoldenVec> = positives.to_vec();
    all.extend(positives.iter().map(|k| -k));
    all.sort();
    all
}

/// ±(1,0), ±(0,1), ±(τ,1), ±(1,τ), ±(τ,τ)
fn known_s2() -> Vec<GoldenVec> {
    with_negatives(&[
        gv(&[(1, 0), (0, 0)]),
        gv(&[(0, 0), (1, 0)]),
        gv(&[(0, 1), (1, 0)]),
        gv(&[(1, 0), (0, 1)]),
        gv(&[(0, 1), (0, 1)]),
    ])
}

/// The thirty arity-3 solutions, grouped by their (a₂, b₃) pair.
fn known_s3() -> Vec<GoldenVec> {
    with_negatives(&[
        // pair ±(1,1)
        gv(&[(0, 1), (1, 1), (0, 1)]), // (τ, τ², τ)
        gv(&[(0, 1), (1, 1), (1, 1)]), // (τ, τ², τ²)
        gv(&[(0, 0), (1, 0), (0, 1)]), // (0, 1, τ)
        gv(&[(1, 0), (1, 0), (0, 1)]), // (1, 1, τ)
        gv(&[(1, 0), (1, 1), (0, 1)]), // (1, τ², τ)
        gv(&[(1, 0), (1, 1), (1, 1)]), // (1, τ², τ²)
        // pair ±(1,0)
        gv(&[(0, 0), (1, 0), (0, 0)]), // (0, 1, 0)
        gv(&[(1, 0), (1, 0), (0, 0)]), // (1, 1, 0)
        // pair ±(0,1)
        gv(&[(0, 1), (0, 2), (1, 1)]), // (τ, 2τ, τ²)
        gv(&[(0, 1), (0, 1), (0, 1)]), // (τ, τ, τ)
        gv(&[(0, 0), (0, 1), (0, 1)]), // (0, τ, τ)
        // pair (0,0)
        gv(&[(1, 0), (0, 0), (0, 0)]), // (1, 0, 0)
        gv(&[(0, 0), (0, 0), (1, 0)]), // (0, 0, 1)
        gv(&[(0, 0), (0, 1), (1, 0)]), // (0, τ, 1)
        gv(&[(0, 1), (0, 1), (1, 0)]), // (τ, τ, 1)
    ])
}

fn solve_builtin(d: usize) -> SolutionSet {
    solve_sos(&builtin_form(d).unwrap(), &builtin_sos(d).unwrap()).unwrap()
}

#[test]
fn c01_s2_equals_known_ten_element_list() {
    let started = Instant::now();
    let set = solve_builtin(2);
    assert_eq!(set.len(), 10);
    assert_eq!(set.as_slice(), known_s2().as_slice());
    assert!(
        started.elapsed() < Duration::from_secs(1),
        "took {:?}",
        started.elapsed()
    );
}

#[test]
fn c02_s3_equals_known_thirty_element_list() {
    let started = Instant::now();
    let set = solve_builtin(3);
    assert_eq!(set.len(), 30);
    assert_eq!(set.as_slice(), known_s3().as_slice());
    assert!(
        started.elapsed() < Duration::from_secs(1),
        "took {:?}",
        started.elapsed()
    );
}

#[test]
fn c03_s4_count_agreement_and_symmetry() {
    let started = Instant::now();
    let f = builtin_form(4).unwrap();
    let by_sos = solve_sos(&f, &builtin_sos(4).unwrap()).unwrap();
    let by_oracle = solve_oracle(&f).unwrap();

    assert_eq!(by_sos.len(), 120);
    assert!(by_sos.same_solutions(&by_oracle), "methods disagree");
    for k in by_sos.iter() {
        assert_eq!(f.evaluate(k).unwrap(), GoldenInt::ONE, "member {k}");
        assert!(by_sos.contains(&-k), "negation of {k} missing");
    }
    assert!(
        started.elapsed() < Duration::from_secs(60),
        "took {:?}",
        started.elapsed()
    );
}

#[test]
fn c04_sos_identities_are_coefficient_exact() {
    for d in [2usize, 3, 4] {
        let s = builtin_sos(d).unwrap();
        let c = split_components(&builtin_form(d).unwrap());
        // Σ cᵢLᵢ² − target = multiplier·(A − 1), exactly
        assert!(verify_sos(&s, &c), "identity fails for d = {d}");
        let lhs = s.lhs_poly();
        let rhs =
            (c.a.clone() - IntPoly::constant(c.a.nvars(), 1)).scale(s.multiplier());
        assert_eq!(lhs, rhs, "polynomials differ for d = {d}");
    }
}

#[test]
fn c05_split_components_match_hand_expansions() {
    for d in [2usize, 3, 4] {
        let split = split_components(&builtin_form(d).unwrap());
        let reference = reference_components(d).unwrap();
        assert_eq!(split.a, reference.a, "rational components differ, d = {d}");
        assert_eq!(split.b, reference.b, "τ components differ, d = {d}");
    }
}

#[test]
fn c06_symmetry_group_suite() {
    let swap = coordinate_swap();
    let refl = tau_reflection();
    assert!(swap.compose(&swap).unwrap().is_identity());
    assert!(refl.compose(&refl).unwrap().is_identity());
    let rot = swap.compose(&refl).unwrap();
    assert!(rot.pow(10).is_identity());
    assert!(!rot.pow(5).is_identity());

    let group = generate(&[swap, refl]).unwrap();
    assert_eq!(group.order(), 20);

    let f2 = builtin_form(2).unwrap();
    for g in group.elements() {
        assert!(preserves_form(g, &f2).unwrap(), "{g} does not preserve the form");
    }

    let orb = orbit(&group, &gv(&[(1, 0), (0, 0)])).unwrap();
    let set = solve_builtin(2);
    assert_eq!(orb, set.as_slice(), "orbit differs from solution set");
}

#[test]
fn c07_pair_fibers_partition_s3() {
    let pairs = pair_candidates_d3();
    assert_eq!(pairs.len(), 11);
    let expected: Vec<(i64, i64)> = {
        let mut v = vec![(0, 0)];
        for (a, b) in [(1, 1), (1, 2), (1, 0), (0, 1), (2, 2)] {
            v.push((a, b));
            v.push((-a, -b));
        }
        v.sort_unstable();
        v
    };
    assert_eq!(pairs, expected);

    for empty in [(2, 2), (-2, -2), (1, 2), (-1, -2)] {
        assert!(
            solutions_for_pair_d3(empty).unwrap().is_empty(),
            "fiber over {empty:?} should be empty"
        );
    }

    let mut union: Vec<GoldenVec> = Vec::new();
    for &pair in &pairs {
        union.extend(solutions_for_pair_d3(pair).unwrap());
    }
    union.sort();
    assert!(
        union.windows(2).all(|w| w[0] != w[1]),
        "fibers are not pairwise disjoint"
    );
    assert_eq!(union, solve_builtin(3).as_slice(), "union differs from the full set");
}

/// Draws a random form with every |a|, |b| ≤ 1 that is positive
/// definite in both embeddings.
fn random_pd_form(rng: &mut StdRng, d: usize) -> QForm {
    loop {
        let mut coeffs = Vec::new();
        for i in 0..d {
            for j in i..d {
                let c = GoldenInt::new(rng.gen_range(-1..=1), rng.gen_range(-1..=1));
                coeffs.push(((i, j), c));
            }
        }
        let f = QForm::new(d, coeffs).unwrap();
        if f.is_positive_definite_both() {
            return f;
        }
    }
}

#[test]
fn c08_oracle_self_consistency_on_random_forms() {
    // built-ins first: the two methods agree
    for d in [2usize, 3] {
        let f = builtin_form(d).unwrap();
        let by_sos = solve_sos(&f, &builtin_sos(d).unwrap()).unwrap();
        let by_oracle = solve_oracle(&f).unwrap();
        assert!(by_sos.same_solutions(&by_oracle), "d = {d}");
    }
    // ten randomized small forms, half arity 2 and half arity 3
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    for n in 0..10 {
        let d = if n % 2 == 0 { 2 } else { 3 };
        let f = random_pd_form(&mut rng, d);
        let set = solve_oracle(&f).unwrap();
        for k in set.iter() {
            assert_eq!(f.evaluate(k).unwrap(), GoldenInt::ONE, "form {f}, member {k}");
            assert!(set.contains(&-k), "form {f}: negation of {k} missing");
        }
    }
}

#[test]
fn c09_ring_axioms_at_ten_thousand_cases() {
    let config = ProptestConfig {
        cases: 10_000,
        ..ProptestConfig::default()
    };
    let small = (-100i64..=100, -100i64..=100).prop_map(|(a, b)| GoldenInt::new(a, b));

    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&(small.clone(), small.clone(), small.clone()), |(x, y, z)| {
            // ring axioms
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!((x + y) + z, x + (y + z));
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!(x + GoldenInt::ZERO, x);
            prop_assert_eq!(x * GoldenInt::ONE, x);
            prop_assert_eq!(x + (-x), GoldenInt::ZERO);
            Ok(())
        })
        .unwrap();

    let mut runner = TestRunner::new(config.clone());
    runner
        .run(&(small.clone(), small.clone()), |(x, y)| {
            // conjugation is a ring homomorphism; the norm is multiplicative
            prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
            prop_assert_eq!((x + y).conj(), x.conj() + y.conj());
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
            Ok(())
        })
        .unwrap();

    let mut runner = TestRunner::new(config);
    runner
        .run(&small, |x| {
            // exact sign against the floating evaluation
            let approx = x.a() as f64 + x.b() as f64 * 1.618033988749895;
            if approx.abs() > 1e-6 {
                prop_assert_eq!(x.signum(), approx.signum() as i64);
            }
            if !x.is_zero() {
                prop_assert_eq!(x.signum() * (-x).signum(), -1);
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn c10_solve_dim4_output_is_deterministic() {
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_tauring"))
            .args(["solve", "--dim", "4", "--stable-output"])
            .output()
            .expect("binary runs")
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "reruns differ");
    assert!(!first.stdout.is_empty());
}
