//! Golden-file regression test for the arity-4 solution set.
//!
//! The 120-element set is derived, not transcribed from a published
//! list, so it is frozen as a fixture after first derivation. Run with
//! `UPDATE_GOLDEN=1` to regenerate the fixture.

use std::path::PathBuf;

use tauring::forms::{builtin_form, builtin_sos};
use tauring::golden_ring::GoldenVec;
use tauring::solver::solve_sos;

fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join("s4_solutions.json")
}

/// Interleaved coordinates (a₁, b₁, …, a₄, b₄), one row per solution,
/// in canonical order.
fn rows(solutions: &[GoldenVec]) -> Vec<Vec<i64>> {
    solutions
        .iter()
        .map(|k| {
            k.iter()
                .flat_map(|entry| [entry.a(), entry.b()])
                .collect()
        })
        .collect()
}

#[test]
fn s4_matches_frozen_fixture() {
    let set = solve_sos(&builtin_form(4).unwrap(), &builtin_sos(4).unwrap()).unwrap();
    let derived = rows(set.as_slice());
    assert_eq!(derived.len(), 120);

    let path = fixture_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, serde_json::to_string_pretty(&derived).unwrap()).unwrap();
        return;
    }

    let frozen: Vec<Vec<i64>> = serde_json::from_str(
        &std::fs::read_to_string(&path)
            .expect("fixture missing; regenerate with UPDATE_GOLDEN=1"),
    )
    .unwrap();
    assert_eq!(derived, frozen, "derived arity-4 set drifted from the fixture");
}
