//! Invariance checks that tie the symmetry machinery to the solved
//! sets: form-preserving maps permute the solutions, and the reflection
//! at any member maps the whole set onto itself for every built-in
//! arity. The latter is what makes the three sets root systems.

use tauring::forms::{builtin_form, builtin_sos};
use tauring::golden_ring::GoldenVec;
use tauring::solver::{solve_oracle, solve_sos};
use tauring::symmetry::{preserves_form, reflection, solution_symmetry_group};

#[test]
fn group_elements_permute_the_solution_set() {
    let f = builtin_form(2).unwrap();
    let set = solve_oracle(&f).unwrap();
    for g in solution_symmetry_group().elements() {
        assert!(preserves_form(g, &f).unwrap());
        let mut mapped: Vec<GoldenVec> =
            set.iter().map(|k| g.apply(k).unwrap()).collect();
        mapped.sort();
        assert_eq!(mapped, set.as_slice(), "{g} does not permute the set");
    }
}

#[test]
fn root_reflections_close_over_every_builtin_set() {
    for d in [2usize, 3, 4] {
        let f = builtin_form(d).unwrap();
        let set = solve_sos(&f, &builtin_sos(d).unwrap()).unwrap();
        for alpha in set.iter() {
            let r = reflection(alpha, &f).unwrap();
            assert!(r.compose(&r).unwrap().is_identity());
            assert_eq!(r.apply(alpha).unwrap(), -alpha);
            let mut mapped: Vec<GoldenVec> =
                set.iter().map(|k| r.apply(k).unwrap()).collect();
            mapped.sort();
            assert_eq!(
                mapped,
                set.as_slice(),
                "reflection at {alpha} does not map the arity-{d} set onto itself"
            );
        }
    }
}
