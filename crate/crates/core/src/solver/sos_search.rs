//! Backtracking enumeration bounded by a sum-of-squares decomposition.
//!
//! With `Σ cᵢ·Lᵢ² − target = multiplier·(A − 1)`, every solution of
//! A = 1 satisfies `Σ cᵢ·Lᵢ² = target`, so each square is individually
//! bounded. Variables are assigned one at a time in an order where the
//! next variable appears in a term whose other variables are already
//! fixed; that term then pins the new variable to a finite interval.
//! The running residual `target − Σ(value of fully assigned terms)`
//! prunes the search. A full assignment is accepted iff A(v) = 1 and
//! B(v) = 0 exactly.

use crate::error::{Error, Result};
use crate::forms::{
    builtin_form, builtin_sos, poly::var_name, split_components, verify_sos, ComponentPair,
    LinForm, QForm, SosDecomposition,
};
use crate::golden_ring::GoldenVec;
use crate::solver::SolutionSet;

#[derive(Debug, Clone)]
enum Step {
    /// Enumerate `var` from `terms[term]`, whose other variables are
    /// already assigned.
    Single { var: usize, term: usize },
    /// Enumerate two variables jointly from an explicit candidate list.
    Pair {
        vars: (usize, usize),
        candidates: Vec<(i64, i64)>,
    },
}

/// All integer pairs (a₂, b₃) with a₂² + 2(b₃ − a₂)² ≤ 4, the
/// two-variable inequality that seeds the arity-3 search. Exactly the
/// eleven pairs ±(1,1), ±(1,2), ±(1,0), ±(0,1), ±(2,2) and (0,0),
/// in lexicographic order.
pub fn pair_candidates_d3() -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a2 in -2i64..=2 {
        for b3 in (a2 - 2)..=(a2 + 2) {
            if a2 * a2 + 2 * (b3 - a2) * (b3 - a2) <= 4 {
                out.push((a2, b3));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Hardcoded assignment orders for the built-in decompositions. The
/// arity-3 search starts from the (a₂, b₃) candidate pairs; every other
/// step is a single variable pinned by one term.
fn builtin_plan(d: usize) -> Option<Vec<Step>> {
    let single = |var, term| Step::Single { var, term };
    match d {
        // (a₁, a₂, b₂, b₁) via a₁², a₂², (a₁−b₂)², (b₁−b₂)²
        2 => Some(vec![single(0, 0), single(1, 1), single(3, 3), single(2, 2)]),
        // (a₂, b₃) jointly, then b₂, b₁, a₁, a₃
        3 => Some(vec![
            Step::Pair {
                vars: (1, 5),
                candidates: pair_candidates_d3(),
            },
            single(4, 3),
            single(3, 1),
            single(0, 0),
            single(2, 2),
        ]),
        // (a₄, b₄, a₂, b₂, b₃, a₃, a₁, b₁)
        4 => Some(vec![
            single(3, 3),
            single(7, 7),
            single(1, 5),
            single(5, 6),
            single(6, 2),
            single(2, 1),
            single(0, 0),
            single(4, 4),
        ]),
        _ => None,
    }
}

/// Greedy order derivation for decompositions without a hardcoded plan:
/// repeatedly pick a term with exactly one unassigned variable.
fn greedy_plan(s: &SosDecomposition) -> Result<Vec<Step>> {
    let n = s.nvars();
    let mut assigned = vec![false; n];
    let mut steps = Vec::new();
    while assigned.iter().any(|&x| !x) {
        let next = s.terms().iter().enumerate().find_map(|(t, (_, l))| {
            let mut open = l
                .coeffs()
                .iter()
                .enumerate()
                .filter(|&(i, &c)| c != 0 && !assigned[i]);
            match (open.next(), open.next()) {
                (Some((var, _)), None) => Some((var, t)),
                _ => None,
            }
        });
        match next {
            Some((var, term)) => {
                assigned[var] = true;
                steps.push(Step::Single { var, term });
            }
            None => {
                let stuck = assigned.iter().position(|&x| !x).unwrap();
                return Err(Error::UnboundedVariable(var_name(n, stuck)));
            }
        }
    }
    Ok(steps)
}

fn plan_for(f: &QForm, s: &SosDecomposition) -> Result<Vec<Step>> {
    for d in [2, 3, 4] {
        if *f == builtin_form(d)? && *s == builtin_sos(d)? {
            return Ok(builtin_plan(d).expect("built-in plan exists"));
        }
    }
    greedy_plan(s)
}

/// For each plan step, the indices of terms that become fully assigned
/// once that step's variables are set.
fn completion_schedule(s: &SosDecomposition, plan: &[Step]) -> Vec<Vec<usize>> {
    let n = s.nvars();
    let mut assigned = vec![false; n];
    let mut done = vec![false; s.terms().len()];
    let mut schedule = Vec::with_capacity(plan.len());
    for step in plan {
        match step {
            Step::Single { var, .. } => assigned[*var] = true,
            Step::Pair { vars, .. } => {
                assigned[vars.0] = true;
                assigned[vars.1] = true;
            }
        }
        let mut completed = Vec::new();
        for (t, (_, l)) in s.terms().iter().enumerate() {
            if done[t] {
                continue;
            }
            let covered = l
                .coeffs()
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || assigned[i]);
            if covered {
                done[t] = true;
                completed.push(t);
            }
        }
        schedule.push(completed);
    }
    debug_assert!(done.iter().all(|&x| x), "all terms complete by the leaf");
    schedule
}

struct Search<'a> {
    terms: &'a [(i64, LinForm)],
    components: &'a ComponentPair,
    plan: &'a [Step],
    schedule: &'a [Vec<usize>],
    d: usize,
    values: Vec<i64>,
    found: Vec<GoldenVec>,
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && (a < 0) != (b < 0) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && (a < 0) == (b < 0) {
        q + 1
    } else {
        q
    }
}

impl Search<'_> {
    /// Residual budget after charging the terms completed at this step;
    /// `None` means the budget went negative and the branch is pruned.
    fn charge(&self, step_idx: usize, budget: i64) -> Result<Option<i64>> {
        let mut budget = budget as i128;
        for &t in &self.schedule[step_idx] {
            let (c, l) = &self.terms[t];
            let val = l.eval(&self.values)? as i128;
            budget -= *c as i128 * val * val;
            if budget < 0 {
                return Ok(None);
            }
        }
        Ok(Some(budget as i64))
    }

    fn run(&mut self, step_idx: usize, budget: i64) -> Result<()> {
        if step_idx == self.plan.len() {
            let a = self.components.a.eval(&self.values)?;
            let b = self.components.b.eval(&self.values)?;
            debug_assert_eq!(a == 1, budget == 0, "residual must vanish exactly at A = 1");
            if a == 1 && b == 0 {
                self.found.push(GoldenVec::from_flat(self.d, &self.values)?);
            }
            return Ok(());
        }
        match &self.plan[step_idx] {
            Step::Single { var, term } => {
                let (c, l) = &self.terms[*term];
                let alpha = l.coeffs()[*var];
                debug_assert_ne!(alpha, 0, "bounding term must mention the variable");
                let shift: i64 = l
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|&(i, &co)| i != *var && co != 0)
                    .map(|(i, &co)| {
                        co.checked_mul(self.values[i])
                            .expect("linear form evaluation overflowed i64")
                    })
                    .fold(0i64, |acc, x| {
                        acc.checked_add(x)
                            .expect("linear form evaluation overflowed i64")
                    });
                // c·(α·x + shift)² ≤ budget
                let t = ((budget / c) as u64).isqrt() as i64;
                let (lo, hi) = if alpha > 0 {
                    (div_ceil(-t - shift, alpha), div_floor(t - shift, alpha))
                } else {
                    (div_ceil(t - shift, alpha), div_floor(-t - shift, alpha))
                };
                let var = *var;
                for x in lo..=hi {
                    self.values[var] = x;
                    if let Some(rest) = self.charge(step_idx, budget)? {
                        self.run(step_idx + 1, rest)?;
                    }
                }
            }
            Step::Pair { vars, candidates } => {
                let (va, vb) = *vars;
                for &(x, y) in candidates {
                    self.values[va] = x;
                    self.values[vb] = y;
                    if let Some(rest) = self.charge(step_idx, budget)? {
                        self.run(step_idx + 1, rest)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn run_plan(
    f: &QForm,
    s: &SosDecomposition,
    plan: &[Step],
    components: &ComponentPair,
) -> Result<Vec<GoldenVec>> {
    let schedule = completion_schedule(s, plan);
    let mut search = Search {
        terms: s.terms(),
        components,
        plan,
        schedule: &schedule,
        d: f.arity(),
        values: vec![0; s.nvars()],
        found: Vec::new(),
    };
    search.run(0, s.target())?;
    let mut found = search.found;
    found.sort();
    Ok(found)
}

/// Complete solution set of f(k) = 1 via backtracking bounded by `s`.
/// Precondition: `verify_sos(s, split_components(f))` holds.
pub fn solve_sos(f: &QForm, s: &SosDecomposition) -> Result<SolutionSet> {
    let components = split_components(f);
    if !verify_sos(s, &components) {
        return Err(Error::InvalidDecomposition);
    }
    let plan = plan_for(f, s)?;
    let found = run_plan(f, s, &plan, &components)?;
    SolutionSet::new(f.clone(), found)
}

/// The members of the arity-3 solution set whose (a₂, b₃) coordinates
/// equal `pair`, computed by the restricted backtracking search. The
/// fibers over all candidate pairs partition the full set.
pub fn solutions_for_pair_d3(pair: (i64, i64)) -> Result<Vec<GoldenVec>> {
    if !pair_candidates_d3().contains(&pair) {
        return Err(Error::InvalidPair {
            a2: pair.0,
            b3: pair.1,
        });
    }
    let f = builtin_form(3)?;
    let s = builtin_sos(3)?;
    let components = split_components(&f);
    let mut plan = builtin_plan(3).expect("built-in plan exists");
    plan[0] = Step::Pair {
        vars: (1, 5),
        candidates: vec![pair],
    };
    run_plan(&f, &s, &plan, &components)
}
