//! Complete solution sets of f(k) = 1 by two independent methods.
//!
//! [`solve_sos`] runs a backtracking search whose variable bounds come
//! from a verified sum-of-squares decomposition of the rational
//! component equation. [`solve_oracle`] independently scans an integer
//! box derived from the two real embeddings of the form. The two share
//! no enumeration code; set equality of their outputs is the
//! correctness certificate.

mod oracle;
mod sos_search;

pub use oracle::{oracle_bounds, solve_oracle, solve_oracle_with, OracleConfig};
pub use sos_search::{pair_candidates_d3, solutions_for_pair_d3, solve_sos};

use crate::error::{Error, Result};
use crate::forms::QForm;
use crate::golden_ring::{GoldenInt, GoldenVec};

/// The complete, canonically ordered solution set of f(k) = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    form: QForm,
    solutions: Vec<GoldenVec>,
}

impl SolutionSet {
    /// Sorts, then re-checks every invariant: members solve f(k) = 1
    /// exactly in Z[τ], there are no duplicates, and the set is
    /// centrally symmetric.
    pub fn new(form: QForm, mut solutions: Vec<GoldenVec>) -> Result<Self> {
        solutions.sort();
        for pair in solutions.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidForm(format!(
                    "duplicate solution {}",
                    pair[0]
                )));
            }
        }
        for k in &solutions {
            if form.evaluate(k)? != GoldenInt::ONE {
                return Err(Error::InvalidForm(format!(
                    "claimed solution {k} does not satisfy f(k) = 1"
                )));
            }
            if solutions.binary_search(&-k).is_err() {
                return Err(Error::InvalidForm(format!(
                    "solution set is not centrally symmetric at {k}"
                )));
            }
        }
        Ok(SolutionSet { form, solutions })
    }

    pub fn form(&self) -> &QForm {
        &self.form
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GoldenVec> {
        self.solutions.iter()
    }

    pub fn as_slice(&self) -> &[GoldenVec] {
        &self.solutions
    }

    pub fn contains(&self, k: &GoldenVec) -> bool {
        self.solutions.binary_search(k).is_ok()
    }

    /// Set equality; both sides are canonically ordered, so this is a
    /// plain slice comparison.
    pub fn same_solutions(&self, other: &SolutionSet) -> bool {
        self.solutions == other.solutions
    }
}

/// Per-variable inclusive integer ranges for (a₁..a_d, b₁..b_d) that
/// provably contain the coordinates of every solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundBox {
    ranges: Vec<(i64, i64)>,
}

impl BoundBox {
    pub(crate) fn new(ranges: Vec<(i64, i64)>) -> Self {
        debug_assert!(ranges.iter().all(|&(lo, hi)| lo <= hi));
        BoundBox { ranges }
    }

    /// Ranges in the variable order (a₁..a_d, b₁..b_d).
    pub fn ranges(&self) -> &[(i64, i64)] {
        &self.ranges
    }

    pub fn contains_flat(&self, v: &[i64]) -> bool {
        v.len() == self.ranges.len()
            && v.iter()
                .zip(&self.ranges)
                .all(|(x, &(lo, hi))| lo <= *x && *x <= hi)
    }

    pub fn contains(&self, k: &GoldenVec) -> bool {
        self.contains_flat(&k.flatten())
    }

    /// Number of integer points, saturating at u128 scale.
    pub fn volume(&self) -> u128 {
        self.ranges
            .iter()
            .map(|&(lo, hi)| (hi - lo + 1) as u128)
            .product()
    }
}
