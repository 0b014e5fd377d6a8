//! Independent box oracle based on the two real embeddings of Z[τ].
//!
//! A solution k of f(k) = 1 embeds to a real point x (τ ↦ (1+√5)/2) on
//! the ellipsoid of the embedded form, and to a second point x'
//! (τ ↦ (1−√5)/2) on the ellipsoid of the conjugate form. Each
//! coordinate of an ellipsoid {x : xᵀQx = 1} satisfies
//! x_j² ≤ (Q⁻¹)_jj, so both |x_j| and |x'_j| have exact per-coordinate
//! radii. From b_j = (x_j − x'_j)/√5 and a_j = x_j − b_j·τ these turn
//! into finite integer ranges for every a_j, b_j. All comparisons are
//! done with exact Z[τ] signs; every rounding is outward.

use crate::error::{Error, Result};
use crate::forms::{det, principal_minor, split_components, QForm};
use crate::golden_ring::{GoldenInt, GoldenVec};
use crate::solver::{BoundBox, SolutionSet};

#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Abort if the scan would visit more points than this.
    pub max_points: u64,
    /// Number of worker threads; results are identical for any value.
    pub jobs: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_points: 1_000_000_000,
            jobs: 1,
        }
    }
}

/// Squared per-coordinate radius r_j² = (Q⁻¹)_jj = 2·adj(G)_jj / det(G)
/// of the ellipsoid {x : f(x) = 1}, as an exact ratio of Z[τ] values
/// with positive denominator.
fn squared_radii(f: &QForm) -> Vec<(GoldenInt, GoldenInt)> {
    let g = f.doubled_gram();
    let den = det(&g);
    debug_assert!(den.signum() > 0, "positive definite determinant");
    (0..f.arity())
        .map(|j| (principal_minor(&g, j) * 2, den))
        .collect()
}

/// Smallest integer n ≥ 0 with n² ≥ num/den (den > 0).
fn ceil_sqrt_ratio(num: GoldenInt, den: GoldenInt) -> i64 {
    assert!(den.signum() > 0);
    let mut n = 0i64;
    while (GoldenInt::from(n * n) * den - num).signum() < 0 {
        n += 1;
        assert!(n < 1_000_000, "radius ceiling runaway");
    }
    n
}

/// Smallest integer c ≥ 0 with c ≥ τ·m (m ≥ 0).
fn ceil_tau_times(m: i64) -> i64 {
    let mut c = m;
    while GoldenInt::new(c, -m).signum() < 0 {
        c += 1;
    }
    c
}

/// Integer ceiling radii of both embeddings, per coordinate.
fn integer_radii(f: &QForm) -> Result<(Vec<i64>, Vec<i64>)> {
    if !f.is_positive_definite_both() {
        return Err(Error::NotPositiveDefinite);
    }
    let id: Vec<i64> = squared_radii(f)
        .into_iter()
        .map(|(num, den)| ceil_sqrt_ratio(num, den))
        .collect();
    let conj: Vec<i64> = squared_radii(&f.conjugate())
        .into_iter()
        .map(|(num, den)| ceil_sqrt_ratio(num, den))
        .collect();
    Ok((id, conj))
}

/// A proven bounding box for all solutions of f(k) = 1:
/// |b_j| ≤ ⌈(r_j + r'_j)/√5⌉ and |a_j| ≤ ⌈r_j⌉ + ⌈τ·b_max⌉.
pub fn oracle_bounds(f: &QForm) -> Result<BoundBox> {
    let (id, conj) = integer_radii(f)?;
    let d = f.arity();
    let mut ranges = vec![(0i64, 0i64); 2 * d];
    for j in 0..d {
        let s = id[j] + conj[j];
        // smallest m with m√5 ≥ r + r', via 5m² ≥ (r + r')²
        let mut b_max = 0i64;
        while 5 * b_max * b_max < s * s {
            b_max += 1;
        }
        let a_max = id[j] + ceil_tau_times(b_max);
        ranges[j] = (-a_max, a_max);
        ranges[d + j] = (-b_max, b_max);
    }
    Ok(BoundBox::new(ranges))
}

/// Coordinate values (a, b) inside the box whose embeddings both lie
/// within the exact per-coordinate radii. Every solution's j-th
/// coordinate is among these.
fn admissible_coordinate_values(
    f: &QForm,
    bounds: &BoundBox,
) -> Result<Vec<Vec<(i64, i64)>>> {
    let d = f.arity();
    let sq_id = squared_radii(f);
    let sq_conj = squared_radii(&f.conjugate());
    let ranges = bounds.ranges();
    let mut lists = Vec::with_capacity(d);
    for j in 0..d {
        let (a_lo, a_hi) = ranges[j];
        let (b_lo, b_hi) = ranges[d + j];
        let (num, den) = sq_id[j];
        let (num_c, den_c) = sq_conj[j];
        let mut list = Vec::new();
        for a in a_lo..=a_hi {
            for b in b_lo..=b_hi {
                let x = GoldenInt::new(a, b);
                let ok_id = (num - den * (x * x)).signum() >= 0;
                let xc = x.conj();
                let ok_conj = (num_c - den_c * (xc * xc)).signum() >= 0;
                if ok_id && ok_conj {
                    list.push((a, b));
                }
            }
        }
        lists.push(list);
    }
    Ok(lists)
}

pub fn solve_oracle(f: &QForm) -> Result<SolutionSet> {
    solve_oracle_with(f, &OracleConfig::default())
}

/// Exhaustively scans the admissible coordinate values from
/// [`oracle_bounds`], keeping the points with A(v) = 1 and B(v) = 0.
/// Shares no enumeration code with the sum-of-squares search.
pub fn solve_oracle_with(f: &QForm, cfg: &OracleConfig) -> Result<SolutionSet> {
    let bounds = oracle_bounds(f)?;
    let lists = admissible_coordinate_values(f, &bounds)?;
    let points: u128 = lists.iter().map(|l| l.len() as u128).product();
    if points > cfg.max_points as u128 {
        return Err(Error::EnumerationCapExceeded {
            required: points,
            cap: cfg.max_points,
        });
    }
    let jobs = cfg.jobs.max(1);
    let mut found = if jobs == 1 || lists[0].len() < 2 {
        scan(&lists, f)?
    } else {
        let chunk = lists[0].len().div_ceil(jobs);
        let chunks: Vec<&[(i64, i64)]> = lists[0].chunks(chunk).collect();
        let results: Vec<Result<Vec<GoldenVec>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|first| {
                    let lists = &lists;
                    scope.spawn(move || {
                        let mut sub: Vec<Vec<(i64, i64)>> = lists.to_vec();
                        sub[0] = first.to_vec();
                        scan(&sub, f)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut merged = Vec::new();
        for r in results {
            merged.extend(r?);
        }
        merged
    };
    found.sort();
    SolutionSet::new(f.clone(), found)
}

/// Odometer scan over the cartesian product of per-coordinate values.
fn scan(lists: &[Vec<(i64, i64)>], f: &QForm) -> Result<Vec<GoldenVec>> {
    let d = lists.len();
    let components = split_components(f);
    let mut found = Vec::new();
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(found);
    }
    let mut idx = vec![0usize; d];
    let mut v = vec![0i64; 2 * d];
    'outer: loop {
        for j in 0..d {
            let (a, b) = lists[j][idx[j]];
            v[j] = a;
            v[d + j] = b;
        }
        if components.a.eval(&v)? == 1 && components.b.eval(&v)? == 0 {
            found.push(GoldenVec::from_flat(d, &v)?);
        }
        // advance odometer
        let mut j = d;
        loop {
            if j == 0 {
                break 'outer;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < lists[j].len() {
                break;
            }
            idx[j] = 0;
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::builtin_form;

    #[test]
    fn bounds_contain_known_solutions_d2() {
        let f = builtin_form(2).unwrap();
        let bx = oracle_bounds(&f).unwrap();
        assert!(bx.contains(&GoldenVec::zero(2)));
        for pair in [
            [(1, 0), (0, 0)],
            [(0, 0), (1, 0)],
            [(0, 1), (1, 0)],
            [(1, 0), (0, 1)],
            [(0, 1), (0, 1)],
        ] {
            let k = GoldenVec::from_pairs(&pair);
            assert!(bx.contains(&k), "box misses {k}");
            assert!(bx.contains(&-&k), "box misses {}", -&k);
        }
        // all b_j ranges cover {-1, 0, 1} and all a_j ranges cover [-4, 4]
        let d = 2;
        for j in 0..d {
            let (a_lo, a_hi) = bx.ranges()[j];
            assert!(a_lo <= -4 && a_hi >= 4);
            let (b_lo, b_hi) = bx.ranges()[d + j];
            assert!(b_lo <= -1 && b_hi >= 1);
        }
    }

    #[test]
    fn bounds_cover_candidate_pair_region_d3() {
        let bx = oracle_bounds(&builtin_form(3).unwrap()).unwrap();
        // a2 is variable 1, b3 is variable 5
        let (a_lo, a_hi) = bx.ranges()[1];
        let (b_lo, b_hi) = bx.ranges()[5];
        assert!(a_lo <= -2 && a_hi >= 2);
        assert!(b_lo <= -2 && b_hi >= 2);
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(solve_oracle(&builtin_form(2).unwrap()).unwrap().len(), 10);
        assert_eq!(solve_oracle(&builtin_form(3).unwrap()).unwrap().len(), 30);
    }

    #[test]
    fn cap_aborts_early() {
        let cfg = OracleConfig {
            max_points: 3,
            jobs: 1,
        };
        let err = solve_oracle_with(&builtin_form(2).unwrap(), &cfg).unwrap_err();
        assert!(matches!(err, Error::EnumerationCapExceeded { .. }));
    }

    #[test]
    fn rejects_indefinite_form() {
        let f = QForm::new(
            2,
            [((0, 0), GoldenInt::ONE), ((1, 1), -GoldenInt::ONE)],
        )
        .unwrap();
        assert!(matches!(
            solve_oracle(&f),
            Err(Error::NotPositiveDefinite)
        ));
    }

    #[test]
    fn parallel_scan_matches_single_thread() {
        let f = builtin_form(3).unwrap();
        let single = solve_oracle(&f).unwrap();
        let parallel = solve_oracle_with(
            &f,
            &OracleConfig {
                max_points: 1_000_000_000,
                jobs: 4,
            },
        )
        .unwrap();
        assert!(single.same_solutions(&parallel));
    }
}
