//! Exact linear transformations of Z[τ]^d, finite matrix groups, orbits,
//! and form-preserving reflections.

use std::fmt;

use crate::error::{Error, Result};
use crate::forms::{split_components, QForm};
use crate::golden_ring::{GoldenInt, GoldenVec};

/// A linear map of Z[τ]^d, stored row-major and acting on column
/// vectors. Equality and ordering are entrywise, which makes the
/// canonical serialization used for group deduplication.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoldenMap {
    d: usize,
    entries: Vec<GoldenInt>,
}

impl GoldenMap {
    pub fn from_rows(rows: Vec<Vec<GoldenInt>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 || rows.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidForm("matrix must be square".into()));
        }
        Ok(GoldenMap {
            d,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(d: usize) -> Self {
        let mut m = GoldenMap {
            d,
            entries: vec![GoldenInt::ZERO; d * d],
        };
        for i in 0..d {
            m.entries[i * d + i] = GoldenInt::ONE;
        }
        m
    }

    pub fn arity(&self) -> usize {
        self.d
    }

    pub fn entry(&self, row: usize, col: usize) -> GoldenInt {
        self.entries[row * self.d + col]
    }

    pub fn is_identity(&self) -> bool {
        *self == GoldenMap::identity(self.d)
    }

    /// Matrix product; `self.compose(h)` applies `h` first, then `self`.
    pub fn compose(&self, h: &GoldenMap) -> Result<GoldenMap> {
        if self.d != h.d {
            return Err(Error::ArityMismatch {
                expected: self.d,
                got: h.d,
            });
        }
        let d = self.d;
        let mut entries = vec![GoldenInt::ZERO; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = GoldenInt::ZERO;
                for l in 0..d {
                    acc = acc + self.entry(i, l) * h.entry(l, j);
                }
                entries[i * d + j] = acc;
            }
        }
        Ok(GoldenMap { d, entries })
    }

    pub fn apply(&self, k: &GoldenVec) -> Result<GoldenVec> {
        if k.len() != self.d {
            return Err(Error::ArityMismatch {
                expected: self.d,
                got: k.len(),
            });
        }
        let out = (0..self.d)
            .map(|i| {
                (0..self.d).fold(GoldenInt::ZERO, |acc, j| acc + self.entry(i, j) * k[j])
            })
            .collect();
        Ok(GoldenVec::new(out))
    }

    pub fn pow(&self, n: u32) -> GoldenMap {
        let mut acc = GoldenMap::identity(self.d);
        for _ in 0..n {
            acc = acc.compose(self).expect("same arity");
        }
        acc
    }

    pub fn transpose(&self) -> GoldenMap {
        let d = self.d;
        let mut entries = vec![GoldenInt::ZERO; d * d];
        for i in 0..d {
            for j in 0..d {
                entries[j * d + i] = self.entry(i, j);
            }
        }
        GoldenMap { d, entries }
    }
}

impl fmt::Display for GoldenMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.d {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.d {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// The coordinate swap (k₁, k₂) ↦ (k₂, k₁), one of the two generators
/// of the symmetry group of the arity-2 solution set.
pub fn coordinate_swap() -> GoldenMap {
    GoldenMap::from_rows(vec![
        vec![GoldenInt::ZERO, GoldenInt::ONE],
        vec![GoldenInt::ONE, GoldenInt::ZERO],
    ])
    .expect("square")
}

/// The reflection (k₁, k₂) ↦ (τk₂ − k₁, k₂), the other generator.
pub fn tau_reflection() -> GoldenMap {
    GoldenMap::from_rows(vec![
        vec![-GoldenInt::ONE, GoldenInt::TAU],
        vec![GoldenInt::ZERO, GoldenInt::ONE],
    ])
    .expect("square")
}

/// A finite matrix group over Z[τ]: closed under composition and
/// inverse, containing the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Vec<GoldenMap>,
    generators: Vec<GoldenMap>,
}

pub const DEFAULT_GROUP_CAP: usize = 10_000;

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in canonical (entrywise) order.
    pub fn elements(&self) -> &[GoldenMap] {
        &self.elements
    }

    pub fn generators(&self) -> &[GoldenMap] {
        &self.generators
    }

    pub fn contains(&self, g: &GoldenMap) -> bool {
        self.elements.binary_search(g).is_ok()
    }
}

/// Breadth-first closure of the generators under composition. Every
/// generated element of a finite group has finite order, so inverses
/// appear automatically. Aborts above `cap` elements.
pub fn generate_with_cap(generators: &[GoldenMap], cap: usize) -> Result<FiniteGroup> {
    let d = match generators.first() {
        Some(g) => g.arity(),
        None => return Err(Error::InvalidForm("no generators".into())),
    };
    if generators.iter().any(|g| g.arity() != d) {
        return Err(Error::ArityMismatch {
            expected: d,
            got: generators.iter().map(|g| g.arity()).find(|&a| a != d).unwrap(),
        });
    }
    let mut elements = std::collections::BTreeSet::new();
    elements.insert(GoldenMap::identity(d));
    let mut frontier: Vec<GoldenMap> = vec![GoldenMap::identity(d)];
    while let Some(g) = frontier.pop() {
        for gen in generators {
            let next = g.compose(gen)?;
            if elements.insert(next.clone()) {
                if elements.len() > cap {
                    return Err(Error::GroupCapExceeded { cap });
                }
                frontier.push(next);
            }
        }
    }
    Ok(FiniteGroup {
        elements: elements.into_iter().collect(),
        generators: generators.to_vec(),
    })
}

pub fn generate(generators: &[GoldenMap]) -> Result<FiniteGroup> {
    generate_with_cap(generators, DEFAULT_GROUP_CAP)
}

/// The group generated by [`coordinate_swap`] and [`tau_reflection`];
/// it has 20 elements and preserves the built-in arity-2 form.
pub fn solution_symmetry_group() -> FiniteGroup {
    generate(&[coordinate_swap(), tau_reflection()]).expect("closes at 20 elements")
}

/// The orbit {g(seed) : g ∈ G} in canonical order.
pub fn orbit(group: &FiniteGroup, seed: &GoldenVec) -> Result<Vec<GoldenVec>> {
    let mut out = std::collections::BTreeSet::new();
    for g in group.elements() {
        out.insert(g.apply(seed)?);
    }
    Ok(out.into_iter().collect())
}

/// The form x ↦ f(g·x), with coefficients still in Z[τ]: its doubled
/// Gram matrix is gᵀ·G·g.
pub fn pullback(f: &QForm, g: &GoldenMap) -> Result<QForm> {
    if f.arity() != g.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            got: g.arity(),
        });
    }
    let d = f.arity();
    let gram = f.doubled_gram();
    let gram_map = GoldenMap {
        d,
        entries: gram.into_iter().flatten().collect(),
    };
    let pulled = g.transpose().compose(&gram_map)?.compose(g)?;
    let rows: Vec<Vec<GoldenInt>> = (0..d)
        .map(|i| (0..d).map(|j| pulled.entry(i, j)).collect())
        .collect();
    QForm::from_doubled_gram(&rows)
}

/// True iff f(g·k) = f(k) as a polynomial identity, checked by
/// splitting both forms into their integer components and comparing
/// coefficient-exactly.
pub fn preserves_form(g: &GoldenMap, f: &QForm) -> Result<bool> {
    let pulled = pullback(f, g)?;
    Ok(split_components(&pulled) == split_components(f))
}

/// Polar form B(x, y) = f(x+y) − f(x) − f(y); B(α, α) = 2f(α), so the
/// reflection formula below needs no division.
pub fn polar_form(f: &QForm, x: &GoldenVec, y: &GoldenVec) -> Result<GoldenInt> {
    let sum = GoldenVec::new(
        x.iter()
            .zip(y.iter())
            .map(|(&p, &q)| p + q)
            .collect(),
    );
    Ok(f.evaluate(&sum)? - f.evaluate(x)? - f.evaluate(y)?)
}

/// The reflection r_α(x) = x − B(x, α)·α for a root with f(α) = 1.
/// It preserves f and is an involution.
pub fn reflection(alpha: &GoldenVec, f: &QForm) -> Result<GoldenMap> {
    let value = f.evaluate(alpha)?;
    if value != GoldenInt::ONE {
        return Err(Error::ReflectionRootNotUnit {
            got: value.to_string(),
        });
    }
    let d = f.arity();
    let mut rows = vec![vec![GoldenInt::ZERO; d]; d];
    for i in 0..d {
        let mut basis = vec![GoldenInt::ZERO; d];
        basis[i] = GoldenInt::ONE;
        let e_i = GoldenVec::new(basis);
        let coeff = polar_form(f, &e_i, alpha)?;
        // column i of the matrix is e_i − B(e_i, α)·α
        for (row, rv) in rows.iter_mut().enumerate() {
            let id_part = if row == i { GoldenInt::ONE } else { GoldenInt::ZERO };
            rv[i] = id_part - coeff * alpha[row];
        }
    }
    GoldenMap::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::builtin_form;

    fn gv(pairs: &[(i64, i64)]) -> GoldenVec {
        GoldenVec::from_pairs(pairs)
    }

    #[test]
    fn generator_actions() {
        let swap = coordinate_swap();
        let refl = tau_reflection();
        assert_eq!(swap.apply(&gv(&[(1, 0), (0, 0)])).unwrap(), gv(&[(0, 0), (1, 0)]));
        assert_eq!(refl.apply(&gv(&[(0, 0), (1, 0)])).unwrap(), gv(&[(0, 1), (1, 0)]));
        assert_eq!(refl.apply(&gv(&[(1, 0), (0, 0)])).unwrap(), gv(&[(-1, 0), (0, 0)]));
    }

    #[test]
    fn generator_relations() {
        let swap = coordinate_swap();
        let refl = tau_reflection();
        assert!(swap.compose(&swap).unwrap().is_identity());
        assert!(refl.compose(&refl).unwrap().is_identity());
        let rot = swap.compose(&refl).unwrap();
        assert!(rot.pow(10).is_identity());
        assert!(!rot.pow(5).is_identity());
        assert_eq!(
            GoldenMap::identity(2).apply(&gv(&[(0, 1), (0, 1)])).unwrap(),
            gv(&[(0, 1), (0, 1)])
        );
    }

    #[test]
    fn group_orders() {
        assert_eq!(solution_symmetry_group().order(), 20);
        assert_eq!(generate(&[GoldenMap::identity(2)]).unwrap().order(), 1);
        assert_eq!(generate(&[coordinate_swap()]).unwrap().order(), 2);
    }

    #[test]
    fn closure_cap() {
        // (k₁, k₂) ↦ (k₁ + k₂, k₂) generates an infinite group
        let shear = GoldenMap::from_rows(vec![
            vec![GoldenInt::ONE, GoldenInt::ONE],
            vec![GoldenInt::ZERO, GoldenInt::ONE],
        ])
        .unwrap();
        assert!(matches!(
            generate_with_cap(&[shear], 50),
            Err(Error::GroupCapExceeded { cap: 50 })
        ));
    }

    #[test]
    fn orbit_of_unit_solution() {
        let group = solution_symmetry_group();
        let orb = orbit(&group, &gv(&[(1, 0), (0, 0)])).unwrap();
        assert_eq!(orb.len(), 10);
        // same orbit from a different seed
        let orb2 = orbit(&group, &gv(&[(0, 1), (0, 1)])).unwrap();
        assert_eq!(orb, orb2);
        // zero is fixed by linear maps
        assert_eq!(orbit(&group, &GoldenVec::zero(2)).unwrap().len(), 1);
        // swap alone gives a two-element orbit
        let swap_orbit = orbit(
            &generate(&[coordinate_swap()]).unwrap(),
            &gv(&[(1, 0), (0, 0)]),
        )
        .unwrap();
        assert_eq!(swap_orbit.len(), 2);
    }

    #[test]
    fn invariance_checks() {
        let f2 = builtin_form(2).unwrap();
        assert!(preserves_form(&coordinate_swap(), &f2).unwrap());
        assert!(preserves_form(&tau_reflection(), &f2).unwrap());
        // diag(τ, 1) scales the leading coefficient by τ²
        let stretch = GoldenMap::from_rows(vec![
            vec![GoldenInt::TAU, GoldenInt::ZERO],
            vec![GoldenInt::ZERO, GoldenInt::ONE],
        ])
        .unwrap();
        assert!(!preserves_form(&stretch, &f2).unwrap());
        for g in solution_symmetry_group().elements() {
            assert!(preserves_form(g, &f2).unwrap());
        }
    }

    #[test]
    fn reflection_basics() {
        let f2 = builtin_form(2).unwrap();
        let alpha = gv(&[(0, 1), (1, 0)]); // (τ, 1)
        let r = reflection(&alpha, &f2).unwrap();
        assert_eq!(r.apply(&alpha).unwrap(), -&alpha);
        assert!(r.compose(&r).unwrap().is_identity());
        assert!(preserves_form(&r, &f2).unwrap());
        // non-root rejected
        let bad = gv(&[(1, 0), (1, 0)]);
        assert!(matches!(
            reflection(&bad, &f2),
            Err(Error::ReflectionRootNotUnit { .. })
        ));
    }
}
