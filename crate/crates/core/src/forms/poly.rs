//! Exact multivariate polynomials with integer coefficients.
//!
//! Variables follow one convention everywhere: for a form of arity d the
//! 2d variables are (a₁, …, a_d, b₁, …, b_d), indexed 0..2d. Terms are
//! kept in a sorted map keyed by dense exponent vectors, so equality is
//! coefficient-exact and canonical.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

const OVERFLOW: &str = "IntPoly arithmetic overflowed i64";

/// Display name for variable `idx` out of `nvars`. When `nvars` is even
/// the first half is a1..ad and the second b1..bd; otherwise x0, x1, ….
pub(crate) fn var_name(nvars: usize, idx: usize) -> String {
    if nvars % 2 == 0 {
        let d = nvars / 2;
        if idx < d {
            format!("a{}", idx + 1)
        } else {
            format!("b{}", idx - d + 1)
        }
    } else {
        format!("x{idx}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, i64>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = IntPoly::zero(nvars);
        if c != 0 {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The monomial consisting of variable `idx` alone.
    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars, "variable index out of range");
        let mut exps = vec![0u8; nvars];
        exps[idx] = 1;
        let mut p = IntPoly::zero(nvars);
        p.terms.insert(exps, 1);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    fn insert(&mut self, exps: Vec<u8>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut o) => {
                let v = o.get().checked_add(coeff).expect(OVERFLOW);
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(vac) => {
                vac.insert(coeff);
            }
        }
    }

    /// Exact evaluation at the integer point `v`.
    pub fn eval(&self, v: &[i64]) -> Result<i64> {
        if v.len() != self.nvars {
            return Err(Error::LengthMismatch {
                left: self.nvars,
                right: v.len(),
            });
        }
        let mut acc = 0i64;
        for (exps, coeff) in &self.terms {
            let mut term = *coeff;
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.checked_mul(v[i]).expect(OVERFLOW);
                }
            }
            acc = acc.checked_add(term).expect(OVERFLOW);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: i64) -> IntPoly {
        let mut out = IntPoly::zero(self.nvars);
        for (exps, coeff) in &self.terms {
            out.insert(exps.clone(), coeff.checked_mul(c).expect(OVERFLOW));
        }
        out
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self;
        for (exps, coeff) in rhs.terms {
            out.insert(exps, coeff);
        }
        out
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        self + (-rhs)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(-1)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = IntPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exps: Vec<u8> = e1
                    .iter()
                    .zip(e2)
                    .map(|(&x, &y)| x.checked_add(y).expect("exponent overflow"))
                    .collect();
                out.insert(exps, c1.checked_mul(*c2).expect(OVERFLOW));
            }
        }
        out
    }
}

impl Mul<i64> for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: i64) -> IntPoly {
        self.scale(rhs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.terms.iter().enumerate() {
            let mono: String = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(idx, &e)| {
                    let name = var_name(self.nvars, idx);
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            let sign = if *coeff < 0 {
                " - "
            } else if i == 0 {
                ""
            } else {
                " + "
            };
            let sign = if i == 0 && *coeff < 0 { "-" } else { sign };
            let mag = coeff.unsigned_abs();
            if mono.is_empty() {
                write!(f, "{sign}{mag}")?;
            } else if mag == 1 {
                write!(f, "{sign}{mono}")?;
            } else {
                write!(f, "{sign}{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// A homogeneous integer linear form over the 2d variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinForm {
    coeffs: Vec<i64>,
}

impl LinForm {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinForm { coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn eval(&self, v: &[i64]) -> Result<i64> {
        if v.len() != self.coeffs.len() {
            return Err(Error::LengthMismatch {
                left: self.coeffs.len(),
                right: v.len(),
            });
        }
        let mut acc = 0i64;
        for (c, x) in self.coeffs.iter().zip(v) {
            acc = acc
                .checked_add(c.checked_mul(*x).expect(OVERFLOW))
                .expect(OVERFLOW);
        }
        Ok(acc)
    }

    pub fn to_poly(&self) -> IntPoly {
        let n = self.coeffs.len();
        let mut p = IntPoly::zero(n);
        for (idx, &c) in self.coeffs.iter().enumerate() {
            p = p + IntPoly::var(n, idx).scale(c);
        }
        p
    }
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = var_name(self.coeffs.len(), idx);
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
