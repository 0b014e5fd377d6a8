//! Quadratic forms over Z[τ] and the splitting machinery that turns one
//! ring equation f(k) = 1 into a pair of integer component equations.
//!
//! Substituting k_j = a_j + τ·b_j into f and reducing by τ² = τ + 1
//! yields f = A + Bτ for two integer polynomials A, B in the variables
//! (a₁..a_d, b₁..b_d); solving f(k) = 1 over Z[τ] is equivalent to
//! solving A = 1, B = 0 over Z.

pub(crate) mod poly;
mod qform;
mod sos;

pub use poly::{IntPoly, LinForm};
pub use qform::QForm;
pub use sos::{builtin_sos, verify_sos, SosDecomposition};

pub(crate) use qform::{det, principal_minor};

use crate::error::{Error, Result};
use crate::golden_ring::GoldenInt;

/// The rational part A and τ-coefficient B of a split form, as exact
/// integer polynomials over (a₁..a_d, b₁..b_d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPair {
    /// Rational part; f(k) = 1 forces A = 1.
    pub a: IntPoly,
    /// τ-coefficient; f(k) = 1 forces B = 0.
    pub b: IntPoly,
}

/// A polynomial with Z[τ] coefficients, carried as a rational part and a
/// τ part so that products reduce by τ² = τ + 1 exactly like `GoldenInt`.
#[derive(Debug, Clone)]
struct GoldenPoly {
    a: IntPoly,
    b: IntPoly,
}

impl GoldenPoly {
    fn zero(nvars: usize) -> Self {
        GoldenPoly {
            a: IntPoly::zero(nvars),
            b: IntPoly::zero(nvars),
        }
    }

    fn add(self, rhs: GoldenPoly) -> GoldenPoly {
        GoldenPoly {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }

    fn mul(&self, rhs: &GoldenPoly) -> GoldenPoly {
        GoldenPoly {
            a: &self.a * &rhs.a + &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a + &self.b * &rhs.b,
        }
    }

    fn scale(&self, c: GoldenInt) -> GoldenPoly {
        let (ca, cb) = c.parts();
        GoldenPoly {
            a: self.a.scale(ca) + self.b.scale(cb),
            b: self.a.scale(cb) + self.b.scale(ca) + self.b.scale(cb),
        }
    }
}

/// The three built-in forms: all diagonal coefficients 1, off-diagonals
/// c₁₂ = −τ (d=2); c₁₂ = −1, c₂₃ = −τ (d=3); c₁₂ = c₂₃ = −1, c₃₄ = −τ
/// (d=4).
pub fn builtin_form(d: usize) -> Result<QForm> {
    let neg_one = -GoldenInt::ONE;
    let neg_tau = -GoldenInt::TAU;
    let off: Vec<((usize, usize), GoldenInt)> = match d {
        2 => vec![((0, 1), neg_tau)],
        3 => vec![((0, 1), neg_one), ((1, 2), neg_tau)],
        4 => vec![((0, 1), neg_one), ((1, 2), neg_one), ((2, 3), neg_tau)],
        _ => return Err(Error::UnsupportedDimension(d)),
    };
    let diag = (0..d).map(|i| ((i, i), GoldenInt::ONE));
    QForm::new(d, diag.chain(off))
}

/// Substitutes k_j = a_j + τ·b_j symbolically and collects the τ-free
/// part into A and the τ-coefficient into B.
pub fn split_components(f: &QForm) -> ComponentPair {
    let d = f.arity();
    let n = 2 * d;
    // k_j as a golden polynomial: rational part a_j, τ part b_j
    let k: Vec<GoldenPoly> = (0..d)
        .map(|j| GoldenPoly {
            a: IntPoly::var(n, j),
            b: IntPoly::var(n, d + j),
        })
        .collect();
    let mut acc = GoldenPoly::zero(n);
    for ((i, j), c) in f.coeffs() {
        acc = acc.add(k[i].mul(&k[j]).scale(c));
    }
    ComponentPair { a: acc.a, b: acc.b }
}

/// Hand-expanded component pairs for the built-in forms, written out
/// term by term as an independent cross-check of [`split_components`].
pub fn reference_components(d: usize) -> Result<ComponentPair> {
    let n = 2 * d;
    let v = |i: usize| IntPoly::var(n, i);
    match d {
        2 => {
            let (a1, a2, b1, b2) = (v(0), v(1), v(2), v(3));
            let a = &a1 * &a1 + &a2 * &a2 + &b1 * &b1 + &b2 * &b2
                - &b1 * &b2
                - &a1 * &b2
                - &a2 * &b1;
            let b = &b1 * &b1 + &b2 * &b2 + (&a1 * &b1 + &a2 * &b2).scale(2)
                - (&b1 * &b2).scale(2)
                - &a1 * &a2
                - &a1 * &b2
                - &a2 * &b1;
            Ok(ComponentPair { a, b })
        }
        3 => {
            let (a1, a2, a3) = (v(0), v(1), v(2));
            let (b1, b2, b3) = (v(3), v(4), v(5));
            let a = &a1 * &a1 + &a2 * &a2 + &a3 * &a3
                + &b1 * &b1 + &b2 * &b2 + &b3 * &b3
                - &a1 * &a2
                - &b1 * &b2
                - &a2 * &b3
                - &a3 * &b2
                - &b2 * &b3;
            let b = &b1 * &b1 + &b2 * &b2 + &b3 * &b3
                + (&a1 * &b1 + &a2 * &b2 + &a3 * &b3 - &b2 * &b3).scale(2)
                - &a1 * &b2
                - &a2 * &b1
                - &b1 * &b2
                - &a2 * &a3
                - &a2 * &b3
                - &a3 * &b2;
            Ok(ComponentPair { a, b })
        }
        4 => {
            let (a1, a2, a3, a4) = (v(0), v(1), v(2), v(3));
            let (b1, b2, b3, b4) = (v(4), v(5), v(6), v(7));
            let a = &a1 * &a1 + &b1 * &b1 + &a2 * &a2 + &b2 * &b2
                + &a3 * &a3 + &b3 * &b3 + &a4 * &a4 + &b4 * &b4
                - &a1 * &a2
                - &b1 * &b2
                - &a2 * &a3
                - &b2 * &b3
                - &b3 * &a4
                - &a3 * &b4
                - &b3 * &b4;
            let b = &b1 * &b1 + &b2 * &b2 + &b3 * &b3 + &b4 * &b4
                + (&a1 * &b1 + &a2 * &b2 + &a3 * &b3 + &a4 * &b4).scale(2)
                - (&a1 * &b2 + &a2 * &b1 + &b1 * &b2)
                - (&a2 * &b3 + &a3 * &b2 + &b2 * &b3)
                - (&a3 * &b4 + &a4 * &b3 + &b3 * &b4)
                - &a3 * &a4
                - &b3 * &b4;
            Ok(ComponentPair { a, b })
        }
        _ => Err(Error::UnsupportedDimension(d)),
    }
}
