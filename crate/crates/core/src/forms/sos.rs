//! Sum-of-squares decompositions of the scaled component equations.
//!
//! A decomposition rewrites `multiplier · (A − 1)` as
//! `Σ cᵢ·Lᵢ² − target` for positive integers cᵢ and integer linear forms
//! Lᵢ. Since every variable then appears in some square bounded by the
//! target, the solution set of A = 1 becomes finitely enumerable. The
//! identity is always verified symbolically, never assumed.

use crate::error::{Error, Result};
use crate::forms::poly::{IntPoly, LinForm};
use crate::forms::ComponentPair;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SosDecomposition {
    multiplier: i64,
    terms: Vec<(i64, LinForm)>,
    target: i64,
}

impl SosDecomposition {
    pub fn new(multiplier: i64, terms: Vec<(i64, LinForm)>, target: i64) -> Result<Self> {
        if multiplier <= 0 || target <= 0 {
            return Err(Error::InvalidDecomposition);
        }
        let nvars = match terms.first() {
            Some((_, l)) => l.nvars(),
            None => return Err(Error::InvalidDecomposition),
        };
        if terms.iter().any(|(c, l)| *c <= 0 || l.nvars() != nvars) {
            return Err(Error::InvalidDecomposition);
        }
        Ok(SosDecomposition {
            multiplier,
            terms,
            target,
        })
    }

    pub fn multiplier(&self) -> i64 {
        self.multiplier
    }

    pub fn target(&self) -> i64 {
        self.target
    }

    pub fn terms(&self) -> &[(i64, LinForm)] {
        &self.terms
    }

    pub fn nvars(&self) -> usize {
        self.terms[0].1.nvars()
    }

    /// Σ cᵢ·Lᵢ² − target as a polynomial.
    pub fn lhs_poly(&self) -> IntPoly {
        let n = self.nvars();
        let mut acc = IntPoly::constant(n, -self.target);
        for (c, l) in &self.terms {
            let lp = l.to_poly();
            acc = acc + (&lp * &lp).scale(*c);
        }
        acc
    }
}

/// The built-in decomposition for the arity-d built-in form.
pub fn builtin_sos(d: usize) -> Result<SosDecomposition> {
    let term = |c: i64, coeffs: &[i64]| (c, LinForm::new(coeffs.to_vec()));
    match d {
        // a₁² + a₂² + (b₁−b₂)² + (a₁−b₂)² + (a₂−b₁)² = 2
        2 => SosDecomposition::new(
            2,
            vec![
                term(1, &[1, 0, 0, 0]),
                term(1, &[0, 1, 0, 0]),
                term(1, &[0, 0, 1, -1]),
                term(1, &[1, 0, 0, -1]),
                term(1, &[0, 1, -1, 0]),
            ],
            2,
        ),
        // 3(2a₁−a₂)² + 3(2b₁−b₂)² + 3(2a₃−b₂)² + 6(b₃−b₂)²
        //   + 2(2a₂−b₃)² + (a₂−2b₃)² = 12
        3 => SosDecomposition::new(
            12,
            vec![
                term(3, &[2, -1, 0, 0, 0, 0]),
                term(3, &[0, 0, 0, 2, -1, 0]),
                term(3, &[0, 0, 2, 0, -1, 0]),
                term(6, &[0, 0, 0, 0, -1, 1]),
                term(2, &[0, 2, 0, 0, 0, -1]),
                term(1, &[0, 1, 0, 0, 0, -2]),
            ],
            12,
        ),
        // 4(2a₁−a₂)² + 4(2a₃−a₂−b₄)² + 4(2b₃−b₂−b₄−a₄)² + a₄²
        //   + 4(2b₁−b₂)² + 2(2a₂−b₄)² + 2(2b₂−b₄−a₄)² + (2b₄−3a₄)² = 16
        4 => SosDecomposition::new(
            16,
            vec![
                term(4, &[2, -1, 0, 0, 0, 0, 0, 0]),
                term(4, &[0, -1, 2, 0, 0, 0, 0, -1]),
                term(4, &[0, 0, 0, -1, 0, -1, 2, -1]),
                term(1, &[0, 0, 0, 1, 0, 0, 0, 0]),
                term(4, &[0, 0, 0, 0, 2, -1, 0, 0]),
                term(2, &[0, 2, 0, 0, 0, 0, 0, -1]),
                term(2, &[0, 0, 0, -1, 0, 2, 0, -1]),
                term(1, &[0, 0, 0, -3, 0, 0, 0, 2]),
            ],
            16,
        ),
        _ => Err(Error::UnsupportedDimension(d)),
    }
}

/// True iff Σ cᵢ·Lᵢ² − target = multiplier·(A − 1) holds
/// coefficient-by-coefficient.
pub fn verify_sos(s: &SosDecomposition, components: &ComponentPair) -> bool {
    if s.nvars() != components.a.nvars() {
        return false;
    }
    let rhs = (components.a.clone() - IntPoly::constant(components.a.nvars(), 1))
        .scale(s.multiplier());
    s.lhs_poly() == rhs
}
