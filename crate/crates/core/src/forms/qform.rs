//! Quadratic forms over Z[τ].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::golden_ring::{GoldenInt, GoldenVec};

/// A quadratic form f(k) = Σ_{i≤j} c_ij k_i k_j in d variables over Z[τ],
/// stored as an upper-triangular coefficient map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QForm {
    d: usize,
    coeffs: BTreeMap<(usize, usize), GoldenInt>,
}

impl QForm {
    /// Builds a form from 0-based (i, j) coefficient pairs with i ≤ j < d.
    pub fn new(
        d: usize,
        coeffs: impl IntoIterator<Item = ((usize, usize), GoldenInt)>,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidForm("arity must be at least 1".into()));
        }
        let mut map = BTreeMap::new();
        for ((i, j), c) in coeffs {
            if i > j || j >= d {
                return Err(Error::InvalidForm(format!(
                    "coefficient index ({i}, {j}) out of range for arity {d}"
                )));
            }
            if map.insert((i, j), c).is_some() {
                return Err(Error::InvalidForm(format!(
                    "duplicate coefficient for ({i}, {j})"
                )));
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(QForm { d, coeffs: map })
    }

    pub fn arity(&self) -> usize {
        self.d
    }

    pub fn coeff(&self, i: usize, j: usize) -> GoldenInt {
        debug_assert!(i <= j);
        self.coeffs.get(&(i, j)).copied().unwrap_or(GoldenInt::ZERO)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = ((usize, usize), GoldenInt)> + '_ {
        self.coeffs.iter().map(|(&ij, &c)| (ij, c))
    }

    /// Exact value Σ c_ij k_i k_j.
    pub fn evaluate(&self, k: &GoldenVec) -> Result<GoldenInt> {
        if k.len() != self.d {
            return Err(Error::ArityMismatch {
                expected: self.d,
                got: k.len(),
            });
        }
        let mut acc = GoldenInt::ZERO;
        for (&(i, j), &c) in &self.coeffs {
            acc = acc + c * k[i] * k[j];
        }
        Ok(acc)
    }

    /// The form with every coefficient replaced by its Galois conjugate.
    pub fn conjugate(&self) -> QForm {
        QForm {
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&ij, &c)| (ij, c.conj()))
                .collect(),
        }
    }

    /// The doubled Gram matrix G with G_ii = 2c_ii and G_ij = G_ji = c_ij,
    /// so that kᵀGk = 2f(k). Its entries stay inside Z[τ].
    pub fn doubled_gram(&self) -> Vec<Vec<GoldenInt>> {
        let mut g = vec![vec![GoldenInt::ZERO; self.d]; self.d];
        for (&(i, j), &c) in &self.coeffs {
            if i == j {
                g[i][i] = c * 2;
            } else {
                g[i][j] = c;
                g[j][i] = c;
            }
        }
        g
    }

    /// Rebuilds a form from a symmetric doubled Gram matrix. The diagonal
    /// must be even in both coordinates (it always is for a pulled-back
    /// form, since G_ii = 2f(g·e_i)).
    pub(crate) fn from_doubled_gram(g: &[Vec<GoldenInt>]) -> Result<QForm> {
        let d = g.len();
        let mut coeffs = BTreeMap::new();
        for i in 0..d {
            for j in i..d {
                if g[i][j] != g[j][i] {
                    return Err(Error::InvalidForm("Gram matrix is not symmetric".into()));
                }
                let c = if i == j {
                    let (a, b) = g[i][i].parts();
                    if a % 2 != 0 || b % 2 != 0 {
                        return Err(Error::InvalidForm(
                            "doubled Gram diagonal is not even".into(),
                        ));
                    }
                    GoldenInt::new(a / 2, b / 2)
                } else {
                    g[i][j]
                };
                if !c.is_zero() {
                    coeffs.insert((i, j), c);
                }
            }
        }
        Ok(QForm { d, coeffs })
    }

    /// Sylvester's criterion on the doubled Gram matrix, decided with the
    /// exact sign of each leading principal minor.
    pub fn is_positive_definite(&self) -> bool {
        let g = self.doubled_gram();
        for n in 1..=self.d {
            let minor: Vec<Vec<GoldenInt>> =
                g[..n].iter().map(|row| row[..n].to_vec()).collect();
            if det(&minor).signum() <= 0 {
                return false;
            }
        }
        true
    }

    /// True iff both real embeddings of the form are positive definite.
    pub fn is_positive_definite_both(&self) -> bool {
        self.is_positive_definite() && self.conjugate().is_positive_definite()
    }

    pub fn to_json_string(&self) -> String {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&(i, j), &c)| CoeffJson {
                i: i + 1,
                j: j + 1,
                a: c.a(),
                b: c.b(),
            })
            .collect();
        serde_json::to_string_pretty(&FormJson { d: self.d, coeffs })
            .expect("form serialization cannot fail")
    }

    /// Parses the JSON schema `{"d": int, "coeffs": [{"i","j","a","b"}]}`
    /// with 1-based indices i ≤ j.
    pub fn from_json_str(s: &str) -> Result<QForm> {
        let raw: FormJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("form JSON: {e}")))?;
        if raw.d == 0 {
            return Err(Error::InvalidForm("arity must be at least 1".into()));
        }
        let coeffs = raw
            .coeffs
            .into_iter()
            .map(|c| {
                if c.i == 0 || c.j == 0 {
                    return Err(Error::InvalidForm("indices are 1-based".into()));
                }
                Ok(((c.i - 1, c.j - 1), GoldenInt::new(c.a, c.b)))
            })
            .collect::<Result<Vec<_>>>()?;
        QForm::new(raw.d, coeffs)
    }
}

impl fmt::Display for QForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // squares first, then cross terms, mirroring the usual notation
        let ordered = self
            .coeffs
            .iter()
            .filter(|(&(i, j), _)| i == j)
            .chain(self.coeffs.iter().filter(|(&(i, j), _)| i != j));
        for (n, (&(i, j), &c)) in ordered.enumerate() {
            let mono = if i == j {
                format!("k{}^2", i + 1)
            } else {
                format!("k{}*k{}", i + 1, j + 1)
            };
            let prefix = match (n, c.signum() >= 0) {
                (0, true) => String::new(),
                (0, false) => "-".into(),
                (_, true) => " + ".into(),
                (_, false) => " - ".into(),
            };
            let mag = c.abs_real();
            if mag == GoldenInt::ONE {
                write!(f, "{prefix}{mono}")?;
            } else if mag == GoldenInt::TAU || mag.b() == 0 {
                write!(f, "{prefix}{mag}*{mono}")?;
            } else {
                write!(f, "{prefix}({mag})*{mono}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FormJson {
    d: usize,
    coeffs: Vec<CoeffJson>,
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    i: usize,
    j: usize,
    a: i64,
    b: i64,
}

/// Exact determinant of a small matrix over Z[τ] by Laplace expansion.
pub(crate) fn det(m: &[Vec<GoldenInt>]) -> GoldenInt {
    let n = m.len();
    match n {
        0 => GoldenInt::ONE,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            let mut acc = GoldenInt::ZERO;
            for col in 0..n {
                let sub: Vec<Vec<GoldenInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let term = m[0][col] * det(&sub);
                acc = if col % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Principal minor of `m` with row and column `j` removed.
pub(crate) fn principal_minor(m: &[Vec<GoldenInt>], j: usize) -> GoldenInt {
    let sub: Vec<Vec<GoldenInt>> = m
        .iter()
        .enumerate()
        .filter(|&(r, _)| r != j)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(c, _)| c != j)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect();
    det(&sub)
}
