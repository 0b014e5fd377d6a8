//! Exact arithmetic in Z[τ], the ring of integers of Q[√5].
//!
//! An element is written a + bτ with a, b ∈ Z and τ = (1+√5)/2, reduced
//! by the rule τ² = τ + 1. The (a, b) pair is the canonical
//! representation, so equality is structural. All arithmetic is checked:
//! an i64 overflow panics instead of wrapping silently.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

const OVERFLOW: &str = "GoldenInt arithmetic overflowed i64";

#[inline]
fn ca(x: i64, y: i64) -> i64 {
    x.checked_add(y).expect(OVERFLOW)
}

#[inline]
fn cm(x: i64, y: i64) -> i64 {
    x.checked_mul(y).expect(OVERFLOW)
}

/// An element a + bτ of Z[τ].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GoldenInt {
    a: i64,
    b: i64,
}

impl GoldenInt {
    pub const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    pub const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };
    /// τ itself.
    pub const TAU: GoldenInt = GoldenInt { a: 0, b: 1 };
    /// τ² = 1 + τ.
    pub const TAU_SQ: GoldenInt = GoldenInt { a: 1, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenInt { a, b }
    }

    /// Rational coordinate (coefficient of 1).
    pub const fn a(self) -> i64 {
        self.a
    }

    /// Coefficient of τ.
    pub const fn b(self) -> i64 {
        self.b
    }

    pub const fn parts(self) -> (i64, i64) {
        (self.a, self.b)
    }

    pub const fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Galois conjugate: τ ↦ 1 − τ, so a + bτ ↦ (a+b) − bτ.
    pub fn conj(self) -> Self {
        GoldenInt::new(ca(self.a, self.b), self.b.checked_neg().expect(OVERFLOW))
    }

    /// Field norm x·conj(x) = a² + ab − b². Multiplicative.
    pub fn norm(self) -> i64 {
        let (a, b) = (self.a as i128, self.b as i128);
        i64::try_from(a * a + a * b - b * b).expect(OVERFLOW)
    }

    /// Sign of the real number a + b(1+√5)/2, computed exactly.
    ///
    /// Writing 2x = u + v√5 with u = 2a + b and v = b, the sign of x is
    /// the sign of u + v√5, settled by comparing u² with 5v² (these can
    /// never be equal for v ≠ 0 because √5 is irrational).
    pub fn signum(self) -> i64 {
        let u = 2 * self.a as i128 + self.b as i128;
        let v = self.b as i128;
        if v == 0 {
            return u.signum() as i64;
        }
        let u2 = u.checked_mul(u).expect(OVERFLOW);
        let v2_5 = v.checked_mul(v).and_then(|x| x.checked_mul(5)).expect(OVERFLOW);
        debug_assert_ne!(u2, v2_5, "u^2 = 5 v^2 is impossible for v != 0");
        if v > 0 {
            if u >= 0 {
                1
            } else {
                (v2_5 - u2).signum() as i64
            }
        } else if u <= 0 {
            -1
        } else {
            (u2 - v2_5).signum() as i64
        }
    }

    /// Comparison in the real-number order of the identity embedding.
    /// Distinct from `Ord`, which is the structural (a, b) order.
    pub fn cmp_real(self, other: Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }

    pub fn abs_real(self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self
        }
    }

    pub fn pow(self, n: u32) -> Self {
        let mut acc = GoldenInt::ONE;
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }
}

impl From<i64> for GoldenInt {
    fn from(a: i64) -> Self {
        GoldenInt::new(a, 0)
    }
}

impl Add for GoldenInt {
    type Output = GoldenInt;
    fn add(self, rhs: GoldenInt) -> GoldenInt {
        GoldenInt::new(ca(self.a, rhs.a), ca(self.b, rhs.b))
    }
}

impl Sub for GoldenInt {
    type Output = GoldenInt;
    fn sub(self, rhs: GoldenInt) -> GoldenInt {
        self + (-rhs)
    }
}

impl Neg for GoldenInt {
    type Output = GoldenInt;
    fn neg(self) -> GoldenInt {
        GoldenInt::new(
            self.a.checked_neg().expect(OVERFLOW),
            self.b.checked_neg().expect(OVERFLOW),
        )
    }
}

impl Mul for GoldenInt {
    type Output = GoldenInt;
    /// (a₁+b₁τ)(a₂+b₂τ) = (a₁a₂+b₁b₂) + (a₁b₂+a₂b₁+b₁b₂)τ, using τ² = τ+1.
    fn mul(self, rhs: GoldenInt) -> GoldenInt {
        let a = ca(cm(self.a, rhs.a), cm(self.b, rhs.b));
        let b = ca(ca(cm(self.a, rhs.b), cm(self.b, rhs.a)), cm(self.b, rhs.b));
        GoldenInt::new(a, b)
    }
}

impl Mul<i64> for GoldenInt {
    type Output = GoldenInt;
    fn mul(self, rhs: i64) -> GoldenInt {
        GoldenInt::new(cm(self.a, rhs), cm(self.b, rhs))
    }
}

impl fmt::Display for GoldenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "0"),
            (1, 1) => write!(f, "τ^2"),
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "τ"),
            (0, -1) => write!(f, "-τ"),
            (0, b) => write!(f, "{b}τ"),
            (a, 1) => write!(f, "{a}+τ"),
            (a, -1) => write!(f, "{a}-τ"),
            (a, b) => write!(f, "{a}{b:+}τ"),
        }
    }
}

/// Parses one signed term of the form `[sign] [digits] [τ]`.
/// Returns (rational, tau) contribution.
fn parse_term(term: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("invalid golden integer term `{term}`"));
    let (sign, rest) = match term.strip_prefix('-') {
        Some(r) => (-1i64, r),
        None => (1i64, term.strip_prefix('+').unwrap_or(term)),
    };
    if let Some(digits) = rest.strip_suffix('τ') {
        let n = if digits.is_empty() {
            1
        } else {
            digits.parse::<i64>().map_err(|_| bad())?
        };
        Ok((0, sign * n))
    } else {
        let n = rest.parse::<i64>().map_err(|_| bad())?;
        Ok((sign * n, 0))
    }
}

impl FromStr for GoldenInt {
    type Err = Error;

    /// Accepts `a`, `bτ`, `a+bτ`, `a-bτ`, and `τ^2` (optionally signed);
    /// `tau` is an ASCII alias for `τ`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.replace("tau", "τ");
        if compact.is_empty() {
            return Err(Error::Parse("empty golden integer".into()));
        }
        match compact.as_str() {
            "τ^2" | "+τ^2" => return Ok(GoldenInt::TAU_SQ),
            "-τ^2" => return Ok(-GoldenInt::TAU_SQ),
            _ => {}
        }
        // Split off a second term at a sign that is not the leading one.
        let mut split_at = None;
        for (idx, c) in compact.char_indices().skip(1) {
            if c == '+' || c == '-' {
                if split_at.is_some() {
                    return Err(Error::Parse(format!("too many terms in `{s}`")));
                }
                split_at = Some(idx);
            }
        }
        let (first, second) = match split_at {
            Some(idx) => (&compact[..idx], Some(&compact[idx..])),
            None => (compact.as_str(), None),
        };
        let (a1, b1) = parse_term(first)?;
        let (a2, b2) = match second {
            Some(t) => parse_term(t)?,
            None => (0, 0),
        };
        // Two rational terms or two τ terms would be ambiguous; reject.
        if second.is_some() && ((b1 != 0 && b2 != 0) || (b1 == 0 && b2 == 0)) {
            return Err(Error::Parse(format!("malformed golden integer `{s}`")));
        }
        if second.is_some() && b1 != 0 {
            return Err(Error::Parse(format!(
                "golden integer `{s}` must list the rational part first"
            )));
        }
        Ok(GoldenInt::new(ca(a1, a2), ca(b1, b2)))
    }
}

/// A fixed-length vector over Z[τ].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoldenVec {
    entries: Vec<GoldenInt>,
}

impl GoldenVec {
    pub fn new(entries: Vec<GoldenInt>) -> Self {
        GoldenVec { entries }
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        GoldenVec::new(pairs.iter().map(|&(a, b)| GoldenInt::new(a, b)).collect())
    }

    pub fn zero(len: usize) -> Self {
        GoldenVec::new(vec![GoldenInt::ZERO; len])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[GoldenInt] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GoldenInt> {
        self.entries.iter()
    }

    /// Lexicographic comparison on the flattened (a₁, b₁, a₂, b₂, …) pairs.
    pub fn try_compare(&self, other: &GoldenVec) -> Result<Ordering> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.cmp(other))
    }

    /// Flattened integer coordinates in the order (a₁..a_d, b₁..b_d).
    pub fn flatten(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(2 * self.len());
        v.extend(self.entries.iter().map(|k| k.a()));
        v.extend(self.entries.iter().map(|k| k.b()));
        v
    }

    /// Inverse of [`flatten`](Self::flatten).
    pub fn from_flat(d: usize, v: &[i64]) -> Result<Self> {
        if v.len() != 2 * d {
            return Err(Error::LengthMismatch {
                left: 2 * d,
                right: v.len(),
            });
        }
        Ok(GoldenVec::new(
            (0..d).map(|i| GoldenInt::new(v[i], v[d + i])).collect(),
        ))
    }
}

impl Index<usize> for GoldenVec {
    type Output = GoldenInt;
    fn index(&self, i: usize) -> &GoldenInt {
        &self.entries[i]
    }
}

impl Neg for &GoldenVec {
    type Output = GoldenVec;
    fn neg(self) -> GoldenVec {
        GoldenVec::new(self.entries.iter().map(|&k| -k).collect())
    }
}

impl fmt::Display for GoldenVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for GoldenVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = match (t.strip_prefix('('), t.strip_suffix(')')) {
            (Some(inner), Some(_)) => &inner[..inner.len() - 1],
            _ => t,
        };
        if t.trim().is_empty() {
            return Err(Error::Parse("empty vector".into()));
        }
        let entries = t
            .split(',')
            .map(|part| part.parse::<GoldenInt>())
            .collect::<Result<Vec<_>>>()?;
        Ok(GoldenVec::new(entries))
    }
}
