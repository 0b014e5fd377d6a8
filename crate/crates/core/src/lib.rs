//! Exact solvers for quadratic-form Diophantine equations over the
//! golden-ratio ring Z[τ].
//!
//! The crate provides four layers:
//!
//! - [`golden_ring`]: checked exact arithmetic in Z[τ] = {a + bτ},
//!   with Galois conjugation, the field norm, and a float-free sign.
//! - [`forms`]: quadratic forms over Z[τ], the symbolic splitting of
//!   f(k) = 1 into integer component equations A = 1, B = 0, and
//!   verified sum-of-squares rewritings of A.
//! - [`solver`]: two independent complete solvers — a backtracking
//!   search bounded by a sum-of-squares decomposition, and a
//!   conjugate-embedding box oracle. Agreement of the two is the
//!   correctness certificate for the solution sets.
//! - [`symmetry`]: exact matrix transformations over Z[τ], finite group
//!   generation, orbits, and form-preserving reflections.
//!
//! The built-in forms of arity 2, 3 and 4 have complete solution sets
//! of 10, 30 and 120 vectors; these realize the noncrystallographic
//! root systems H₂, H₃ and H₄.

pub mod error;
pub mod forms;
pub mod golden_ring;
pub mod solver;
pub mod symmetry;

pub use error::{Error, Result};
pub use golden_ring::{GoldenInt, GoldenVec};
