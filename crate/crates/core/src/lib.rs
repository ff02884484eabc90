//! Exact weight enumerators, weight distributions and cardinalities of
//! binary linear congruence codes.
//!
//! A binary linear congruence code (BLCC) is the set of binary `k`-tuples
//! `c` with `a_1 c_1 + ... + a_k c_k = b (mod n)`. The Varshamov-Tenengolts,
//! Levenshtein, Helberg and shifted VT codes are all instances of it (the
//! last one with an additional weight-parity constraint).
//!
//! The crate is organized as:
//!
//! * [`arith`]: factorization, divisors, Moebius, totient, Ramanujan sums.
//! * [`polyring`]: exact integer polynomials in `z` and the residue-indexed
//!   fold over the group ring of `Z_n`.
//! * [`codes`]: code descriptors and constructors for every family.
//! * [`enumerator`]: the counting formulas (exact engine, closed forms,
//!   floating-point character sums, bounds).
//! * [`oracle`]: exhaustive brute-force ground truth.
//!
//! With the default `parallel` feature the independent inner loops run on
//! rayon; without it everything runs sequentially. Both produce identical
//! integer results.

pub mod arith;
pub mod codes;
pub mod enumerator;
mod error;
mod exec;
pub mod oracle;
pub mod polyring;

pub use codes::{CodeSpec, Family, ParityCodeSpec};
pub use enumerator::WeightEnumerator;
pub use error::{Error, Result};
pub use polyring::{IntPolynomial, ResiduePolynomial};

/// Largest absolute deviation from an integer tolerated by the floating
/// point evaluation paths before they report an integrality failure.
pub const FLOAT_TOLERANCE: f64 = 1e-6;
