//! Sparse linear algebra over the rationals, exact everywhere.
//!
//! Everything downstream (structure constants, module actions, cochain
//! differentials) reduces to rank / kernel / solve questions on sparse
//! matrices with arbitrary-precision rational entries. Elimination is
//! fraction-free on gcd-normalized integer rows with a sparsity-aware
//! (Markowitz-style) deterministic pivot rule, so coefficient growth stays
//! under control even for deep eliminations. An optional modular prepass
//! (a single word-sized prime) may guide pivoting on large inputs; the
//! returned numbers are always certified over the rationals and do not
//! depend on whether the prepass ran.
//!
//! There are no floating-point paths anywhere in this workspace.

mod elim;
mod modular;
mod sparse;
mod subspace;

pub use elim::{
    echelonize, kernel_basis, rank, rank_with_options, rref, solve, Echelon, ElimOptions,
    ElimStats, RrefBuilder,
};
pub use sparse::{SparseRationalMatrix, SparseVec};
pub use subspace::Subspace;

/// Arbitrary-precision rational scalar used throughout the workspace.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Shorthand for a rational from an integer literal.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}
