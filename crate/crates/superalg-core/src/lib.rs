//! The Lie superalgebras gl(m|n) and sl(m|n) as explicit structure-constant
//! algebras over the rationals.
//!
//! Basis elements are the standard matrix generators: `E_ij` for gl(m|n),
//! and for sl(m|n) the traceless combinations `X_ij` (off-diagonal) together
//! with the distinguished simple coroots `h_i`. Every bracket is computed
//! once from matrix supercommutators; parity, consistent Z-degree (the
//! eigenvalue of the grading element under the adjoint action), root data,
//! the supertranspose automorphism and the supertrace all come with the
//! constructed algebra. Construction is deterministic: bases are ordered
//! lexicographically, reports built downstream are bit-reproducible.

mod algebra;
mod matrix;
mod weight;

pub use algebra::{AlgebraError, AlgebraKind, AlgebraPart, Element, LieSuperalgebra};
pub use matrix::Mat;
pub use weight::Weight;

pub use exact_linalg::{rat, ratio, Rational, SparseVec};

/// Z_2-degree of a homogeneous element or basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Parity::Odd)
    }

    /// 0 or 1, for Koszul sign exponents.
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `(-1)^(p q)` as a rational sign.
pub fn koszul_sign(p: Parity, q: Parity) -> i64 {
    if p.is_odd() && q.is_odd() {
        -1
    } else {
        1
    }
}
