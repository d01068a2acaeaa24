use std::fmt;

use exact_linalg::{rat, Rational};
use num_traits::{Signed, Zero};

/// A weight, written as the label tuple `(L_1,...,L_m | L_{m+1},...,L_{m+n})`
/// of eigenvalues on the diagonal Cartan basis. For sl-weights the labels sum
/// to zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    labels: Vec<Rational>,
}

impl Weight {
    pub fn new(labels: Vec<Rational>) -> Weight {
        Weight { labels }
    }

    pub fn zero(len: usize) -> Weight {
        Weight { labels: vec![Rational::zero(); len] }
    }

    pub fn from_ints(labels: &[i64]) -> Weight {
        Weight { labels: labels.iter().map(|&v| rat(v)).collect() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Rational] {
        &self.labels
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.labels[i]
    }

    pub fn sum(&self) -> Rational {
        let mut acc = Rational::zero();
        for l in &self.labels {
            acc += l;
        }
        acc
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight {
            labels: self
                .labels
                .iter()
                .zip(&other.labels)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight {
            labels: self
                .labels
                .iter()
                .zip(&other.labels)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight { labels: self.labels.iter().map(|a| -a).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|l| l.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.labels.iter().all(|l| l.is_integer())
    }

    /// Consecutive differences within each block (lengths m-1 and n-1);
    /// these are invariant under the per-block shifts that relate different
    /// label conventions for the even part.
    pub fn block_diffs(&self, m: usize) -> (Vec<Rational>, Vec<Rational>) {
        let first = (1..m).map(|i| &self.labels[i - 1] - &self.labels[i]).collect();
        let second = (m + 1..self.labels.len())
            .map(|i| &self.labels[i - 1] - &self.labels[i])
            .collect();
        (first, second)
    }

    /// Integral and dominant within each block: `L_i - L_{i+1}` a nonnegative
    /// integer for every i except the block boundary.
    pub fn is_block_dominant_integral(&self, m: usize) -> bool {
        if !self.is_integral() {
            return false;
        }
        let (a, b) = self.block_diffs(m);
        a.iter().chain(b.iter()).all(|d| d.is_integer() && !d.is_negative())
    }

    /// Value on the grading element: `-(L_1 + ... + L_m)`.
    pub fn d_eigenvalue(&self, m: usize) -> Rational {
        let mut acc = Rational::zero();
        for l in &self.labels[..m] {
            acc -= l;
        }
        acc
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}
