use exact_linalg::Rational;
use num_traits::Zero;

use crate::Parity;

/// Small dense rational matrix; only used for the defining (m+n) x (m+n)
/// representations during construction, so simplicity beats sparsity here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub n: usize,
    pub data: Vec<Vec<Rational>>,
}

impl Mat {
    pub fn zero(n: usize) -> Mat {
        Mat { n, data: vec![vec![Rational::zero(); n]; n] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.data[i][i] = Rational::from_integer(1.into());
        }
        m
    }

    pub fn unit(n: usize, i: usize, j: usize) -> Mat {
        let mut m = Mat::zero(n);
        m.data[i][j] = Rational::from_integer(1.into());
        m
    }

    pub fn add(&self, other: &Mat) -> Mat {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.data[i][j] = &out.data[i][j] + &other.data[i][j];
            }
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.data[i][j] = &out.data[i][j] - &other.data[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Mat {
        let mut out = self.clone();
        for row in out.data.iter_mut() {
            for v in row.iter_mut() {
                *v = &*v * c;
            }
        }
        out
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let mut out = Mat::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    if other.data[k][j].is_zero() {
                        continue;
                    }
                    let prod = &self.data[i][k] * &other.data[k][j];
                    out.data[i][j] = &out.data[i][j] + &prod;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|v| v.is_zero()))
    }

    pub fn trace(&self) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.n {
            acc += &self.data[i][i];
        }
        acc
    }

    /// Trace on the even block minus trace on the odd block, with row/column
    /// parities given by `parity_of`.
    pub fn supertrace(&self, parity_of: impl Fn(usize) -> Parity) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..self.n {
            if parity_of(i).is_odd() {
                acc -= &self.data[i][i];
            } else {
                acc += &self.data[i][i];
            }
        }
        acc
    }

    /// Supertranspose: `(st A)_ij = (-1)^(p_j (p_i + p_j)) A_ji`.
    pub fn supertranspose(&self, parity_of: impl Fn(usize) -> Parity) -> Mat {
        let mut out = Mat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.data[j][i].is_zero() {
                    continue;
                }
                let sign = if parity_of(j).is_odd() && (parity_of(i) + parity_of(j)).is_odd() {
                    -1i64
                } else {
                    1
                };
                out.data[i][j] = self.data[j][i].clone() * Rational::from_integer(sign.into());
            }
        }
        out
    }
}
