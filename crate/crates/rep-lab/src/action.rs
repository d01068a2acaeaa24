use exact_linalg::{Rational, SparseVec};

/// Sparse linear map stored column-major: `cols[j]` is the image of the
/// j-th basis vector. Column access is what module closures and weight-block
/// restrictions need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMatrix {
    dim: usize,
    cols: Vec<SparseVec>,
}

impl ActionMatrix {
    pub fn zero(dim: usize) -> ActionMatrix {
        ActionMatrix { dim, cols: vec![SparseVec::new(); dim] }
    }

    pub fn from_cols(dim: usize, cols: Vec<SparseVec>) -> ActionMatrix {
        debug_assert_eq!(cols.len(), dim);
        ActionMatrix { dim, cols }
    }

    /// Builder for rectangular use is not needed; module actions are square.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn set_col(&mut self, j: usize, v: SparseVec) {
        self.cols[j] = v;
    }

    pub fn add_to_col(&mut self, j: usize, inc: &SparseVec, c: &Rational) {
        self.cols[j] = self.cols[j].add_scaled(inc, c);
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    /// `A v` for sparse `v`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (j, c) in v.iter() {
            acc = acc.add_scaled(&self.cols[*j], c);
        }
        acc
    }

    /// `A B` as column-major matrices.
    pub fn compose(&self, other: &ActionMatrix) -> ActionMatrix {
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        ActionMatrix { dim: self.dim, cols }
    }

    pub fn scale(&self, c: &Rational) -> ActionMatrix {
        ActionMatrix { dim: self.dim, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn add_scaled(&self, other: &ActionMatrix, c: &Rational) -> ActionMatrix {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.add_scaled(b, c))
            .collect();
        ActionMatrix { dim: self.dim, cols }
    }

    /// Transpose (rows become columns).
    pub fn transpose(&self) -> ActionMatrix {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col.iter() {
                rows[*i].push((j, v.clone()));
            }
        }
        ActionMatrix {
            dim: self.dim,
            cols: rows.into_iter().map(SparseVec::from_entries).collect(),
        }
    }
}
