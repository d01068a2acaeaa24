

use crate::elim::RrefBuilder;
use crate::{kernel_basis, Rational, SparseRationalMatrix, SparseVec};

/// A subspace of `Q^ambient`, stored as a canonical reduced-echelon basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient: usize,
    basis: RrefBuilder,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: RrefBuilder::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let mut basis = RrefBuilder::new();
        for i in 0..ambient {
            basis.insert(SparseVec::unit(i));
        }
        Subspace { ambient, basis }
    }

    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut basis = RrefBuilder::new();
        for v in vectors {
            if let Some(lead) = v.leading() {
                assert!(lead < ambient || v.entries().last().unwrap().0 < ambient);
            }
            debug_assert!(v.entries().last().map(|e| e.0 < ambient).unwrap_or(true));
            basis.insert(v);
        }
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_rows(&self) -> &[SparseVec] {
        self.basis.rows()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        self.basis.pivots()
    }

    /// Inserts a vector; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        self.basis.insert(v)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.basis.reduce(v.clone()).is_zero()
    }

    /// Residual of `v` after reduction by the basis.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.basis.reduce(v.clone())
    }

    /// Coordinates of `v` in the basis; `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let (residual, coords) = self.basis.reduce_with_coords(v.clone());
        if residual.is_zero() {
            Some(SparseVec::from_entries(coords))
        } else {
            None
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.rows().iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut out = self.clone();
        for r in other.basis.rows() {
            out.insert(r.clone());
        }
        out
    }

    /// Intersection via the kernel of `[S^T | -T^T]` on coefficient space.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let k = self.dim();
        let l = other.dim();
        if k == 0 || l == 0 {
            return Subspace::zero(self.ambient);
        }
        let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
        for (j, row) in self.basis.rows().iter().enumerate() {
            for (i, v) in row.iter() {
                triplets.push((*i, j, v.clone()));
            }
        }
        for (j, row) in other.basis.rows().iter().enumerate() {
            for (i, v) in row.iter() {
                triplets.push((*i, k + j, -v.clone()));
            }
        }
        let coeff_matrix = SparseRationalMatrix::from_triplets(self.ambient, k + l, triplets);
        let combos = kernel_basis(&coeff_matrix);
        let mut out = Subspace::zero(self.ambient);
        for combo in combos {
            let mut vec = SparseVec::new();
            for (idx, c) in combo.iter() {
                if *idx < k {
                    vec = vec.add_scaled(&self.basis.rows()[*idx], c);
                }
            }
            out.insert(vec);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_entries(entries.iter().map(|(i, x)| (*i, rat(*x))))
    }

    #[test]
    fn insertion_dedupes_and_is_canonical() {
        let mut s = Subspace::zero(4);
        assert!(s.insert(v(&[(0, 1), (1, 2)])));
        assert!(s.insert(v(&[(1, 1), (3, -1)])));
        assert!(!s.insert(v(&[(0, 2), (1, 6), (3, -2)])));
        assert_eq!(s.dim(), 2);

        // Different insertion order, same subspace, same canonical basis.
        let t = Subspace::from_vectors(
            4,
            vec![v(&[(1, 1), (3, -1)]), v(&[(0, 2), (1, 6), (3, -2)])],
        );
        assert_eq!(s.basis_rows(), t.basis_rows());
    }

    #[test]
    fn sum_and_intersection_dimensions() {
        let s = Subspace::from_vectors(5, vec![v(&[(0, 1)]), v(&[(1, 1)])]);
        let t = Subspace::from_vectors(5, vec![v(&[(1, 1)]), v(&[(2, 1)])]);
        let sum = s.sum(&t);
        let cap = s.intersect(&t);
        assert_eq!(sum.dim(), 3);
        assert_eq!(cap.dim(), 1);
        assert!(cap.contains(&v(&[(1, 7)])));
        assert_eq!(sum.dim() + cap.dim(), s.dim() + t.dim());
    }

    #[test]
    fn coordinates_round_trip() {
        let s = Subspace::from_vectors(4, vec![v(&[(0, 2), (2, 4)]), v(&[(1, 3)])]);
        let target = v(&[(0, 1), (1, 3), (2, 2)]);
        let coords = s.coordinates(&target).expect("inside the span");
        let mut rebuilt = SparseVec::new();
        for (i, c) in coords.iter() {
            rebuilt = rebuilt.add_scaled(&s.basis_rows()[*i], c);
        }
        assert_eq!(rebuilt, target);
        assert!(s.coordinates(&v(&[(3, 1)])).is_none());
    }
}
