use std::sync::Arc;

use exact_linalg::{Rational, SparseVec};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::matrix::Mat;
use crate::weight::Weight;
use crate::Parity;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Gl,
    Sl,
    /// Z-degree-zero subalgebra of an sl/gl superalgebra.
    EvenPart,
}

/// Which part of the algebra an operation ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraPart {
    Full,
    Even,
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("sl(m|n) requires m != n (got m = n = {0})")]
    EqualRanks(usize),
    #[error("m and n must be positive")]
    NonPositiveRank,
    #[error("mismatched algebras: {0} vs {1}")]
    Mismatched(String, String),
    #[error("index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("operation not defined for {0}")]
    NotDefined(String),
}

/// An element written in the algebra basis.
#[derive(Clone, Debug)]
pub struct Element {
    pub algebra: Arc<LieSuperalgebra>,
    pub coeffs: SparseVec,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Parity when Z_2-homogeneous.
    pub fn parity(&self) -> Option<Parity> {
        let mut p: Option<Parity> = None;
        for (i, _) in self.coeffs.iter() {
            let pi = self.algebra.parity(*i);
            match p {
                None => p = Some(pi),
                Some(q) if q == pi => {}
                _ => return None,
            }
        }
        Some(p.unwrap_or(Parity::Even))
    }

    pub fn add(&self, other: &Element) -> Element {
        Element { algebra: self.algebra.clone(), coeffs: self.coeffs.add(&other.coeffs) }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element { algebra: self.algebra.clone(), coeffs: self.coeffs.scale(c) }
    }

    pub fn to_matrix(&self) -> Mat {
        self.algebra.vec_to_matrix(&self.coeffs)
    }
}

/// A structure-constant Lie superalgebra with parity, consistent Z-grading,
/// Cartan and root data, supertrace, and the supertranspose automorphism.
#[derive(Debug)]
pub struct LieSuperalgebra {
    kind: AlgebraKind,
    m: usize,
    n: usize,
    dim: usize,
    descriptor: String,
    basis_labels: Vec<String>,
    parity: Vec<Parity>,
    z_degree: Vec<i64>,
    /// Off-diagonal matrix position (1-based) of each basis element.
    off_diag: Vec<Option<(usize, usize)>>,
    /// Defining matrices.
    matrices: Vec<Mat>,
    /// Row/column parities of the defining matrices.
    matrix_parity: Vec<Parity>,
    /// brackets[i][j] = coefficients of <e_i, e_j>.
    brackets: Vec<Vec<SparseVec>>,
    /// pairs_to[k] = unordered pairs (i <= j) with <e_i,e_j> supported on k.
    pairs_to: Vec<Vec<(usize, usize)>>,
    /// into[e][k] = list of (u, c) with coefficient c of e_k in <e_e, e_u>.
    into: Vec<Vec<Vec<(usize, Rational)>>>,
    cartan_indices: Vec<usize>,
    d_vector: Option<SparseVec>,
    sigma: Vec<i64>,
    positive_root_indices: Vec<usize>,
    negative_root_indices: Vec<usize>,
    simple_raising_full: Vec<usize>,
    simple_raising_even: Vec<usize>,
    supertrace_vector: Vec<Rational>,
    roots: Vec<Weight>,
    /// For an even part: the basis index map into the parent algebra.
    parent_indices: Option<Vec<usize>>,
    /// Whether the diagonal is spanned by distinguished coroots (sl-style)
    /// or by the matrix units `E_kk` (gl-style).
    coroot_diagonal: bool,
}

impl LieSuperalgebra {
    /// Constructs gl(m|n) or sl(m|n) with the standard matrix basis in
    /// lexicographic order; for sl the diagonal part is spanned by the
    /// distinguished simple coroots.
    pub fn build(kind: AlgebraKind, m: usize, n: usize) -> Result<Arc<LieSuperalgebra>, AlgebraError> {
        if m == 0 || n == 0 {
            return Err(AlgebraError::NonPositiveRank);
        }
        if kind == AlgebraKind::Sl && m == n {
            return Err(AlgebraError::EqualRanks(m));
        }
        let size = m + n;
        let matrix_parity: Vec<Parity> = (0..size)
            .map(|i| if i < m { Parity::Even } else { Parity::Odd })
            .collect();
        let sigma: Vec<i64> = (0..size).map(|i| if i < m { 1 } else { -1 }).collect();

        let mut basis_labels = Vec::new();
        let mut matrices = Vec::new();
        let mut off_diag = Vec::new();

        match kind {
            AlgebraKind::Gl => {
                for i in 1..=size {
                    for j in 1..=size {
                        basis_labels.push(format!("E_{i}_{j}"));
                        matrices.push(Mat::unit(size, i - 1, j - 1));
                        off_diag.push(if i != j { Some((i, j)) } else { None });
                    }
                }
            }
            AlgebraKind::Sl => {
                for i in 1..=size {
                    for j in 1..=size {
                        if i != j {
                            basis_labels.push(format!("X_{i}_{j}"));
                            matrices.push(Mat::unit(size, i - 1, j - 1));
                            off_diag.push(Some((i, j)));
                        }
                    }
                }
                for i in 1..size {
                    basis_labels.push(format!("h_{i}"));
                    let mut mat = Mat::unit(size, i - 1, i - 1);
                    if i == m {
                        mat = mat.add(&Mat::unit(size, i, i));
                    } else {
                        mat = mat.sub(&Mat::unit(size, i, i));
                    }
                    matrices.push(mat);
                    off_diag.push(None);
                }
            }
            AlgebraKind::EvenPart => {
                return Err(AlgebraError::NotDefined(
                    "even parts are built from a parent algebra".into(),
                ))
            }
        }

        let descriptor = match kind {
            AlgebraKind::Gl => format!("gl:{m}:{n}"),
            AlgebraKind::Sl => format!("sl:{m}:{n}"),
            AlgebraKind::EvenPart => unreachable!(),
        };

        Ok(Arc::new(Self::from_matrices(
            kind,
            m,
            n,
            descriptor,
            basis_labels,
            matrices,
            matrix_parity,
            sigma,
            off_diag,
            None,
            kind == AlgebraKind::Sl,
        )))
    }

    #[allow(clippy::too_many_arguments)]
    fn from_matrices(
        kind: AlgebraKind,
        m: usize,
        n: usize,
        descriptor: String,
        basis_labels: Vec<String>,
        matrices: Vec<Mat>,
        matrix_parity: Vec<Parity>,
        sigma: Vec<i64>,
        off_diag: Vec<Option<(usize, usize)>>,
        parent_indices: Option<Vec<usize>>,
        coroot_diagonal: bool,
    ) -> LieSuperalgebra {
        let size = m + n;
        let dim = matrices.len();
        let block = |i: usize| -> i64 { if i <= m { 0 } else { 1 } };
        let parity: Vec<Parity> = off_diag
            .iter()
            .map(|od| match od {
                Some((i, j)) => {
                    if (block(*i) + block(*j)) % 2 == 1 {
                        Parity::Odd
                    } else {
                        Parity::Even
                    }
                }
                None => Parity::Even,
            })
            .collect();
        let z_degree: Vec<i64> = off_diag
            .iter()
            .map(|od| match od {
                Some((i, j)) => block(*i) - block(*j),
                None => 0,
            })
            .collect();

        let roots: Vec<Weight> = off_diag
            .iter()
            .map(|od| match od {
                Some((a, b)) => {
                    let labels = (1..=size)
                        .map(|k| {
                            let mut v = Rational::zero();
                            if k == *a {
                                v += Rational::one();
                            }
                            if k == *b {
                                v -= Rational::one();
                            }
                            v
                        })
                        .collect();
                    Weight::new(labels)
                }
                None => Weight::zero(size),
            })
            .collect();

        let mut half = LieSuperalgebra {
            kind,
            m,
            n,
            dim,
            descriptor,
            basis_labels,
            parity,
            z_degree,
            off_diag,
            matrices,
            matrix_parity,
            brackets: Vec::new(),
            pairs_to: Vec::new(),
            into: Vec::new(),
            cartan_indices: Vec::new(),
            d_vector: None,
            sigma,
            positive_root_indices: Vec::new(),
            negative_root_indices: Vec::new(),
            simple_raising_full: Vec::new(),
            simple_raising_even: Vec::new(),
            supertrace_vector: Vec::new(),
            roots,
            parent_indices,
            coroot_diagonal,
        };

        half.cartan_indices = (0..dim).filter(|&i| half.off_diag[i].is_none()).collect();
        half.positive_root_indices = (0..dim)
            .filter(|&i| matches!(half.off_diag[i], Some((a, b)) if a < b))
            .collect();
        half.negative_root_indices = (0..dim)
            .filter(|&i| matches!(half.off_diag[i], Some((a, b)) if a > b))
            .collect();
        half.simple_raising_full = (1..size)
            .filter_map(|i| half.index_of_position(i, i + 1))
            .collect();
        half.simple_raising_even = (1..size)
            .filter(|&i| i != m)
            .filter_map(|i| half.index_of_position(i, i + 1))
            .collect();
        half.supertrace_vector = half
            .matrices
            .iter()
            .map(|mat| mat.supertrace(|i| half.matrix_parity[i]))
            .collect();

        // Structure constants from matrix supercommutators.
        let mut brackets = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                let prod_ij = half.matrices[i].mul(&half.matrices[j]);
                let prod_ji = half.matrices[j].mul(&half.matrices[i]);
                let comm = if half.parity[i].is_odd() && half.parity[j].is_odd() {
                    prod_ij.add(&prod_ji)
                } else {
                    prod_ij.sub(&prod_ji)
                };
                let coeffs = half
                    .matrix_to_vec(&comm)
                    .expect("supercommutator stays inside the algebra");
                row.push(coeffs);
            }
            brackets.push(row);
        }
        half.brackets = brackets;

        let mut pairs_to: Vec<Vec<(usize, usize)>> = vec![Vec::new(); dim];
        let mut into: Vec<Vec<Vec<(usize, Rational)>>> = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in half.brackets[i][j].iter() {
                    into[i][*k].push((j, c.clone()));
                    if i <= j {
                        pairs_to[*k].push((i, j));
                    }
                }
            }
        }
        half.pairs_to = pairs_to;
        half.into = into;

        // The grading element, when it exists (m != n).
        if m != n {
            let denom = Rational::from_integer((m as i64 - n as i64).into());
            let mut d = Mat::zero(size);
            for k in 0..size {
                let num = if k < m { n as i64 } else { m as i64 };
                d.data[k][k] = Rational::from_integer(num.into()) / denom.clone();
            }
            half.d_vector = half.matrix_to_vec(&d);
        }

        half
    }

    /// Basis index of the off-diagonal generator at 1-based position (i, j).
    pub fn index_of_position(&self, i: usize, j: usize) -> Option<usize> {
        self.off_diag.iter().position(|od| *od == Some((i, j)))
    }

    /// Basis index of the `k`-th distinguished coroot (sl) / `E_kk` (gl).
    pub fn cartan_index(&self, k: usize) -> usize {
        self.cartan_indices[k]
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn basis_label(&self, i: usize) -> &str {
        &self.basis_labels[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn z_degree(&self, i: usize) -> i64 {
        self.z_degree[i]
    }

    pub fn off_diag_position(&self, i: usize) -> Option<(usize, usize)> {
        self.off_diag[i]
    }

    pub fn sigma(&self) -> &[i64] {
        &self.sigma
    }

    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan_indices
    }

    pub fn d_vector(&self) -> Option<&SparseVec> {
        self.d_vector.as_ref()
    }

    pub fn supertrace_vector(&self) -> &[Rational] {
        &self.supertrace_vector
    }

    pub fn matrix(&self, i: usize) -> &Mat {
        &self.matrices[i]
    }

    pub fn matrix_parity_of_row(&self, i: usize) -> Parity {
        self.matrix_parity[i]
    }

    pub fn root_weight(&self, i: usize) -> &Weight {
        &self.roots[i]
    }

    pub fn parent_indices(&self) -> Option<&[usize]> {
        self.parent_indices.as_deref()
    }

    pub fn positive_root_indices(&self, part: AlgebraPart) -> Vec<usize> {
        match part {
            AlgebraPart::Full => self.positive_root_indices.clone(),
            AlgebraPart::Even => self
                .positive_root_indices
                .iter()
                .copied()
                .filter(|&i| self.z_degree[i] == 0)
                .collect(),
        }
    }

    pub fn negative_root_indices(&self, part: AlgebraPart) -> Vec<usize> {
        match part {
            AlgebraPart::Full => self.negative_root_indices.clone(),
            AlgebraPart::Even => self
                .negative_root_indices
                .iter()
                .copied()
                .filter(|&i| self.z_degree[i] == 0)
                .collect(),
        }
    }

    /// Simple positive root vectors generating the chosen nilpotent part.
    pub fn simple_raising_indices(&self, part: AlgebraPart) -> &[usize] {
        match part {
            AlgebraPart::Full => &self.simple_raising_full,
            AlgebraPart::Even => &self.simple_raising_even,
        }
    }

    /// Basis indices of the chosen part (full algebra or Z-degree 0).
    pub fn part_indices(&self, part: AlgebraPart) -> Vec<usize> {
        match part {
            AlgebraPart::Full => (0..self.dim).collect(),
            AlgebraPart::Even => (0..self.dim).filter(|&i| self.z_degree[i] == 0).collect(),
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.brackets[i][j]
    }

    /// Unordered basis pairs whose bracket is supported on `k`.
    pub fn pairs_bracketing_to(&self, k: usize) -> &[(usize, usize)] {
        &self.pairs_to[k]
    }

    /// All `(u, c)` with `c` the coefficient of `e_k` in `<e_e, e_u>`.
    pub fn bracket_into(&self, e: usize, k: usize) -> &[(usize, Rational)] {
        &self.into[e][k]
    }

    pub fn bracket_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, ci) in x.iter() {
            for (j, cj) in y.iter() {
                let c = ci * cj;
                if !c.is_zero() {
                    acc = acc.add_scaled(&self.brackets[*i][*j], &c);
                }
            }
        }
        acc
    }

    pub fn element(self: &Arc<Self>, i: usize) -> Element {
        Element { algebra: self.clone(), coeffs: SparseVec::unit(i) }
    }

    pub fn element_from(self: &Arc<Self>, coeffs: SparseVec) -> Element {
        Element { algebra: self.clone(), coeffs }
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        if x.algebra.descriptor != self.descriptor || y.algebra.descriptor != self.descriptor {
            return Err(AlgebraError::Mismatched(
                x.algebra.descriptor.clone(),
                y.algebra.descriptor.clone(),
            ));
        }
        Ok(Element { algebra: x.algebra.clone(), coeffs: self.bracket_vec(&x.coeffs, &y.coeffs) })
    }

    pub fn vec_to_matrix(&self, coeffs: &SparseVec) -> Mat {
        let mut acc = Mat::zero(self.size());
        for (i, c) in coeffs.iter() {
            acc = acc.add(&self.matrices[*i].scale(c));
        }
        acc
    }

    /// Expands a matrix in the basis; `None` when it is outside the algebra.
    pub fn matrix_to_vec(&self, mat: &Mat) -> Option<SparseVec> {
        let size = self.size();
        let mut entries: Vec<(usize, Rational)> = Vec::new();
        for (idx, od) in self.off_diag.iter().enumerate() {
            if let Some((i, j)) = od {
                let v = mat.data[*i - 1][*j - 1].clone();
                if !v.is_zero() {
                    entries.push((idx, v));
                }
            }
        }
        if self.coroot_diagonal {
            let d: Vec<Rational> = (0..size).map(|k| mat.data[k][k].clone()).collect();
            let coeffs = self.diagonal_to_coroots(&d)?;
            for (k, c) in coeffs.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((self.cartan_indices[k], c));
                }
            }
        } else {
            // Diagonal matrix units in basis order.
            for (k, &idx) in self.cartan_indices.iter().enumerate() {
                let v = mat.data[k][k].clone();
                if !v.is_zero() {
                    entries.push((idx, v));
                }
            }
        }
        let candidate = SparseVec::from_entries(entries);
        // Full verification: reconstruction must reproduce the input.
        if self.vec_to_matrix(&candidate) == *mat {
            Some(candidate)
        } else {
            None
        }
    }

    /// Solves `sum_k c_k diag(h_k) = d` for a supertraceless diagonal `d`.
    fn diagonal_to_coroots(&self, d: &[Rational]) -> Option<Vec<Rational>> {
        let (m, size) = (self.m, self.size());
        let mut c = vec![Rational::zero(); size - 1];
        for i in 1..=m {
            // d_i = c_i - c_{i-1}
            let prev = if i >= 2 { c[i - 2].clone() } else { Rational::zero() };
            c[i - 1] = &d[i - 1] + &prev;
        }
        if size > m + 1 {
            // d_{m+1} = c_m + c_{m+1}
            c[m] = &d[m] - &c[m - 1];
            for i in m + 2..size {
                // d_i = c_i - c_{i-1}
                c[i - 1] = &d[i - 1] + &c[i - 2];
            }
            // Consistency: d_{m+n} = -c_{m+n-1}
            if d[size - 1] != -c[size - 2].clone() {
                return None;
            }
        } else {
            // n = 1: d_{m+1} = c_m
            if d[size - 1] != c[m - 1] {
                return None;
            }
        }
        Some(c)
    }

    /// The linear form restricting a diagonal matrix to its i-th entry.
    pub fn epsilon(&self, i: usize) -> Result<Weight, AlgebraError> {
        let size = self.size();
        if i < 1 || i > size {
            return Err(AlgebraError::IndexOutOfRange(i, size));
        }
        if !self.coroot_diagonal {
            let labels = (1..=size)
                .map(|j| if j == i { Rational::one() } else { Rational::zero() })
                .collect();
            return Ok(Weight::new(labels));
        }
        let denom = Rational::from_integer((self.m as i64 - self.n as i64).into());
        let labels = (1..=size)
            .map(|j| {
                let mut v = Rational::zero();
                if j == i {
                    v += Rational::one();
                }
                v -= Rational::from_integer(self.sigma[j - 1].into()) / denom.clone();
                v
            })
            .collect();
        Ok(Weight::new(labels))
    }

    /// Verifies the defining relation `sum_i sigma_i epsilon_i = 0`.
    pub fn check_eps_relation(&self) -> Result<bool, AlgebraError> {
        if self.kind == AlgebraKind::Gl {
            return Err(AlgebraError::NotDefined("epsilon relation holds on sl labels".into()));
        }
        let size = self.size();
        let mut acc = Weight::zero(size);
        for i in 1..=size {
            let eps = self.epsilon(i)?;
            let sign = Rational::from_integer(self.sigma[i - 1].into());
            acc = acc.add(&Weight::new(eps.labels().iter().map(|l| l * &sign).collect()));
        }
        Ok(acc.is_zero())
    }

    /// The automorphism `A -> -st(A)` on coefficient vectors.
    pub fn tau_vec(&self, coeffs: &SparseVec) -> SparseVec {
        let mat = self.vec_to_matrix(coeffs);
        let st = mat.supertranspose(|i| self.matrix_parity[i]);
        self.matrix_to_vec(&st.scale(&-Rational::one()))
            .expect("the supertranspose stays inside the algebra")
    }

    pub fn tau(&self, x: &Element) -> Element {
        Element { algebra: x.algebra.clone(), coeffs: self.tau_vec(&x.coeffs) }
    }

    pub fn supertrace(&self, x: &Element) -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in x.coeffs.iter() {
            acc += c * &self.supertrace_vector[*i];
        }
        acc
    }

    /// Ordinary trace of the supercommutator, as a bilinear form.
    pub fn trace_form(&self, x: &Element, y: &Element) -> Rational {
        let b = self.bracket_vec(&x.coeffs, &y.coeffs);
        self.vec_to_matrix(&b).trace()
    }

    pub fn trace_form_basis(&self, i: usize, j: usize) -> Rational {
        self.vec_to_matrix(&self.brackets[i][j]).trace()
    }

    /// The Z-degree-zero subalgebra with inherited structure constants.
    pub fn even_subalgebra(self: &Arc<Self>) -> Arc<LieSuperalgebra> {
        let keep: Vec<usize> = (0..self.dim).filter(|&i| self.z_degree[i] == 0).collect();
        let basis_labels = keep.iter().map(|&i| self.basis_labels[i].clone()).collect();
        let matrices = keep.iter().map(|&i| self.matrices[i].clone()).collect();
        let off_diag = keep.iter().map(|&i| self.off_diag[i]).collect();
        Arc::new(Self::from_matrices(
            AlgebraKind::EvenPart,
            self.m,
            self.n,
            format!("l0({})", self.descriptor),
            basis_labels,
            matrices,
            self.matrix_parity.clone(),
            self.sigma.clone(),
            off_diag,
            Some(keep),
            self.coroot_diagonal,
        ))
    }

    /// Eigenvalue of the `pos`-th Cartan basis element on a weight.
    pub fn cartan_eigenvalue(&self, pos: usize, weight: &Weight) -> Rational {
        let idx = self.cartan_indices[pos];
        let mat = &self.matrices[idx];
        let mut acc = Rational::zero();
        for k in 0..self.size() {
            if !mat.data[k][k].is_zero() {
                acc += &mat.data[k][k] * weight.get(k);
            }
        }
        acc
    }

    /// Reconstructs a weight from the eigenvalues of the Cartan basis.
    pub fn weight_from_cartan_eigenvalues(&self, evals: &[Rational]) -> Option<Weight> {
        let size = self.size();
        match self.coroot_diagonal {
            false => Some(Weight::new(evals.to_vec())),
            true => {
                // For the even part the Cartan basis may be the parent's
                // coroots; both cases have labels determined by the
                // eigenvalues plus the sum-zero constraint.
                debug_assert_eq!(evals.len(), size - 1);
                let m = self.m;
                // L_{j+1} = L_j - t_j for j != m, L_{m+1} = t_m - L_m,
                // with L_1 fixed by sum = 0.
                let mut rel = vec![Rational::zero(); size]; // labels relative to L_1
                let mut sign = vec![Rational::one(); size]; // coefficient of L_1
                for j in 1..size {
                    if j != m {
                        rel[j] = &rel[j - 1] - &evals[j - 1];
                        sign[j] = sign[j - 1].clone();
                    } else {
                        rel[j] = &evals[j - 1] - &rel[j - 1];
                        sign[j] = -sign[j - 1].clone();
                    }
                }
                let mut rel_sum = Rational::zero();
                let mut sign_sum = Rational::zero();
                for j in 0..size {
                    rel_sum += &rel[j];
                    sign_sum += &sign[j];
                }
                if sign_sum.is_zero() {
                    return None;
                }
                let l1 = -rel_sum / sign_sum;
                let labels = (0..size).map(|j| &rel[j] + &sign[j] * &l1).collect();
                Some(Weight::new(labels))
            }
        }
    }

    /// Eigenvalue of the grading element on a weight.
    pub fn d_eigenvalue_of_weight(&self, weight: &Weight) -> Rational {
        if self.coroot_diagonal {
            weight.d_eigenvalue(self.m)
        } else {
            let denom = Rational::from_integer((self.m as i64 - self.n as i64).into());
            let mut acc = Rational::zero();
            for k in 0..self.size() {
                let num = if k < self.m { self.n as i64 } else { self.m as i64 };
                acc += Rational::from_integer(num.into()) / denom.clone() * weight.get(k);
            }
            acc
        }
    }
}
