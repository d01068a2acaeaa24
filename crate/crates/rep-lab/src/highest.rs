use std::collections::BTreeMap;
use std::sync::Arc;

use exact_linalg::{rat, Rational, SparseVec};
use num_traits::Zero;
use superalg_core::{AlgebraKind, AlgebraPart, LieSuperalgebra, Parity, Weight};

use crate::action::ActionMatrix;
use crate::analysis::{closure_with_ops, singular_vectors, submodule_module};
use crate::module::{dual_module, Module, ModuleError};
use crate::slk::{simple_factor, weyl_dim};

/// The simple module of the reductive Z-degree-zero subalgebra with the
/// given per-block dominant highest weight. Built as a tensor product of
/// simple factors for the two special-linear blocks, with the center acting
/// through the weight labels.
pub fn simple_l0_module(l0: &Arc<LieSuperalgebra>, lambda: &Weight) -> Result<Module, ModuleError> {
    assert_eq!(l0.kind(), AlgebraKind::EvenPart, "expects the even subalgebra");
    let (m, n) = (l0.m(), l0.n());
    let (d1, d2) = lambda.block_diffs(m);
    let to_ints = |v: &[Rational]| -> Result<Vec<i64>, ModuleError> {
        v.iter()
            .map(|d| {
                if d.is_integer() && !(d < &Rational::zero()) {
                    Ok(d.to_integer().try_into().unwrap())
                } else {
                    Err(ModuleError::NotDominant(lambda.to_string()))
                }
            })
            .collect()
    };
    let f1 = simple_factor(m, &to_ints(&d1)?)?;
    let f2 = simple_factor(n, &to_ints(&d2)?)?;
    let s1 = lambda.get(m - 1).clone();
    let s2 = lambda.get(m + n - 1).clone();

    let dim = f1.dim * f2.dim;
    let idx = |i: usize, j: usize| i * f2.dim + j;
    let mut weights = Vec::with_capacity(dim);
    for i in 0..f1.dim {
        for j in 0..f2.dim {
            let mut labels = Vec::with_capacity(m + n);
            for a in 0..m {
                labels.push(rat(f1.gl_labels[i][a]) + &s1);
            }
            for b in 0..n {
                labels.push(rat(f2.gl_labels[j][b]) + &s2);
            }
            weights.push(Weight::new(labels));
        }
    }
    let d_eig = lambda.d_eigenvalue(m);
    let z: i64 = if d_eig.is_integer() {
        d_eig.to_integer().try_into().unwrap_or(0)
    } else {
        0
    };

    let mut actions = Vec::with_capacity(l0.dim());
    for e in 0..l0.dim() {
        let mut mat = ActionMatrix::zero(dim);
        match l0.off_diag_position(e) {
            Some((a, b)) => {
                if a <= m && b <= m {
                    let f = &f1.action[&(a, b)];
                    for i in 0..f1.dim {
                        for j in 0..f2.dim {
                            let col = f.col(i).map_indices(|i2| idx(i2, j));
                            mat.set_col(idx(i, j), col);
                        }
                    }
                } else {
                    debug_assert!(a > m && b > m);
                    let f = &f2.action[&(a - m, b - m)];
                    for i in 0..f1.dim {
                        for j in 0..f2.dim {
                            let col = f.col(j).map_indices(|j2| idx(i, j2));
                            mat.set_col(idx(i, j), col);
                        }
                    }
                }
            }
            None => {
                let pos = l0
                    .cartan_indices()
                    .iter()
                    .position(|&c| c == e)
                    .expect("diagonal basis element");
                for v in 0..dim {
                    let eig = l0.cartan_eigenvalue(pos, &weights[v]);
                    mat.set_col(v, SparseVec::single(v, eig));
                }
            }
        }
        actions.push(mat);
    }

    let module = Module::new(
        l0.clone(),
        vec![Parity::Even; dim],
        vec![z; dim],
        weights,
        actions,
        format!("l0hw:{lambda}"),
    );
    // Dimension cross-check against the Weyl formula per factor.
    let w1 = weyl_dim(&d1).ok_or_else(|| ModuleError::NotDominant(lambda.to_string()))?;
    let w2 = weyl_dim(&d2).ok_or_else(|| ModuleError::NotDominant(lambda.to_string()))?;
    if rat(dim as i64) != w1 * w2 {
        return Err(ModuleError::Inconsistent("factor dimension mismatch".into()));
    }
    Ok(module)
}

/// Layout of a Kac module: Grassmann algebra on the degree +1 root vectors
/// tensored with a simple module of the even part.
struct KacLayout {
    algebra: Arc<LieSuperalgebra>,
    v0: Module,
    /// Algebra indices of the degree +1 (creation) generators, ascending.
    creation: Vec<usize>,
    /// Bit position per creation generator.
    creation_pos: BTreeMap<usize, usize>,
    /// Parent index -> even-subalgebra index.
    even_pos: BTreeMap<usize, usize>,
    v0_dim: usize,
    dim: usize,
}

impl KacLayout {
    fn new(algebra: &Arc<LieSuperalgebra>, lambda: &Weight) -> Result<KacLayout, ModuleError> {
        if !lambda.is_block_dominant_integral(algebra.m()) {
            return Err(ModuleError::NotDominant(lambda.to_string()));
        }
        let even = algebra.even_subalgebra();
        let v0 = simple_l0_module(&even, lambda)?;
        let creation: Vec<usize> =
            (0..algebra.dim()).filter(|&i| algebra.z_degree(i) == 1).collect();
        let creation_pos = creation.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        let even_pos = even
            .parent_indices()
            .unwrap()
            .iter()
            .enumerate()
            .map(|(sub, &parent)| (parent, sub))
            .collect();
        let v0_dim = v0.dim();
        let dim = (1usize << creation.len()) * v0_dim;
        Ok(KacLayout { algebra: algebra.clone(), v0, creation, creation_pos, even_pos, v0_dim, dim })
    }

    fn index(&self, mask: u32, j: usize) -> usize {
        (mask as usize) * self.v0_dim + j
    }

    fn split(&self, idx: usize) -> (u32, usize) {
        ((idx / self.v0_dim) as u32, idx % self.v0_dim)
    }

    /// Sign of inserting the generator at `pos` into the monomial `mask`
    /// (odd generators anticommute); `None` when already present.
    fn insert(&self, mask: u32, pos: usize) -> Option<(u32, i64)> {
        if mask & (1 << pos) != 0 {
            return None;
        }
        let below = (mask & ((1u32 << pos) - 1)).count_ones();
        Some((mask | (1 << pos), if below % 2 == 0 { 1 } else { -1 }))
    }

    /// Action of the algebra basis element `e` on the monomial basis vector,
    /// by commuting `e` through the leading Grassmann factor.
    fn act(&self, e: usize, mask: u32, j: usize) -> SparseVec {
        let alg = &self.algebra;
        if mask == 0 {
            return match alg.z_degree(e) {
                1 => {
                    let pos = self.creation_pos[&e];
                    SparseVec::unit(self.index(1 << pos, j))
                }
                0 => {
                    let sub = self.even_pos[&e];
                    self.v0
                        .action(sub)
                        .col(j)
                        .map_indices(|j2| self.index(0, j2))
                }
                _ => SparseVec::new(),
            };
        }
        let low = mask.trailing_zeros() as usize;
        let f_idx = self.creation[low];
        let rest = mask & !(1 << low);
        let mut acc = SparseVec::new();
        // x f = <x,f> + (-1)^{|x|} f x on an odd generator f.
        for (y, c) in alg.bracket_basis(e, f_idx).iter() {
            match alg.z_degree(*y) {
                1 => {
                    if let Some((mask2, sign)) = self.insert(rest, self.creation_pos[y]) {
                        acc = acc.add_scaled(
                            &SparseVec::unit(self.index(mask2, j)),
                            &(c * rat(sign)),
                        );
                    }
                }
                _ => {
                    let inner = self.act(*y, rest, j);
                    acc = acc.add_scaled(&inner, c);
                }
            }
        }
        let esign = if alg.parity(e).is_odd() { -1i64 } else { 1 };
        let inner = self.act(e, rest, j);
        for (idx2, c) in inner.iter() {
            let (mask2, j2) = self.split(*idx2);
            if let Some((mask3, sign)) = self.insert(mask2, low) {
                acc = acc.add_scaled(
                    &SparseVec::unit(self.index(mask3, j2)),
                    &(c * rat(esign * sign)),
                );
            }
        }
        acc
    }

    fn metadata(&self) -> (Vec<Parity>, Vec<i64>, Vec<Weight>) {
        let bits = self.creation.len();
        let mut parity = Vec::with_capacity(self.dim);
        let mut z_degree = Vec::with_capacity(self.dim);
        let mut weights = Vec::with_capacity(self.dim);
        for mask in 0u32..(1 << bits) {
            let pops = mask.count_ones() as i64;
            let mut root_sum = Weight::zero(self.algebra.size());
            for pos in 0..bits {
                if mask & (1 << pos) != 0 {
                    root_sum = root_sum.add(self.algebra.root_weight(self.creation[pos]));
                }
            }
            for j in 0..self.v0_dim {
                parity.push(if pops % 2 == 0 { Parity::Even } else { Parity::Odd });
                z_degree.push(self.v0.z_degree(j) + pops);
                weights.push(self.v0.weight(j).add(&root_sum));
            }
        }
        (parity, z_degree, weights)
    }
}

/// The Kac module with highest weight `lambda`: the Grassmann algebra on the
/// degree +1 root vectors applied freely to a simple module of the even
/// part, with the degree -1 root vectors annihilating the top layer. The
/// vector `1 (x) v_lambda` is then annihilated by every positive root vector.
pub fn kac_module(algebra: &Arc<LieSuperalgebra>, lambda: &Weight) -> Result<Module, ModuleError> {
    let layout = KacLayout::new(algebra, lambda)?;
    let dim = layout.dim;
    let mut actions = Vec::with_capacity(algebra.dim());
    for e in 0..algebra.dim() {
        let mut cols = Vec::with_capacity(dim);
        for idx in 0..dim {
            let (mask, j) = layout.split(idx);
            cols.push(layout.act(e, mask, j));
        }
        actions.push(ActionMatrix::from_cols(dim, cols));
    }
    let (parity, z_degree, weights) = layout.metadata();
    Ok(Module::new(
        algebra.clone(),
        parity,
        z_degree,
        weights,
        actions,
        format!("kac:{lambda}"),
    ))
}

/// The contragredient of the Kac module, with the transposed action built
/// directly (one matrix held at a time); this is what the simple-quotient
/// construction consumes on large inputs.
pub fn kac_dual_module(
    algebra: &Arc<LieSuperalgebra>,
    lambda: &Weight,
) -> Result<Module, ModuleError> {
    let layout = KacLayout::new(algebra, lambda)?;
    let dim = layout.dim;
    let (parity, z_degree, weights) = layout.metadata();
    let mut actions = Vec::with_capacity(algebra.dim());
    for e in 0..algebra.dim() {
        let odd_e = algebra.parity(e).is_odd();
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
        for idx in 0..dim {
            let (mask, j) = layout.split(idx);
            let col = layout.act(e, mask, j);
            for (i, c) in col.iter() {
                // (e . delta_i)(b_idx) = -(-1)^(|e||b_i|) A[i][idx]
                let sign = if odd_e && parity[*i].is_odd() { 1i64 } else { -1 };
                rows[*i].push((idx, c * rat(sign)));
            }
        }
        actions.push(ActionMatrix::from_cols(
            dim,
            rows.into_iter().map(SparseVec::from_entries).collect(),
        ));
    }
    let neg_weights = weights.iter().map(|w| w.neg()).collect();
    let neg_z = z_degree.iter().map(|z| -z).collect();
    Ok(Module::new(
        algebra.clone(),
        parity,
        neg_z,
        neg_weights,
        actions,
        format!("dual(kac:{lambda})"),
    ))
}

/// The socle span inside the contragredient of a highest-weight module:
/// the cyclic span of the top dual functional. That functional is a lowest
/// weight vector there (every lowering operator pushes weights further from
/// the top), so the span is its closure under the simple raising operators
/// alone.
fn socle_of_dual(kdual: &Module, lambda: &Weight) -> Result<exact_linalg::Subspace, ModuleError> {
    let neg = lambda.neg();
    let tops: Vec<usize> = (0..kdual.dim())
        .filter(|&i| kdual.weight(i) == &neg)
        .collect();
    if tops.len() != 1 {
        return Err(ModuleError::Inconsistent(format!(
            "expected a unique top-weight line, found {}",
            tops.len()
        )));
    }
    let raisers = kdual
        .algebra()
        .simple_raising_indices(superalg_core::AlgebraPart::Full)
        .to_vec();
    Ok(closure_with_ops(kdual, [SparseVec::unit(tops[0])], &raisers))
}

/// The finite-dimensional simple module with highest weight `lambda`.
///
/// Computed without materializing the maximal submodule: the cyclic span of
/// the top dual functional inside the contragredient Kac module is the socle
/// there, i.e. the contragredient of the simple quotient; dualizing it back
/// yields the simple module. Checked: the result has a one-dimensional space
/// of singular vectors, of weight `lambda`.
pub fn simple_module(algebra: &Arc<LieSuperalgebra>, lambda: &Weight) -> Result<Module, ModuleError> {
    let kdual = kac_dual_module(algebra, lambda)?;
    let socle = socle_of_dual(&kdual, lambda)?;
    let socle_module = submodule_module(&kdual, &socle)?;
    drop(kdual);
    let mut simple = dual_module(&socle_module);
    simple.set_descriptor(format!("hw:{lambda}"));

    let sing = singular_vectors(&simple, AlgebraPart::Full);
    let ok = sing.len() == 1
        && sing[0].0 == *lambda
        && sing[0].1.len() == 1;
    if !ok {
        return Err(ModuleError::Inconsistent(format!(
            "highest-weight module for {lambda} has unexpected singular vectors"
        )));
    }
    Ok(simple)
}

/// Highest weight of the contragredient of the simple module, computed from
/// the socle span alone (no action matrices for the quotient are built).
/// The highest weight is the lexicographic maximum of the weight support,
/// since every positive root is lexicographically positive.
pub fn dual_highest_weight(
    algebra: &Arc<LieSuperalgebra>,
    lambda: &Weight,
) -> Result<Weight, ModuleError> {
    let kdual = kac_dual_module(algebra, lambda)?;
    let socle = socle_of_dual(&kdual, lambda)?;
    socle
        .basis_rows()
        .iter()
        .map(|r| kdual.weight(r.leading().expect("nonzero basis row")).clone())
        .max()
        .ok_or_else(|| ModuleError::Inconsistent("empty socle".into()))
}
