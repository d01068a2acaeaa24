use std::collections::BTreeMap;

use exact_linalg::{kernel_basis, Rational, SparseRationalMatrix, SparseVec, Subspace};
use superalg_core::{AlgebraPart, Weight};

use crate::module::{weight_blocks, Module, ModuleError};

/// Basis indices grouped by weight.
pub fn weight_decomposition(module: &Module) -> BTreeMap<Weight, Vec<usize>> {
    weight_blocks(module)
}

/// Kernel of the stacked operators restricted to a span of basis indices.
/// Returns ambient vectors.
fn block_kernel(module: &Module, block: &[usize], ops: &[usize]) -> Vec<SparseVec> {
    if block.is_empty() {
        return Vec::new();
    }
    let mut row_ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
    for (opi, &e) in ops.iter().enumerate() {
        for (bpos, &amb) in block.iter().enumerate() {
            for (target, c) in module.action(e).col(amb).iter() {
                let next = row_ids.len();
                let row = *row_ids.entry((opi, *target)).or_insert(next);
                triplets.push((row, bpos, c.clone()));
            }
        }
    }
    if triplets.is_empty() {
        return block.iter().map(|&amb| SparseVec::unit(amb)).collect();
    }
    let rows = row_ids.len();
    let matrix = SparseRationalMatrix::from_triplets(rows, block.len(), triplets);
    kernel_basis(&matrix)
        .into_iter()
        .map(|combo| {
            SparseVec::from_entries(combo.iter().map(|(bpos, c)| (block[*bpos], c.clone())))
        })
        .collect()
}

/// Joint kernel of the positive simple root vectors of the chosen part,
/// grouped by weight. These generate the whole nilpotent part, so the
/// result is the space of singular (primitive) vectors.
pub fn singular_vectors(module: &Module, part: AlgebraPart) -> Vec<(Weight, Vec<SparseVec>)> {
    let ops = module.algebra().simple_raising_indices(part).to_vec();
    let mut out = Vec::new();
    for (w, block) in weight_blocks(module) {
        let vs = block_kernel(module, &block, &ops);
        if !vs.is_empty() {
            out.push((w, vs));
        }
    }
    out
}

/// Joint kernel of every non-Cartan generator of the chosen part. Invariant
/// vectors necessarily have weight zero, so only that block is scanned.
pub fn invariants(module: &Module, part: AlgebraPart) -> Subspace {
    let alg = module.algebra();
    let ops: Vec<usize> = alg
        .part_indices(part)
        .into_iter()
        .filter(|&i| alg.off_diag_position(i).is_some())
        .collect();
    let zero = Weight::zero(alg.size());
    let blocks = weight_blocks(module);
    let block = blocks.get(&zero).cloned().unwrap_or_default();
    Subspace::from_vectors(module.dim(), block_kernel(module, &block, &ops))
}

/// Span closure of the seeds under the listed action operators.
pub fn closure_with_ops(
    module: &Module,
    seeds: impl IntoIterator<Item = SparseVec>,
    ops: &[usize],
) -> Subspace {
    let mut sub = Subspace::zero(module.dim());
    let mut queue: Vec<SparseVec> = Vec::new();
    for s in seeds {
        let r = sub.reduce(&s);
        if !r.is_zero() {
            sub.insert(r.clone());
            queue.push(r);
        }
    }
    while let Some(v) = queue.pop() {
        for &e in ops {
            let image = module.action(e).apply(&v);
            let r = sub.reduce(&image);
            if !r.is_zero() {
                sub.insert(r.clone());
                queue.push(r);
            }
        }
    }
    sub
}

/// Smallest invariant subspace containing the seeds.
pub fn closure(module: &Module, seeds: impl IntoIterator<Item = SparseVec>) -> Subspace {
    let ops: Vec<usize> = (0..module.algebra().dim()).collect();
    closure_with_ops(module, seeds, &ops)
}

/// Fixpoint closure of `span{v}` under all action matrices.
pub fn cyclic_submodule(module: &Module, v: &SparseVec) -> Subspace {
    closure(module, [v.clone()])
}

/// `span { e . u : e in the algebra, u in the module }`.
pub fn action_span(module: &Module) -> Subspace {
    let mut sub = Subspace::zero(module.dim());
    for e in 0..module.algebra().dim() {
        for j in 0..module.dim() {
            let col = module.action(e).col(j);
            if !col.is_zero() {
                sub.insert(col.clone());
            }
        }
    }
    sub
}

/// Largest invariant subspace contained in `k0`: the fixpoint of
/// `K_{t+1} = { u in K_t : e.u in K_t for all basis e }`.
pub fn largest_invariant_subspace(module: &Module, k0: &Subspace) -> Subspace {
    let mut current = k0.clone();
    loop {
        let kdim = current.dim();
        if kdim == 0 {
            return current;
        }
        let mut row_ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
        for e in 0..module.algebra().dim() {
            for (i, row) in current.basis_rows().iter().enumerate() {
                let resid = current.reduce(&module.action(e).apply(row));
                for (amb, c) in resid.iter() {
                    let next = row_ids.len();
                    let rid = *row_ids.entry((e, *amb)).or_insert(next);
                    triplets.push((rid, i, c.clone()));
                }
            }
        }
        if triplets.is_empty() {
            return current;
        }
        let matrix = SparseRationalMatrix::from_triplets(row_ids.len(), kdim, triplets);
        let combos = kernel_basis(&matrix);
        let mut next = Subspace::zero(module.dim());
        for combo in &combos {
            let mut vec = SparseVec::new();
            for (i, c) in combo.iter() {
                vec = vec.add_scaled(&current.basis_rows()[*i], c);
            }
            next.insert(vec);
        }
        if next.dim() == kdim {
            return next;
        }
        current = next;
    }
}

fn uniform_metadata(
    module: &Module,
    row: &SparseVec,
) -> Result<(Weight, superalg_core::Parity, i64), ModuleError> {
    let mut it = row.iter();
    let (first, _) = it.next().ok_or_else(|| {
        ModuleError::Inconsistent("zero vector in subspace basis".into())
    })?;
    let w = module.weight(*first).clone();
    let p = module.parity(*first);
    let z = module.z_degree(*first);
    for (i, _) in it {
        if module.weight(*i) != &w || module.parity(*i) != p || module.z_degree(*i) != z {
            return Err(ModuleError::Inconsistent(
                "subspace basis vector mixes weights or gradings".into(),
            ));
        }
    }
    Ok((w, p, z))
}

/// The module structure on an invariant subspace, in the basis of its
/// reduced-echelon rows (each row must be homogeneous in weight and grading,
/// which holds for any subspace produced by closures of weight vectors).
pub fn submodule_module(module: &Module, sub: &Subspace) -> Result<Module, ModuleError> {
    let dim = sub.dim();
    let mut parity = Vec::with_capacity(dim);
    let mut z_degree = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for row in sub.basis_rows() {
        let (w, p, z) = uniform_metadata(module, row)?;
        parity.push(p);
        z_degree.push(z);
        weights.push(w);
    }
    let mut actions = Vec::with_capacity(module.algebra().dim());
    for e in 0..module.algebra().dim() {
        let mut cols = Vec::with_capacity(dim);
        for row in sub.basis_rows() {
            let image = module.action(e).apply(row);
            let coords = sub.coordinates(&image).ok_or(ModuleError::NotInvariant)?;
            cols.push(coords);
        }
        actions.push(crate::action::ActionMatrix::from_cols(dim, cols));
    }
    Ok(Module::new(
        module.algebra().clone(),
        parity,
        z_degree,
        weights,
        actions,
        format!("sub[{dim}]({})", module.descriptor()),
    ))
}

/// Quotient by an invariant subspace (checked). The quotient basis consists
/// of the standard basis vectors away from the subspace pivots.
pub fn quotient_module(module: &Module, sub: &Subspace) -> Result<Module, ModuleError> {
    // Invariance check.
    for row in sub.basis_rows() {
        for e in 0..module.algebra().dim() {
            if !sub.contains(&module.action(e).apply(row)) {
                return Err(ModuleError::NotInvariant);
            }
        }
    }
    let pivots = sub.pivot_cols();
    let complement: Vec<usize> = (0..module.dim()).filter(|i| !pivots.contains(i)).collect();
    let pos_of: BTreeMap<usize, usize> =
        complement.iter().enumerate().map(|(q, &amb)| (amb, q)).collect();
    let dim = complement.len();
    let mut actions = Vec::with_capacity(module.algebra().dim());
    for e in 0..module.algebra().dim() {
        let mut cols = Vec::with_capacity(dim);
        for &amb in &complement {
            let image = module.action(e).apply(&SparseVec::unit(amb));
            let resid = sub.reduce(&image);
            cols.push(SparseVec::from_entries(
                resid.iter().map(|(i, c)| (pos_of[i], c.clone())),
            ));
        }
        actions.push(crate::action::ActionMatrix::from_cols(dim, cols));
    }
    Ok(Module::new(
        module.algebra().clone(),
        complement.iter().map(|&i| module.parity(i)).collect(),
        complement.iter().map(|&i| module.z_degree(i)).collect(),
        complement.iter().map(|&i| module.weight(i).clone()).collect(),
        actions,
        format!("quot[{dim}]({})", module.descriptor()),
    ))
}
