
use exact_linalg::{kernel_basis, rat, Rational, SparseRationalMatrix, SparseVec, Subspace};
use serde::Serialize;
use superalg_core::{AlgebraKind, AlgebraPart, Weight};

use crate::analysis::{
    action_span, closure_with_ops, cyclic_submodule, invariants, quotient_module,
    singular_vectors, submodule_module,
};
use crate::highest::simple_module;
use crate::module::{dual_module, restrict_to_even, Module, ModuleError};

use crate::slk::weyl_dim;

/// Isomorphism class of a simple module of the even part: per-block label
/// differences plus the eigenvalue of the grading element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct L0Class {
    pub block1_diffs: Vec<String>,
    pub block2_diffs: Vec<String>,
    pub d_eigenvalue: String,
}

impl L0Class {
    pub fn from_weight(w: &Weight, m: usize) -> L0Class {
        let (a, b) = w.block_diffs(m);
        L0Class {
            block1_diffs: a.iter().map(|x| x.to_string()).collect(),
            block2_diffs: b.iter().map(|x| x.to_string()).collect(),
            d_eigenvalue: w.d_eigenvalue(m).to_string(),
        }
    }
}

/// Decomposes a completely reducible restriction to the even part into
/// simple constituents: classes keyed by highest weight, multiplicities from
/// singular-vector counts, with the total dimension recomputed through the
/// Weyl formula as a consistency check.
pub fn decompose_l0(module: &Module) -> Result<Vec<(Weight, L0Class, usize)>, ModuleError> {
    let restricted;
    let even_view = if module.algebra().kind() == AlgebraKind::EvenPart {
        module
    } else {
        restricted = restrict_to_even(module);
        &restricted
    };
    let m = even_view.algebra().m();
    let sing = singular_vectors(even_view, AlgebraPart::Full);
    let mut out: Vec<(Weight, L0Class, usize)> = Vec::new();
    let mut total = Rational::from_integer(0.into());
    for (w, vecs) in sing {
        let (d1, d2) = w.block_diffs(m);
        let dim1 = weyl_dim(&d1).ok_or_else(|| {
            ModuleError::Inconsistent(format!("singular weight {w} is not dominant"))
        })?;
        let dim2 = weyl_dim(&d2).ok_or_else(|| {
            ModuleError::Inconsistent(format!("singular weight {w} is not dominant"))
        })?;
        total += dim1 * dim2 * rat(vecs.len() as i64);
        out.push((w.clone(), L0Class::from_weight(&w, m), vecs.len()));
    }
    if total != rat(even_view.dim() as i64) {
        return Err(ModuleError::Inconsistent(format!(
            "constituent dimensions sum to {total}, expected {}",
            even_view.dim()
        )));
    }
    Ok(out)
}

/// Maximal proper submodule of a highest-weight module: the annihilator of
/// the cyclic span of the top dual functional in the contragredient.
fn maximal_submodule(hw_module: &Module, top_weight: &Weight) -> Result<Subspace, ModuleError> {
    let tops: Vec<usize> = (0..hw_module.dim())
        .filter(|&i| hw_module.weight(i) == top_weight)
        .collect();
    if tops.len() != 1 {
        return Err(ModuleError::Inconsistent(
            "highest-weight module must have a one-dimensional top layer".into(),
        ));
    }
    let dual = dual_module(hw_module);
    // The top dual functional is a lowest weight vector of the dual, so its
    // cyclic span is the closure under the simple raising operators.
    let raisers = dual
        .algebra()
        .simple_raising_indices(superalg_core::AlgebraPart::Full)
        .to_vec();
    let span = closure_with_ops(&dual, [SparseVec::unit(tops[0])], &raisers);
    // Kernel of the evaluation pairing against the dual span.
    let rows: Vec<SparseVec> = span.basis_rows().to_vec();
    let matrix = SparseRationalMatrix::from_rows(hw_module.dim(), rows);
    let vectors = kernel_basis(&matrix);
    Ok(Subspace::from_vectors(hw_module.dim(), vectors))
}

/// Jordan-Hoelder factors as a sorted multiset of highest weights.
///
/// Recursive peeling: take a singular vector of lexicographically largest
/// weight, split off the simple top of its cyclic span, and recurse into the
/// complement pieces. Dimensions strictly decrease, so this terminates; the
/// multiset is independent of the choices made.
pub fn composition_factors(module: &Module) -> Result<Vec<Weight>, ModuleError> {
    let mut factors = Vec::new();
    peel(module, &mut factors)?;
    factors.sort();
    Ok(factors)
}

fn peel(module: &Module, out: &mut Vec<Weight>) -> Result<(), ModuleError> {
    if module.dim() == 0 {
        return Ok(());
    }
    let sing = singular_vectors(module, AlgebraPart::Full);
    let (mu, vecs) = sing
        .into_iter()
        .max_by(|a, b| a.0.cmp(&b.0))
        .expect("a nonzero module has a singular vector");
    let v = &vecs[0];
    let y = cyclic_submodule(module, v);
    if y.dim() == module.dim() {
        // The module itself is a highest-weight module.
        let rad = maximal_submodule(module, &mu)?;
        out.push(mu);
        let sub = submodule_module(module, &rad)?;
        return peel(&sub, out);
    }
    let ymod = submodule_module(module, &y)?;
    let rad = maximal_submodule(&ymod, &mu)?;
    out.push(mu);
    let inner = submodule_module(&ymod, &rad)?;
    peel(&inner, out)?;
    let quot = quotient_module(module, &y)?;
    peel(&quot, out)
}

/// Report on a finite filtration of an indecomposable piece.
#[derive(Clone, Debug, Serialize)]
pub struct FiltrationReport {
    pub module: String,
    /// Dimensions along the chain, strictly decreasing to zero.
    pub chain_dims: Vec<usize>,
    /// Highest weights of the factors, top layer first.
    pub factor_weights: Vec<String>,
    pub summand_dims: Vec<usize>,
    pub direct_sum_verified: bool,
    pub socle_dim: usize,
    pub indecomposable: bool,
    /// An even-invariant vector exists outside the radical layer.
    pub l0_invariant_outside_radical: bool,
    pub notes: Vec<String>,
}

/// Dissects the super-symmetric square of the adjoint module of sl(3|2):
/// two simple direct summands split off along their singular vectors, and
/// the rest is an indecomposable self-dual piece with a one-dimensional
/// socle (the tensor Casimir line), a trivial top, and a simple middle
/// layer. The direct-sum hypothesis is verified by dimension bookkeeping
/// and reported, not assumed.
pub fn analyze_w_structure(module_s2: &Module) -> Result<FiltrationReport, ModuleError> {
    let alg = module_s2.algebra().clone();
    let mut notes = Vec::new();
    let sing = singular_vectors(module_s2, AlgebraPart::Full);
    let dual = dual_module(module_s2);
    let dual_sing = singular_vectors(&dual, AlgebraPart::Full);

    // A simple cyclic span splits off as a direct summand exactly when it
    // pairs nondegenerately with the matching singular span of the dual
    // (then the evaluation pairing provides the invariant projection).
    let mut summands: Vec<Subspace> = Vec::new();
    let mut summand_dims = Vec::new();
    let mut dual_span = Subspace::zero(module_s2.dim());
    for (wt, vecs) in &sing {
        if vecs.len() != 1 {
            notes.push(format!("singular weight {wt} has multiplicity {}", vecs.len()));
            continue;
        }
        let span = cyclic_submodule(module_s2, &vecs[0]);
        let smod = submodule_module(module_s2, &span)?;
        let inner_sing = singular_vectors(&smod, AlgebraPart::Full);
        let simple = inner_sing.len() == 1 && inner_sing[0].1.len() == 1;
        if !simple {
            continue;
        }
        let Some((_, dual_vecs)) = dual_sing.iter().find(|(dw, _)| dw == wt) else {
            continue;
        };
        let z = cyclic_submodule(&dual, &dual_vecs[0]);
        // Evaluation pairing between the dual span and the primal span.
        let pairing = SparseRationalMatrix::from_triplets(
            z.dim(),
            span.dim(),
            z.basis_rows().iter().enumerate().flat_map(|(i, phi)| {
                span.basis_rows()
                    .iter()
                    .enumerate()
                    .map(move |(j, u)| (i, j, phi.dot(u)))
            }),
        );
        if exact_linalg::rank(&pairing) == span.dim() {
            summand_dims.push(span.dim());
            summands.push(span);
            dual_span = dual_span.sum(&z);
        }
    }

    let w_space = Subspace::from_vectors(
        module_s2.dim(),
        kernel_basis(&SparseRationalMatrix::from_rows(
            module_s2.dim(),
            dual_span.basis_rows().to_vec(),
        )),
    );

    let mut sum = w_space.clone();
    for s in &summands {
        sum = sum.sum(s);
    }
    let direct_sum_verified = sum.dim() == module_s2.dim()
        && summand_dims.iter().sum::<usize>() + w_space.dim() == module_s2.dim();
    if !direct_sum_verified {
        notes.push("direct sum decomposition failed dimension bookkeeping".into());
    }

    let wmod = submodule_module(module_s2, &w_space)?;
    let socle = invariants(&wmod, AlgebraPart::Full);
    let w1 = action_span(&wmod);
    let w2_in_w1 = socle.basis_rows().iter().all(|r| w1.contains(r));
    // Socle = sum of the minimal submodules, i.e. of the singular spans that
    // are simple. A simple one-piece socle forces indecomposability.
    let w_sing = singular_vectors(&wmod, AlgebraPart::Full);
    let mut minimal_count = 0usize;
    for (_, vecs) in &w_sing {
        for v in vecs {
            let span = cyclic_submodule(&wmod, v);
            let smod = submodule_module(&wmod, &span)?;
            let inner = singular_vectors(&smod, AlgebraPart::Full);
            if inner.len() == 1 && inner[0].1.len() == 1 {
                minimal_count += 1;
            }
        }
    }
    let socle_simple = minimal_count == 1;

    // Middle layer W1/W2.
    let w1mod = submodule_module(&wmod, &w1)?;
    let socle_in_w1 = Subspace::from_vectors(
        w1mod.dim(),
        socle.basis_rows().iter().filter_map(|r| w1.coordinates(r)),
    );
    let middle = quotient_module(&w1mod, &socle_in_w1)?;
    let middle_sing = singular_vectors(&middle, AlgebraPart::Full);
    let middle_weight = middle_sing
        .iter()
        .max_by(|a, b| a.0.cmp(&b.0))
        .map(|(w, _)| w.clone())
        .ok_or_else(|| ModuleError::Inconsistent("middle layer is zero".into()))?;
    // The middle layer must be the simple module with that highest weight.
    let reference = simple_module(&alg, &middle_weight)?;
    if reference.dim() != middle.dim() || middle_sing.len() != 1 || middle_sing[0].1.len() != 1 {
        notes.push(format!(
            "middle layer (dim {}) differs from the simple module of weight {middle_weight} (dim {})",
            middle.dim(),
            reference.dim()
        ));
    }

    // Even-invariant vectors: the socle line plus one more outside W1.
    let even_inv = invariants(&wmod, AlgebraPart::Even);
    let outside = even_inv
        .basis_rows()
        .iter()
        .any(|r| !w1.contains(r));

    let top_dim = wmod.dim() - w1.dim();
    let report = FiltrationReport {
        module: module_s2.descriptor().to_string(),
        chain_dims: vec![wmod.dim(), w1.dim(), socle.dim(), 0],
        factor_weights: vec![
            Weight::zero(alg.size()).to_string(),
            middle_weight.to_string(),
            Weight::zero(alg.size()).to_string(),
        ],
        summand_dims,
        direct_sum_verified,
        socle_dim: socle.dim(),
        indecomposable: socle_simple,
        l0_invariant_outside_radical: outside,
        notes: {
            if top_dim != 1 {
                notes.push(format!("top layer has dimension {top_dim}, expected 1"));
            }
            if !w2_in_w1 {
                notes.push("socle is not contained in the action span".into());
            }
            notes
        },
    };
    Ok(report)
}
