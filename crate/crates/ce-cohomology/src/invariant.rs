use std::collections::BTreeMap;

use exact_linalg::{kernel_basis, Rational, SparseRationalMatrix, SparseVec};
use rep_lab::{normalize_tuple, PowerKind};
use superalg_core::AlgebraPart;

use crate::cochain::{Cochain, CochainComplex};

/// Applies an even algebra element to a cochain through the coadjoint
/// action: `(e . f)(u) = e . (f(u)) - f(e . u)`.
pub fn coadjoint_apply(complex: &CochainComplex, e: usize, f: &Cochain) -> Cochain {
    let alg = complex.algebra();
    assert!(
        !alg.parity(e).is_odd(),
        "cochain invariance only uses even generators"
    );
    let module = complex.module();
    let mut out: BTreeMap<Vec<usize>, SparseVec> = BTreeMap::new();
    let mut add = |tuple: Vec<usize>, val: SparseVec| {
        if val.is_zero() {
            return;
        }
        let slot = out.entry(tuple).or_default();
        *slot = slot.add(&val);
    };
    // First term: e . f(u) on the support of f.
    for (tuple, val) in f {
        add(tuple.clone(), module.action(e).apply(val));
    }
    // Second term: -f(e . u) for every u reachable backwards from supp f.
    // Candidates: replace one slot of a support tuple by a generator that
    // brackets onto it.
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for tuple in f.keys() {
        for (slot, &target) in tuple.iter().enumerate() {
            for (u, _) in alg.bracket_into(e, target) {
                let mut raw = tuple.clone();
                raw[slot] = *u;
                if let Some((norm, _)) =
                    normalize_tuple(&raw, |i| alg.parity(i), PowerKind::SuperExterior)
                {
                    if !candidates.contains(&norm) {
                        candidates.push(norm);
                    }
                }
            }
        }
    }
    for u in candidates {
        // f(e . u) = sum over slots of f(u with that slot bracketed).
        // e is even, so no Koszul prefix signs appear.
        let mut val = SparseVec::new();
        let mut raw = u.clone();
        for slot in 0..u.len() {
            let original = raw[slot];
            for (y, c) in alg.bracket_basis(e, original).iter() {
                raw[slot] = *y;
                let contrib = crate::differential::eval_cochain(complex, f, &raw);
                if !contrib.is_zero() {
                    val = val.add_scaled(&contrib, c);
                }
            }
            raw[slot] = original;
        }
        add(u, val.neg());
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Basis of the invariant subcomplex in degree `n`: the total-weight-zero
/// block intersected with the kernels of the simple raising operators of
/// the even part. (Complete reducibility upgrades "weight zero and killed
/// by raising operators" to full invariance; the lowering operators are
/// checked explicitly by `verify_invariant`.)
pub fn invariant_basis(complex: &CochainComplex, n: usize) -> Vec<Cochain> {
    let alg = complex.algebra();
    let keys = complex.zero_weight_keys(n);
    if keys.is_empty() {
        return Vec::new();
    }
    let raisers = alg.simple_raising_indices(AlgebraPart::Even).to_vec();

    let mut row_ids: BTreeMap<(usize, usize, Vec<usize>), usize> = BTreeMap::new();
    let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
    for (col, &(t, v)) in keys.iter().enumerate() {
        let unit: Cochain = {
            let mut c = Cochain::new();
            c.insert(complex.space(n).tuples[t].clone(), SparseVec::unit(v));
            c
        };
        for (ri, &e) in raisers.iter().enumerate() {
            let image = coadjoint_apply(complex, e, &unit);
            for (tuple, val) in image {
                for (w, c) in val.iter() {
                    let next = row_ids.len();
                    let row = *row_ids
                        .entry((ri, *w, tuple.clone()))
                        .or_insert(next);
                    triplets.push((row, col, c.clone()));
                }
            }
        }
    }
    let combos = if triplets.is_empty() {
        (0..keys.len()).map(SparseVec::unit).collect()
    } else {
        let matrix = SparseRationalMatrix::from_triplets(row_ids.len(), keys.len(), triplets);
        kernel_basis(&matrix)
    };
    combos
        .into_iter()
        .map(|combo| {
            let mut cochain = Cochain::new();
            for (pos, c) in combo.iter() {
                let (t, v) = keys[*pos];
                let tuple = complex.space(n).tuples[t].clone();
                let slot = cochain.entry(tuple).or_default();
                *slot = slot.add(&SparseVec::single(v, c.clone()));
            }
            cochain
        })
        .collect()
}

/// Verifies full invariance of a cochain (raising and lowering operators of
/// the even part, plus weight zero by construction).
pub fn verify_invariant(complex: &CochainComplex, f: &Cochain) -> bool {
    let alg = complex.algebra();
    alg.part_indices(AlgebraPart::Even)
        .into_iter()
        .filter(|&e| alg.off_diag_position(e).is_some())
        .all(|e| coadjoint_apply(complex, e, f).is_empty())
}
