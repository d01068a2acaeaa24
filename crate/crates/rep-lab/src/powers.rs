use std::collections::BTreeMap;

use exact_linalg::{rat, SparseVec};
use superalg_core::{koszul_sign, Parity, Weight};

use crate::action::ActionMatrix;
use crate::koszul::{enumerate_tuples, normalize_tuple, PowerKind};
use crate::module::Module;

/// Tensor product with the Koszul sign:
/// `x.(a ⊗ b) = (x.a) ⊗ b + (-1)^(|x||a|) a ⊗ (x.b)`.
pub fn tensor(a: &Module, b: &Module) -> Module {
    assert_eq!(
        a.algebra().descriptor(),
        b.algebra().descriptor(),
        "tensor factors live over different algebras"
    );
    let alg = a.algebra().clone();
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    let idx = |i: usize, j: usize| i * db + j;

    let mut parity = Vec::with_capacity(dim);
    let mut z_degree = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for i in 0..da {
        for j in 0..db {
            parity.push(a.parity(i) + b.parity(j));
            z_degree.push(a.z_degree(i) + b.z_degree(j));
            weights.push(a.weight(i).add(b.weight(j)));
        }
    }

    let actions = (0..alg.dim())
        .map(|e| {
            let mut cols = vec![SparseVec::new(); dim];
            for i in 0..da {
                for j in 0..db {
                    let mut col = Vec::new();
                    for (i2, c) in a.action(e).col(i).iter() {
                        col.push((idx(*i2, j), c.clone()));
                    }
                    let sign = rat(koszul_sign(alg.parity(e), a.parity(i)));
                    for (j2, c) in b.action(e).col(j).iter() {
                        col.push((idx(i, *j2), c * &sign));
                    }
                    cols[idx(i, j)] = SparseVec::from_entries(col);
                }
            }
            ActionMatrix::from_cols(dim, cols)
        })
        .collect();

    Module::new(
        alg,
        parity,
        z_degree,
        weights,
        actions,
        format!("tensor({},{})", a.descriptor(), b.descriptor()),
    )
}

fn graded_power(module: &Module, k: usize, kind: PowerKind, tag: &str) -> Module {
    let alg = module.algebra().clone();
    let parity_of = |i: usize| module.parity(i);
    let tuples = enumerate_tuples(module.dim(), k, parity_of, kind);
    let index: BTreeMap<Vec<usize>, usize> =
        tuples.iter().cloned().enumerate().map(|(p, t)| (t, p)).collect();
    let dim = tuples.len();

    let mut parity = Vec::with_capacity(dim);
    let mut z_degree = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for t in &tuples {
        let mut p = Parity::Even;
        let mut z = 0i64;
        let mut w = Weight::zero(alg.size());
        for &i in t {
            p = p + module.parity(i);
            z += module.z_degree(i);
            w = w.add(module.weight(i));
        }
        parity.push(p);
        z_degree.push(z);
        weights.push(w);
    }

    // The action extends as the unique super derivation.
    let actions = (0..alg.dim())
        .map(|e| {
            let pe = alg.parity(e);
            let mut cols = vec![SparseVec::new(); dim];
            for (pos, t) in tuples.iter().enumerate() {
                let mut entries: Vec<(usize, exact_linalg::Rational)> = Vec::new();
                let mut prefix = Parity::Even;
                for (slot, &i) in t.iter().enumerate() {
                    let lead = rat(koszul_sign(pe, prefix));
                    for (target, c) in module.action(e).col(i).iter() {
                        let mut raw = t.clone();
                        raw[slot] = *target;
                        if let Some((norm, sign)) = normalize_tuple(&raw, parity_of, kind) {
                            let out = index[&norm];
                            entries.push((out, c * &lead * rat(sign)));
                        }
                    }
                    prefix = prefix + module.parity(i);
                }
                cols[pos] = SparseVec::from_entries(entries);
            }
            ActionMatrix::from_cols(dim, cols)
        })
        .collect();

    Module::new(
        alg,
        parity,
        z_degree,
        weights,
        actions,
        format!("{tag}{k}({})", module.descriptor()),
    )
}

/// Super-symmetric power `S_k(M, eps)`: weakly sorted monomials, even
/// factors may repeat, odd factors are strict.
pub fn sym_power_eps(module: &Module, k: usize) -> Module {
    graded_power(module, k, PowerKind::SuperSymmetric, "sym")
}

/// Super-exterior power: the mirror image (odd factors may repeat).
pub fn ext_power_eps(module: &Module, k: usize) -> Module {
    graded_power(module, k, PowerKind::SuperExterior, "ext")
}
