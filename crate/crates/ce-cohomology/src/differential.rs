use std::collections::BTreeSet;

use exact_linalg::{rat, Rational, SparseRationalMatrix, SparseVec};
use rep_lab::{normalize_tuple, PowerKind};
use superalg_core::Parity;

use crate::cochain::{Cochain, CochainComplex};

/// Evaluates a cochain on an arbitrary (possibly unnormalized) tuple.
pub fn eval_cochain(complex: &CochainComplex, f: &Cochain, tuple: &[usize]) -> SparseVec {
    let alg = complex.algebra();
    match normalize_tuple(tuple, |i| alg.parity(i), PowerKind::SuperExterior) {
        Some((norm, sign)) => match f.get(&norm) {
            Some(v) => v.scale(&rat(sign)),
            None => SparseVec::new(),
        },
        None => SparseVec::new(),
    }
}

/// Koszul prefix sign `(-1)^(|x| (p_0 + ... + p_{i-1}))`.
fn prefix_sign(x: Parity, prefix: Parity) -> i64 {
    if x.is_odd() && prefix.is_odd() {
        -1
    } else {
        1
    }
}

/// The Chevalley-Eilenberg differential evaluated on one normalized tuple:
///
/// (df)(x_0..x_n) = sum_i +/- x_i . f(..x^_i..)
///                + sum_{i<j} +/- f(<x_i,x_j>, ..x^_i..x^_j..)
///
/// with the Koszul signs induced by moving arguments to the front.
pub fn eval_delta(complex: &CochainComplex, f: &Cochain, tuple: &[usize]) -> SparseVec {
    let alg = complex.algebra();
    let module = complex.module();
    let np1 = tuple.len();
    let mut acc = SparseVec::new();

    // Parity prefix sums.
    let mut prefix = Vec::with_capacity(np1 + 1);
    prefix.push(Parity::Even);
    for &x in tuple {
        let last = *prefix.last().unwrap();
        prefix.push(last + alg.parity(x));
    }

    for i in 0..np1 {
        let mut rest: Vec<usize> = Vec::with_capacity(np1 - 1);
        rest.extend_from_slice(&tuple[..i]);
        rest.extend_from_slice(&tuple[i + 1..]);
        let sign = rat(if i % 2 == 0 { 1 } else { -1 } * prefix_sign(alg.parity(tuple[i]), prefix[i]));
        let val = eval_cochain(complex, f, &rest);
        if !val.is_zero() {
            acc = acc.add_scaled(&module.action(tuple[i]).apply(&val), &sign);
        }
    }
    for i in 0..np1 {
        for j in i + 1..np1 {
            let pi = alg.parity(tuple[i]);
            let pj = alg.parity(tuple[j]);
            let mut s = if (i + j) % 2 == 0 { 1i64 } else { -1 };
            s *= prefix_sign(pi, prefix[i]);
            // (-1)^{|x_j| (P_{<j} - |x_i|)}
            s *= prefix_sign(pj, prefix[j] + pi);
            let bracket = alg.bracket_basis(tuple[i], tuple[j]);
            if bracket.is_zero() {
                continue;
            }
            let mut rest: Vec<usize> = Vec::with_capacity(np1 - 1);
            rest.push(0); // slot for the bracket component
            for (t, &x) in tuple.iter().enumerate() {
                if t != i && t != j {
                    rest.push(x);
                }
            }
            for (k, c) in bracket.iter() {
                rest[0] = *k;
                let val = eval_cochain(complex, f, &rest);
                if !val.is_zero() {
                    acc = acc.add_scaled(&val, &(c * rat(s)));
                }
            }
        }
    }
    acc
}

/// Candidate degree-(n+1) tuples on which `delta f` can be nonzero, given
/// the support of `f`: insert one generator, or blow one slot up into a
/// bracketing pair.
fn delta_candidates(complex: &CochainComplex, f: &Cochain) -> BTreeSet<Vec<usize>> {
    let alg = complex.algebra();
    let mut out = BTreeSet::new();
    for tuple in f.keys() {
        for e in 0..alg.dim() {
            let mut raw = Vec::with_capacity(tuple.len() + 1);
            raw.push(e);
            raw.extend_from_slice(tuple);
            if let Some((norm, _)) =
                normalize_tuple(&raw, |i| alg.parity(i), PowerKind::SuperExterior)
            {
                out.insert(norm);
            }
        }
        for (slot, &target) in tuple.iter().enumerate() {
            for &(a, b) in alg.pairs_bracketing_to(target) {
                let mut raw = Vec::with_capacity(tuple.len() + 1);
                raw.push(a);
                raw.push(b);
                for (t, &x) in tuple.iter().enumerate() {
                    if t != slot {
                        raw.push(x);
                    }
                }
                if let Some((norm, _)) =
                    normalize_tuple(&raw, |i| alg.parity(i), PowerKind::SuperExterior)
                {
                    out.insert(norm);
                }
            }
        }
    }
    out
}

/// `delta f` of a sparse cochain of degree `n`, as a degree-(n+1) cochain.
pub fn delta_apply(complex: &CochainComplex, _n: usize, f: &Cochain) -> Cochain {
    let mut out = Cochain::new();
    for candidate in delta_candidates(complex, f) {
        let val = eval_delta(complex, f, &candidate);
        if !val.is_zero() {
            out.insert(candidate, val);
        }
    }
    out
}

/// Full matrix of `delta: C^n -> C^(n+1)` in flat coordinates.
pub fn assemble_delta(complex: &CochainComplex, n: usize) -> SparseRationalMatrix {
    let alg = complex.algebra();
    let module = complex.module();
    let dim_v = module.dim();
    let source = complex.space(n);
    let target = complex.space(n + 1);
    let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();

    for (u_id, u) in target.tuples.iter().enumerate() {
        let np1 = u.len();
        let mut prefix = Vec::with_capacity(np1 + 1);
        prefix.push(Parity::Even);
        for &x in u {
            let last = *prefix.last().unwrap();
            prefix.push(last + alg.parity(x));
        }
        // Action terms.
        for i in 0..np1 {
            let mut rest: Vec<usize> = Vec::with_capacity(np1 - 1);
            rest.extend_from_slice(&u[..i]);
            rest.extend_from_slice(&u[i + 1..]);
            // rest is normalized (subtuple of a sorted tuple), sign +1.
            let Some(&t_id) = source.tuple_index.get(&rest) else { continue };
            let sign =
                rat(if i % 2 == 0 { 1 } else { -1 } * prefix_sign(alg.parity(u[i]), prefix[i]));
            for w in 0..dim_v {
                for (w2, c) in module.action(u[i]).col(w).iter() {
                    triplets.push((
                        complex.flat_index(n + 1, u_id, *w2),
                        complex.flat_index(n, t_id, w),
                        c * &sign,
                    ));
                }
            }
        }
        // Bracket terms.
        for i in 0..np1 {
            for j in i + 1..np1 {
                let pi = alg.parity(u[i]);
                let pj = alg.parity(u[j]);
                let mut s = if (i + j) % 2 == 0 { 1i64 } else { -1 };
                s *= prefix_sign(pi, prefix[i]);
                s *= prefix_sign(pj, prefix[j] + pi);
                let bracket = alg.bracket_basis(u[i], u[j]);
                if bracket.is_zero() {
                    continue;
                }
                let mut raw: Vec<usize> = Vec::with_capacity(np1 - 1);
                raw.push(0);
                for (t, &x) in u.iter().enumerate() {
                    if t != i && t != j {
                        raw.push(x);
                    }
                }
                for (k, c) in bracket.iter() {
                    raw[0] = *k;
                    let Some((norm, nsign)) =
                        normalize_tuple(&raw, |x| alg.parity(x), PowerKind::SuperExterior)
                    else {
                        continue;
                    };
                    let Some(&t_id) = source.tuple_index.get(&norm) else { continue };
                    let coeff = c * rat(s * nsign);
                    for w in 0..dim_v {
                        triplets.push((
                            complex.flat_index(n + 1, u_id, w),
                            complex.flat_index(n, t_id, w),
                            coeff.clone(),
                        ));
                    }
                }
            }
        }
    }
    SparseRationalMatrix::from_triplets(target.dim, source.dim, triplets)
}
