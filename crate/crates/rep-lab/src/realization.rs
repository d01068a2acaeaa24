use std::sync::Arc;

use exact_linalg::{rat, Rational, SparseVec};
use num_traits::Zero;
use superalg_core::{AlgebraKind, LieSuperalgebra, Parity, Weight};

use crate::action::ActionMatrix;
use crate::module::{Module, ModuleError};

/// Monomial basis element `z^a theta_S` with `a + |S| = m - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Monomial {
    a: usize,
    set: u32,
}

/// The monomial model of the simple module with highest weight
/// `-eps_m + eps_{m+1}` over gl(m|1): polynomials in one even variable `z`
/// and Grassmann variables `theta_1..theta_m`, truncated to total degree
/// `m - 1`, with the action twisted by the supertrace so that the identity
/// matrix acts as zero. Dimension `2^m - 1`.
pub fn realization_module(gl: &Arc<LieSuperalgebra>, m: usize) -> Result<Module, ModuleError> {
    assert_eq!(gl.kind(), AlgebraKind::Gl);
    assert_eq!(gl.m(), m);
    assert_eq!(gl.n(), 1);
    if m < 2 {
        return Err(ModuleError::Inconsistent("the realization needs m >= 2".into()));
    }
    let mut basis: Vec<Monomial> = Vec::new();
    for a in 0..m {
        let want = m - 1 - a;
        for set in 0u32..(1 << m) {
            if set.count_ones() as usize == want {
                basis.push(Monomial { a, set });
            }
        }
    }
    let dim = basis.len();
    debug_assert_eq!(dim, (1 << m) - 1);
    let index_of = |mono: Monomial| -> usize { basis.iter().position(|&b| b == mono).unwrap() };

    // theta_i wedge (left multiplication), 1-based i.
    let theta_mul = |i: usize, mono: Monomial| -> Option<(Monomial, i64)> {
        let bit = 1u32 << (i - 1);
        if mono.set & bit != 0 {
            return None;
        }
        let below = (mono.set & (bit - 1)).count_ones();
        let sign = if below % 2 == 0 { 1 } else { -1 };
        Some((Monomial { a: mono.a, set: mono.set | bit }, sign))
    };
    // d/d theta_i (odd derivation acting from the left), 1-based i.
    let theta_del = |i: usize, mono: Monomial| -> Option<(Monomial, i64)> {
        let bit = 1u32 << (i - 1);
        if mono.set & bit == 0 {
            return None;
        }
        let below = (mono.set & (bit - 1)).count_ones();
        let sign = if below % 2 == 0 { 1 } else { -1 };
        Some((Monomial { a: mono.a, set: mono.set & !bit }, sign))
    };

    let mut actions: Vec<ActionMatrix> = Vec::with_capacity(gl.dim());
    for e in 0..gl.dim() {
        let (i, j) = match gl.off_diag_position(e) {
            Some(p) => p,
            None => {
                // Diagonal E_kk: k-th Cartan position in lex order.
                let k = gl
                    .cartan_indices()
                    .iter()
                    .position(|&c| c == e)
                    .expect("diagonal basis element")
                    + 1;
                (k, k)
            }
        };
        let mut cols = Vec::with_capacity(dim);
        for &mono in &basis {
            let mut entries: Vec<(usize, Rational)> = Vec::new();
            if i <= m && j <= m {
                // theta_i d/d theta_j - delta_ij
                if let Some((mid, s1)) = theta_del(j, mono) {
                    if let Some((out, s2)) = theta_mul(i, mid) {
                        entries.push((index_of(out), rat(s1 * s2)));
                    }
                }
                if i == j {
                    entries.push((index_of(mono), rat(-1)));
                }
            } else if i <= m {
                // E_{i,m+1}: theta_i d/dz
                if mono.a >= 1 {
                    let mid = Monomial { a: mono.a - 1, set: mono.set };
                    if let Some((out, s)) = theta_mul(i, mid) {
                        entries.push((index_of(out), rat(mono.a as i64 * s)));
                    }
                }
            } else if j <= m {
                // E_{m+1,j}: z d/d theta_j
                if let Some((mid, s)) = theta_del(j, mono) {
                    let out = Monomial { a: mid.a + 1, set: mid.set };
                    entries.push((index_of(out), rat(s)));
                }
            } else {
                // E_{m+1,m+1}: z d/dz + 1
                entries.push((index_of(mono), rat(mono.a as i64 + 1)));
            }
            cols.push(SparseVec::from_entries(entries));
        }
        actions.push(ActionMatrix::from_cols(dim, cols));
    }

    let mut parity = Vec::with_capacity(dim);
    let mut z_degree = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for &mono in &basis {
        parity.push(if mono.set.count_ones() % 2 == 0 { Parity::Even } else { Parity::Odd });
        z_degree.push(mono.a as i64 + 1);
        let mut labels = Vec::with_capacity(m + 1);
        for i in 1..=m {
            let present = mono.set & (1 << (i - 1)) != 0;
            labels.push(if present { Rational::zero() } else { rat(-1) });
        }
        labels.push(rat(mono.a as i64 + 1));
        weights.push(Weight::new(labels));
    }

    Ok(Module::new(
        gl.clone(),
        parity,
        z_degree,
        weights,
        actions,
        format!("real:{m}"),
    ))
}
