use std::collections::BTreeMap;
use std::sync::Arc;

use rep_lab::{
    adjoint_module, decompose_l0, ext_power_eps, kac_module, sl_weight_multiplicities, Module,
    ModuleError,
};
use superalg_core::{AlgebraKind, LieSuperalgebra, Weight};

/// The even-part constituent classes of the super-exterior square of the
/// adjoint module, as integer label vectors with their grading eigenvalue.
#[derive(Clone, Debug)]
pub struct L0ClassTable {
    pub algebra: Arc<LieSuperalgebra>,
    /// Highest weights of the constituents (possibly repeated classes are
    /// stored once).
    pub classes: Vec<Vec<i64>>,
    /// Total constituent count including multiplicities.
    pub constituents: usize,
    /// Per-degree weight multiplicities of the Grassmann algebra on the
    /// degree +1 generators.
    grassmann: Vec<BTreeMap<Vec<i64>, i64>>,
}

fn to_int_labels(w: &Weight) -> Option<Vec<i64>> {
    w.labels()
        .iter()
        .map(|x| {
            if x.is_integer() {
                x.to_integer().try_into().ok()
            } else {
                None
            }
        })
        .collect()
}

impl L0ClassTable {
    pub fn new(alg: &Arc<LieSuperalgebra>) -> Result<L0ClassTable, ModuleError> {
        assert_eq!(alg.kind(), AlgebraKind::Sl);
        let square = ext_power_eps(&adjoint_module(alg), 2);
        let dec = decompose_l0(&square)?;
        let constituents = dec.iter().map(|(_, _, m)| m).sum();
        let mut classes: Vec<Vec<i64>> = Vec::new();
        for (w, _, _) in &dec {
            let labels = to_int_labels(w)
                .ok_or_else(|| ModuleError::Inconsistent("non-integral constituent".into()))?;
            if !classes.contains(&labels) {
                classes.push(labels);
            }
        }
        // Grassmann weight multiplicities per degree.
        let creation: Vec<usize> = (0..alg.dim()).filter(|&i| alg.z_degree(i) == 1).collect();
        let bits = creation.len();
        let mut grassmann: Vec<BTreeMap<Vec<i64>, i64>> = vec![BTreeMap::new(); bits + 1];
        for mask in 0u32..(1 << bits) {
            let mut sum = Weight::zero(alg.size());
            for (pos, &idx) in creation.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    sum = sum.add(alg.root_weight(idx));
                }
            }
            let labels = to_int_labels(&sum).expect("roots are integral");
            *grassmann[mask.count_ones() as usize]
                .entry(labels)
                .or_insert(0) += 1;
        }
        Ok(L0ClassTable { algebra: alg.clone(), classes, constituents, grassmann })
    }

    fn m(&self) -> usize {
        self.algebra.m()
    }

    fn n(&self) -> usize {
        self.algebra.n()
    }
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if current.len() == k {
            // Count inversions for the sign.
            let mut inv = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if current[i] > current[j] {
                        inv += 1;
                    }
                }
            }
            out.push((current.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for c in 0..k {
            if !used[c] {
                used[c] = true;
                current.push(c);
                rec(current, used, out);
                current.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Multiplicity of the simple even-part constituent with highest weight
/// `nu` inside the Kac module of `lambda`, computed from weight functions:
/// the Grassmann factor contributes a fixed convolution kernel per degree,
/// the simple factors contribute Freudenthal multiplicities, and the
/// alternating Weyl-group sum extracts the constituent count.
fn kac_constituent_multiplicity(table: &L0ClassTable, lambda: &[i64], nu: &[i64]) -> i64 {
    let (m, n) = (table.m(), table.n());
    let bits = table.grassmann.len() - 1;
    // Grading eigenvalues fix the Grassmann degree.
    let d_of = |labels: &[i64]| -> i64 { -labels[..m].iter().sum::<i64>() };
    let k = d_of(nu) - d_of(lambda);
    if !(0..=bits as i64).contains(&k) {
        return 0;
    }
    let grass = &table.grassmann[k as usize];

    let mult1 = sl_weight_multiplicities(&lambda[..m]);
    let mult2 = sl_weight_multiplicities(&lambda[m..]);
    // dim of the weight-mu space of the Kac module restricted to degree k.
    let dimwt = |mu: &[i64]| -> i64 {
        let mut acc = 0i64;
        for (g, c) in grass {
            let x1: Vec<i64> = (0..m).map(|i| mu[i] - g[i]).collect();
            let x2: Vec<i64> = (m..m + n).map(|i| mu[i] - g[i]).collect();
            let m1 = mult1.get(&x1).copied().unwrap_or(0);
            if m1 == 0 {
                continue;
            }
            let m2 = mult2.get(&x2).copied().unwrap_or(0);
            acc += c * m1 * m2;
        }
        acc
    };

    let rho: Vec<i64> = (0..m)
        .map(|i| (m - 1 - i) as i64)
        .chain((0..n).map(|i| (n - 1 - i) as i64))
        .collect();
    let mut total = 0i64;
    for (w1, s1) in permutations(m) {
        for (w2, s2) in permutations(n) {
            // w(nu + rho) - rho, acting per block.
            let mut arg = vec![0i64; m + n];
            for i in 0..m {
                arg[i] = nu[w1[i]] + rho[w1[i]] - rho[i];
            }
            for i in 0..n {
                arg[m + i] = nu[m + w2[i]] + rho[m + w2[i]] - rho[m + i];
            }
            total += s1 * s2 * dimwt(&arg);
        }
    }
    total
}

/// Whether the Kac module of `lambda` shares a simple even-part constituent
/// with the super-exterior square of the adjoint module. Scales to large
/// highest weights: only weight functions are computed, never the module.
pub fn kac_common_constituent_screen(table: &L0ClassTable, lambda: &Weight) -> bool {
    let Some(lam) = to_int_labels(lambda) else {
        return false;
    };
    table
        .classes
        .iter()
        .any(|nu| kac_constituent_multiplicity(table, &lam, nu) > 0)
}

/// The same verdict from the fully materialized Kac module; used as the
/// oracle for the combinatorial route on small instances.
pub fn kac_screen_materialized(
    table: &L0ClassTable,
    lambda: &Weight,
) -> Result<bool, ModuleError> {
    let module: Module = kac_module(&table.algebra, lambda)?;
    let dec = decompose_l0(&module)?;
    Ok(dec.iter().any(|(w, _, _)| {
        to_int_labels(w)
            .map(|labels| table.classes.contains(&labels))
            .unwrap_or(false)
    }))
}
