use std::collections::BTreeMap;

use exact_linalg::{rat, Rational, SparseVec, Subspace};
use num_traits::{One, Zero};
use superalg_core::Parity;

use crate::action::ActionMatrix;
use crate::koszul::{normalize_tuple, PowerKind};
use crate::module::ModuleError;

/// Weyl dimension formula for sl(k) from the consecutive label differences.
pub fn weyl_dim(diffs: &[Rational]) -> Option<Rational> {
    let k = diffs.len() + 1;
    // Partition normalized to last entry zero.
    let mut mu = vec![Rational::zero(); k];
    for i in (0..k - 1).rev() {
        mu[i] = &mu[i + 1] + &diffs[i];
    }
    let mut num = Rational::one();
    let mut den = Rational::one();
    for i in 0..k {
        for j in i + 1..k {
            let gap = rat((j - i) as i64);
            num *= &mu[i] - &mu[j] + &gap;
            den *= gap;
        }
    }
    let dim = num / den;
    if dim.is_integer() {
        Some(dim)
    } else {
        None
    }
}

/// A simple sl(k)-module in explicit form: per-vector gl(k) weight labels
/// and the action of every off-diagonal matrix unit `e_ab` (1-based).
pub(crate) struct Factor {
    pub dim: usize,
    pub gl_labels: Vec<Vec<i64>>,
    pub action: BTreeMap<(usize, usize), ActionMatrix>,
}

const MAX_HOST_DIM: usize = 1 << 21;

/// Builds the simple sl(k)-module with the given nonnegative label
/// differences as the cyclic span of the product of top wedge vectors inside
/// a tensor product of exterior powers of the natural module. The host is
/// completely reducible, so the cyclic span of this singular vector is
/// simple; the dimension is cross-checked against the Weyl formula.
pub(crate) fn simple_factor(k: usize, diffs: &[i64]) -> Result<Factor, ModuleError> {
    assert_eq!(diffs.len() + 1, k);
    if diffs.iter().any(|&d| d < 0) {
        return Err(ModuleError::NotDominant(format!("{diffs:?}")));
    }
    let mut mu = vec![0i64; k];
    for i in (0..k - 1).rev() {
        mu[i] = mu[i + 1] + diffs[i];
    }
    if mu[0] == 0 {
        return Ok(Factor {
            dim: 1,
            gl_labels: vec![vec![0; k]],
            action: (1..=k)
                .flat_map(|a| (1..=k).filter(move |&b| b != a).map(move |b| (a, b)))
                .map(|key| (key, ActionMatrix::zero(1)))
                .collect(),
        });
    }
    // Column heights of the partition.
    let heights: Vec<usize> = (1..=mu[0])
        .map(|j| mu.iter().filter(|&&v| v >= j).count())
        .collect();

    // Host basis: one strictly increasing subset of 0..k per column.
    let mut column_subsets: Vec<Vec<Vec<usize>>> = Vec::new();
    for &c in &heights {
        let mut subsets = Vec::new();
        let mut cur = Vec::new();
        fn combos(k: usize, c: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == c {
                out.push(cur.clone());
                return;
            }
            for next in start..k {
                cur.push(next);
                combos(k, c, next + 1, cur, out);
                cur.pop();
            }
        }
        combos(k, c, 0, &mut cur, &mut subsets);
        column_subsets.push(subsets);
    }
    let host_dim: usize = column_subsets.iter().map(|s| s.len()).product();
    if host_dim > MAX_HOST_DIM {
        return Err(ModuleError::Inconsistent(format!(
            "factor host dimension {host_dim} exceeds the resource budget"
        )));
    }

    // Index arithmetic over the product of per-column subset lists.
    let radix: Vec<usize> = column_subsets.iter().map(|s| s.len()).collect();
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut digits = vec![0usize; radix.len()];
        for (d, r) in digits.iter_mut().zip(&radix).rev() {
            *d = idx % r;
            idx /= r;
        }
        digits
    };
    let encode = |digits: &[usize]| -> usize {
        let mut idx = 0usize;
        for (d, r) in digits.iter().zip(&radix) {
            idx = idx * r + d;
        }
        idx
    };
    let subset_index: Vec<BTreeMap<Vec<usize>, usize>> = column_subsets
        .iter()
        .map(|s| s.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect())
        .collect();

    let all_even = |_: usize| Parity::Even;
    // e_ab on one wedge column (orindary exterior power of the natural).
    let wedge_apply = |col: usize, subset_pos: usize, a: usize, b: usize| -> Vec<(usize, Rational)> {
        let subset = &column_subsets[col][subset_pos];
        let Some(slot) = subset.iter().position(|&x| x == b) else {
            return Vec::new();
        };
        let mut raw = subset.clone();
        raw[slot] = a;
        match normalize_tuple(&raw, all_even, PowerKind::SuperExterior) {
            Some((norm, sign)) => {
                vec![(subset_index[col][&norm], rat(sign))]
            }
            None => Vec::new(),
        }
    };
    let host_apply = |a: usize, b: usize, idx: usize| -> SparseVec {
        let digits = decode(idx);
        let mut out: Vec<(usize, Rational)> = Vec::new();
        for col in 0..radix.len() {
            for (new_pos, c) in wedge_apply(col, digits[col], a, b) {
                let mut nd = digits.clone();
                nd[col] = new_pos;
                out.push((encode(&nd), c));
            }
        }
        SparseVec::from_entries(out)
    };

    // Cyclic closure of the product of top wedges.
    let top = encode(&vec![0usize; radix.len()]);
    debug_assert!(column_subsets
        .iter()
        .all(|s| s[0].iter().copied().eq(0..s[0].len())));
    let mut span = Subspace::zero(host_dim);
    let mut queue = vec![SparseVec::unit(top)];
    span.insert(queue[0].clone());
    while let Some(v) = queue.pop() {
        for a in 0..k {
            for b in 0..k {
                if a == b {
                    continue;
                }
                let mut image = SparseVec::new();
                for (idx, c) in v.iter() {
                    image = image.add_scaled(&host_apply(a, b, *idx), c);
                }
                let r = span.reduce(&image);
                if !r.is_zero() {
                    span.insert(r.clone());
                    queue.push(r);
                }
            }
        }
    }
    let dim = span.dim();
    let expected = weyl_dim(&diffs.iter().map(|&d| rat(d)).collect::<Vec<_>>())
        .ok_or_else(|| ModuleError::Inconsistent("non-integral Weyl dimension".into()))?;
    if rat(dim as i64) != expected {
        return Err(ModuleError::Inconsistent(format!(
            "factor dimension {dim} disagrees with the Weyl formula {expected}"
        )));
    }

    // Labels: usage counts of each natural basis vector, per host index.
    let host_labels = |idx: usize| -> Vec<i64> {
        let digits = decode(idx);
        let mut counts = vec![0i64; k];
        for (col, &d) in digits.iter().enumerate() {
            for &x in &column_subsets[col][d] {
                counts[x] += 1;
            }
        }
        counts
    };
    let mut gl_labels = Vec::with_capacity(dim);
    for row in span.basis_rows() {
        let first = row.leading().unwrap();
        let lab = host_labels(first);
        debug_assert!(row.iter().all(|(i, _)| host_labels(*i) == lab));
        gl_labels.push(lab);
    }

    let mut action = BTreeMap::new();
    for a in 1..=k {
        for b in 1..=k {
            if a == b {
                continue;
            }
            let mut cols = Vec::with_capacity(dim);
            for row in span.basis_rows() {
                let mut image = SparseVec::new();
                for (idx, c) in row.iter() {
                    image = image.add_scaled(&host_apply(a - 1, b - 1, *idx), c);
                }
                let coords = span
                    .coordinates(&image)
                    .ok_or(ModuleError::NotInvariant)?;
                cols.push(coords);
            }
            action.insert((a, b), ActionMatrix::from_cols(dim, cols));
        }
    }
    Ok(Factor { dim, gl_labels, action })
}
