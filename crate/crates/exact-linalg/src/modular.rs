//! Word-sized modular elimination used only as a pivoting hint.
//!
//! The prime is fixed; a nonzero residue certifies that the exact entry is
//! nonzero, which is the only fact the exact phase relies on. Entries that
//! vanish modulo the prime are simply left for the exact phase to handle.

use crate::Rational;
use num_traits::Zero;

pub const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn sub_mod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, PRIME - 2)
}

pub fn reduce_rational(v: &Rational) -> Option<u64> {
    let p = crate::Int::from(PRIME);
    let num = ((v.numer() % &p) + &p) % &p;
    let den = ((v.denom() % &p) + &p) % &p;
    let num = u64::try_from(&num).ok()?;
    let den = u64::try_from(&den).ok()?;
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, inv_mod(den)))
}

type ModRow = Vec<(usize, u64)>;

/// Runs sparse Gauss elimination mod `PRIME` with the same min-row / min-col
/// Markowitz rule as the exact engine and returns the pivot sequence as
/// `(original_row_id, column)` pairs.
pub fn pivot_hints(rows: &[Vec<(usize, Rational)>], cols: usize) -> Vec<(usize, usize)> {
    let mut data: Vec<ModRow> = rows
        .iter()
        .map(|r| {
            r.iter()
                .filter_map(|(c, v)| {
                    if v.is_zero() {
                        return None;
                    }
                    let m = reduce_rational(v)?;
                    if m == 0 {
                        None
                    } else {
                        Some((*c, m))
                    }
                })
                .collect()
        })
        .collect();

    let mut active: Vec<bool> = data.iter().map(|r| !r.is_empty()).collect();
    let mut col_count = vec![0usize; cols];
    for (r, row) in data.iter().enumerate() {
        if active[r] {
            for (c, _) in row {
                col_count[*c] += 1;
            }
        }
    }
    let mut hints = Vec::new();

    loop {
        // Min-nnz active row, then min (col_count, col) within it.
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in data.iter().enumerate() {
            if !active[r] || row.is_empty() {
                continue;
            }
            if best.map(|(n, br)| (row.len(), r) < (n, br)).unwrap_or(true) {
                best = Some((row.len(), r));
            }
        }
        let Some((_, r)) = best else { break };
        let (pc, pv) = {
            let row = &data[r];
            let (mut bc, mut bv) = (row[0].0, row[0].1);
            for (c, v) in row.iter() {
                if (col_count[*c], *c) < (col_count[bc], bc) {
                    bc = *c;
                    bv = *v;
                }
            }
            (bc, bv)
        };
        hints.push((r, pc));
        active[r] = false;
        for (c, _) in &data[r] {
            col_count[*c] -= 1;
        }

        let pivot_row = data[r].clone();
        let pinv = inv_mod(pv);
        for s in 0..data.len() {
            if !active[s] {
                continue;
            }
            let has = data[s].binary_search_by_key(&pc, |e| e.0).is_ok();
            if !has {
                continue;
            }
            for (c, _) in &data[s] {
                col_count[*c] -= 1;
            }
            let factor = {
                let idx = data[s].binary_search_by_key(&pc, |e| e.0).unwrap();
                mul_mod(data[s][idx].1, pinv)
            };
            let mut out: ModRow = Vec::with_capacity(data[s].len() + pivot_row.len());
            let (mut a, mut b) = (0usize, 0usize);
            let lhs = &data[s];
            while a < lhs.len() || b < pivot_row.len() {
                match (lhs.get(a), pivot_row.get(b)) {
                    (Some(&(ca, va)), Some(&(cb, vb))) => {
                        if ca < cb {
                            out.push((ca, va));
                            a += 1;
                        } else if cb < ca {
                            out.push((cb, sub_mod(0, mul_mod(factor, vb))));
                            b += 1;
                        } else {
                            let v = sub_mod(va, mul_mod(factor, vb));
                            if v != 0 {
                                out.push((ca, v));
                            }
                            a += 1;
                            b += 1;
                        }
                    }
                    (Some(&(ca, va)), None) => {
                        out.push((ca, va));
                        a += 1;
                    }
                    (None, Some(&(cb, vb))) => {
                        out.push((cb, sub_mod(0, mul_mod(factor, vb))));
                        b += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            data[s] = out;
            if data[s].is_empty() {
                active[s] = false;
            } else {
                for (c, _) in &data[s] {
                    col_count[*c] += 1;
                }
            }
        }
    }
    hints
}
