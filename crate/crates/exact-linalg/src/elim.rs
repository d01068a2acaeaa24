use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::modular;
use crate::sparse::primitive_int_row;
use crate::{Int, Rational, SparseRationalMatrix, SparseVec};

/// Elimination controls. The modular prepass only influences pivot order;
/// every number in the output is computed and certified over the rationals,
/// and the canonical results (rank, reduced rows, kernel vectors) are
/// identical with the prepass on or off.
#[derive(Clone, Copy, Debug)]
pub struct ElimOptions {
    pub modular_prepass: bool,
}

impl Default for ElimOptions {
    fn default() -> Self {
        ElimOptions { modular_prepass: true }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ElimStats {
    pub pivots: usize,
    pub hinted_pivots: usize,
}

type IntRow = Vec<(usize, Int)>;

/// Row echelon data produced by fraction-free Markowitz elimination.
///
/// Rows are stored in pivot order: row `k` vanishes on the pivot columns of
/// rows `0..k` and is nonzero on its own pivot column. Pivot columns are in
/// elimination order, not sorted.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<IntRow>,
    pivot_cols: Vec<usize>,
    pub stats: ElimStats,
}

/// `p * target - q * pivot_row`, divided by the content, sign-normalized.
fn eliminate_row(target: &IntRow, pivot_row: &IntRow, p: &Int, q: &Int) -> IntRow {
    let mut out: IntRow = Vec::with_capacity(target.len() + pivot_row.len());
    let (mut a, mut b) = (0usize, 0usize);
    while a < target.len() || b < pivot_row.len() {
        match (target.get(a), pivot_row.get(b)) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, p * va));
                    a += 1;
                } else if cb < ca {
                    out.push((*cb, -(q * vb)));
                    b += 1;
                } else {
                    let v = p * va - q * vb;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a += 1;
                    b += 1;
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, p * va));
                a += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(q * vb)));
                b += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    let mut content = Int::zero();
    for (_, v) in &out {
        content = content.gcd(v);
        if content.is_one() {
            break;
        }
    }
    if !content.is_one() && !content.is_zero() {
        for (_, v) in &mut out {
            *v = &*v / &content;
        }
    }
    if out.first().map(|e| e.1.is_negative()).unwrap_or(false) {
        for (_, v) in &mut out {
            *v = -v.clone();
        }
    }
    out
}

struct Eliminator {
    data: Vec<IntRow>,
    active: Vec<bool>,
    col_count: Vec<usize>,
    /// Per-column row lists; approximate (entries may be stale).
    col_rows: Vec<Vec<usize>>,
    finished: Vec<(usize, IntRow)>, // (pivot col, row), in pivot order
    stats: ElimStats,
}

impl Eliminator {
    fn new(rows: Vec<IntRow>, cols: usize) -> Self {
        let active: Vec<bool> = rows.iter().map(|r| !r.is_empty()).collect();
        let mut col_count = vec![0usize; cols];
        let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); cols];
        for (r, row) in rows.iter().enumerate() {
            if active[r] {
                for (c, _) in row {
                    col_count[*c] += 1;
                    col_rows[*c].push(r);
                }
            }
        }
        Eliminator {
            data: rows,
            active,
            col_count,
            col_rows,
            finished: Vec::new(),
            stats: ElimStats::default(),
        }
    }

    fn row_has(&self, r: usize, c: usize) -> bool {
        self.data[r].binary_search_by_key(&c, |e| e.0).is_ok()
    }

    fn pivot_at(&mut self, r: usize, pc: usize, hinted: bool) {
        self.stats.pivots += 1;
        if hinted {
            self.stats.hinted_pivots += 1;
        }
        self.active[r] = false;
        for (c, _) in &self.data[r] {
            self.col_count[*c] -= 1;
        }
        let pivot_row = std::mem::take(&mut self.data[r]);
        let p = pivot_row
            .iter()
            .find(|e| e.0 == pc)
            .expect("pivot entry present")
            .1
            .clone();

        let mut victims: Vec<usize> = std::mem::take(&mut self.col_rows[pc]);
        victims.sort_unstable();
        victims.dedup();
        victims.retain(|&s| s != r && self.active[s] && self.row_has(s, pc));

        for s in victims {
            let q = self.data[s]
                .iter()
                .find(|e| e.0 == pc)
                .expect("victim entry present")
                .1
                .clone();
            let old_support: Vec<usize> = self.data[s].iter().map(|e| e.0).collect();
            for c in &old_support {
                self.col_count[*c] -= 1;
            }
            let new_row = eliminate_row(&self.data[s], &pivot_row, &p, &q);
            for (c, _) in &new_row {
                self.col_count[*c] += 1;
                if old_support.binary_search(c).is_err() {
                    self.col_rows[*c].push(s);
                }
            }
            self.data[s] = new_row;
            if self.data[s].is_empty() {
                self.active[s] = false;
            }
        }
        self.finished.push((pc, pivot_row));
    }

    /// Min-nnz active row, then the column with fewest active rows.
    fn choose_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in self.data.iter().enumerate() {
            if !self.active[r] || row.is_empty() {
                continue;
            }
            if best.map(|(n, br)| (row.len(), r) < (n, br)).unwrap_or(true) {
                best = Some((row.len(), r));
            }
        }
        let (_, r) = best?;
        let row = &self.data[r];
        let mut pc = row[0].0;
        for (c, _) in row.iter() {
            if (self.col_count[*c], *c) < (self.col_count[pc], pc) {
                pc = *c;
            }
        }
        Some((r, pc))
    }

    fn run(&mut self, hints: &[(usize, usize)]) {
        for &(r, c) in hints {
            if self.active[r] && self.row_has(r, c) {
                self.pivot_at(r, c, true);
            }
        }
        while let Some((r, c)) = self.choose_pivot() {
            self.pivot_at(r, c, false);
        }
    }
}

/// Reduces `matrix` to fraction-free row echelon form.
pub fn echelonize(matrix: &SparseRationalMatrix, opts: ElimOptions) -> Echelon {
    let int_rows: Vec<IntRow> = matrix.row_vecs().iter().map(primitive_int_row).collect();
    let nnz: usize = int_rows.iter().map(|r| r.len()).sum();
    let hints = if opts.modular_prepass && nnz > 4096 {
        let rat_rows: Vec<Vec<(usize, Rational)>> = matrix
            .row_vecs()
            .iter()
            .map(|r| r.iter().cloned().collect())
            .collect();
        modular::pivot_hints(&rat_rows, matrix.cols())
    } else {
        Vec::new()
    };
    let mut elim = Eliminator::new(int_rows, matrix.cols());
    elim.run(&hints);
    let (pivot_cols, rows): (Vec<usize>, Vec<IntRow>) = elim.finished.drain(..).unzip();
    Echelon { cols: matrix.cols(), rows, pivot_cols, stats: elim.stats }
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn free_cols(&self) -> Vec<usize> {
        let mut pivot_set = vec![false; self.cols];
        for &c in &self.pivot_cols {
            pivot_set[c] = true;
        }
        (0..self.cols).filter(|c| !pivot_set[*c]).collect()
    }

    /// Back-substitutes the unique solution of `E x = 0` whose free
    /// coordinates are pinned by `fixed`. Processes rows in reverse pivot
    /// order; row `k` only involves its own pivot, later pivots, and free
    /// columns, so every term is known when it is needed.
    fn back_solve(&self, fixed: &[(usize, Rational)]) -> Vec<(usize, Rational)> {
        let mut x: BTreeMap<usize, Rational> = fixed.iter().cloned().collect();
        for (pc, row) in self.pivot_cols.iter().zip(&self.rows).rev() {
            let mut acc = Rational::zero();
            let mut pivot = Int::zero();
            for (c, v) in row {
                if c == pc {
                    pivot = v.clone();
                } else if let Some(xc) = x.get(c) {
                    acc += Rational::from_integer(v.clone()) * xc;
                }
            }
            debug_assert!(!pivot.is_zero());
            let val = -acc / Rational::from_integer(pivot);
            if !val.is_zero() {
                x.insert(*pc, val);
            }
        }
        x.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Kernel basis in canonical reduced form.
    pub fn kernel_vectors(&self) -> Vec<SparseVec> {
        let raw: Vec<SparseVec> = self
            .free_cols()
            .into_iter()
            .map(|f| SparseVec::from_entries(self.back_solve(&[(f, Rational::one())])))
            .collect();
        let mut basis = RrefBuilder::new();
        for v in raw {
            basis.insert(v);
        }
        basis.into_rows()
    }
}

/// Incremental reduced-row-echelon accumulator: rows kept sorted by leading
/// column, each with leading coefficient 1 and its pivot column cleared from
/// every other row. The resulting basis is the canonical one for the spanned
/// row space, independent of insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RrefBuilder {
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl RrefBuilder {
    pub fn new() -> Self {
        RrefBuilder { rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    /// Reduces `v` against the current rows; returns the residual (zero if
    /// `v` is in the span).
    ///
    /// Basis rows carry their only pivot-column entry on their own pivot, so
    /// subtracting them never introduces new pivot-column entries and one
    /// collect-then-subtract pass fully reduces `v`.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_with_coords(v).0
    }

    /// Like `reduce`, but records the coefficients of the basis rows used
    /// (positions refer to the current basis ordering).
    pub fn reduce_with_coords(&self, mut v: SparseVec) -> (SparseVec, Vec<(usize, Rational)>) {
        let hits: Vec<(usize, Rational)> = v
            .iter()
            .filter_map(|(c, val)| self.pivots.binary_search(c).ok().map(|pos| (pos, val.clone())))
            .collect();
        for (pos, coef) in &hits {
            v = v.add_scaled(&self.rows[*pos], &(-coef));
        }
        debug_assert!(v
            .iter()
            .all(|(c, _)| self.pivots.binary_search(c).is_err()));
        (v, hits)
    }

    /// Inserts `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let residual = self.reduce(v);
        let Some(lead) = residual.leading() else {
            return false;
        };
        let pos = match self.pivots.binary_search(&lead) {
            Ok(_) => unreachable!("residual leading column is not a pivot"),
            Err(pos) => pos,
        };
        let normalized = residual.scale(&residual.leading_value().unwrap().recip());
        for row in self.rows.iter_mut() {
            let coef = row.get(lead);
            if !coef.is_zero() {
                *row = row.add_scaled(&normalized, &(-coef));
            }
        }
        self.rows.insert(pos, normalized);
        self.pivots.insert(pos, lead);
        true
    }
}

/// Rank of a sparse rational matrix.
pub fn rank(matrix: &SparseRationalMatrix) -> usize {
    rank_with_options(matrix, ElimOptions::default())
}

pub fn rank_with_options(matrix: &SparseRationalMatrix, opts: ElimOptions) -> usize {
    echelonize(matrix, opts).rank()
}

/// Canonical basis of the right kernel `{x : A x = 0}`.
pub fn kernel_basis(matrix: &SparseRationalMatrix) -> Vec<SparseVec> {
    echelonize(matrix, ElimOptions::default()).kernel_vectors()
}

/// Canonical reduced row echelon form: rational rows sorted by leading
/// column, plus the pivot columns.
pub fn rref(matrix: &SparseRationalMatrix) -> (Vec<SparseVec>, Vec<usize>, ElimStats) {
    let ech = echelonize(matrix, ElimOptions::default());
    let stats = ech.stats;
    let mut builder = RrefBuilder::new();
    for row in &ech.rows {
        builder.insert(SparseVec::from_entries(
            row.iter().map(|(c, v)| (*c, Rational::from_integer(v.clone()))),
        ));
    }
    let pivots = builder.pivots().to_vec();
    (builder.into_rows(), pivots, stats)
}

/// Solves `A x = b` exactly. Returns the canonical particular solution
/// (free coordinates zero), or `None` when the system is inconsistent.
///
/// Works on the reduced echelon form of `[A | b]`: the augmented column
/// carries a pivot if and only if `b` is outside the column span of `A`.
pub fn solve(matrix: &SparseRationalMatrix, b: &SparseVec) -> Option<SparseVec> {
    let cols = matrix.cols();
    let mut aug_rows: Vec<SparseVec> = matrix.row_vecs().to_vec();
    for (r, row) in aug_rows.iter_mut().enumerate() {
        let bv = b.get(r);
        if !bv.is_zero() {
            *row = row.add(&SparseVec::single(cols, bv));
        }
    }
    let aug = SparseRationalMatrix::from_rows(cols + 1, aug_rows);
    let (rref_rows, pivots, _) = rref(&aug);
    let mut x: Vec<(usize, Rational)> = Vec::new();
    for (row, pc) in rref_rows.iter().zip(&pivots) {
        if *pc == cols {
            return None;
        }
        // Row reads: x_pc + sum over free columns = rhs; free vars are zero.
        let rhs = row.get(cols);
        if !rhs.is_zero() {
            x.push((*pc, rhs));
        }
    }
    Some(SparseVec::from_entries(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn m(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseRationalMatrix {
        SparseRationalMatrix::from_triplets(
            rows,
            cols,
            entries.iter().map(|(r, c, v)| (*r, *c, rat(*v))),
        )
    }

    #[test]
    fn rank_identity() {
        for n in [1usize, 2, 5, 17] {
            assert_eq!(rank(&SparseRationalMatrix::identity(n)), n);
        }
    }

    #[test]
    fn kernel_of_all_ones_row() {
        let a = m(1, 3, &[(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.apply(v).is_zero());
        }
    }

    #[test]
    fn rank_nullity() {
        let a = m(
            3,
            4,
            &[(0, 0, 2), (0, 2, -1), (1, 0, 4), (1, 2, -2), (2, 3, 7)],
        );
        let r = rank(&a);
        let k = kernel_basis(&a);
        assert_eq!(r + k.len(), a.cols());
        assert_eq!(r, 2);
        for v in &k {
            assert!(a.apply(v).is_zero());
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(2, 2, &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]);
        let b = SparseVec::from_entries([(0, rat(3)), (1, rat(3))]);
        let x = solve(&a, &b).expect("consistent");
        assert_eq!(a.apply(&x), b);

        let b_bad = SparseVec::from_entries([(0, rat(3)), (1, rat(4))]);
        assert!(solve(&a, &b_bad).is_none());
    }

    #[test]
    fn solve_rational_entries() {
        let a = SparseRationalMatrix::from_triplets(
            2,
            3,
            [
                (0, 0, ratio(1, 2)),
                (0, 1, rat(3)),
                (1, 1, ratio(-2, 5)),
                (1, 2, rat(1)),
            ],
        );
        let b = SparseVec::from_entries([(0, ratio(7, 2)), (1, ratio(3, 5))]);
        let x = solve(&a, &b).expect("consistent");
        assert_eq!(a.apply(&x), b);
    }

    #[test]
    fn rref_is_canonical_under_row_permutation() {
        let a = m(
            3,
            4,
            &[
                (0, 0, 1),
                (0, 1, 2),
                (1, 1, 3),
                (1, 3, 1),
                (2, 0, 1),
                (2, 3, -5),
            ],
        );
        let b = SparseRationalMatrix::from_rows(
            4,
            vec![a.row(2).clone(), a.row(0).clone(), a.row(1).clone()],
        );
        let (ra, pa, _) = rref(&a);
        let (rb, pb, _) = rref(&b);
        assert_eq!(pa, pb);
        assert_eq!(ra, rb);
    }

    #[test]
    fn kernel_is_canonical_and_annihilates() {
        let a = m(
            2,
            5,
            &[(0, 1, 2), (0, 3, -4), (1, 1, 1), (1, 2, 1), (1, 4, 3)],
        );
        let k1 = kernel_basis(&a);
        // Same matrix with rows swapped: canonical kernel must be identical.
        let b = SparseRationalMatrix::from_rows(5, vec![a.row(1).clone(), a.row(0).clone()]);
        let k2 = kernel_basis(&b);
        assert_eq!(k1, k2);
        for v in &k1 {
            assert!(a.apply(v).is_zero());
        }
        assert_eq!(k1.len(), 3);
    }

    #[test]
    fn prepass_does_not_change_results() {
        // Large enough to trip the prepass threshold.
        let mut trip = Vec::new();
        let n = 170usize;
        for i in 0..n {
            for j in 0..n {
                if (i * 7 + j * 3) % 5 == 0 {
                    trip.push((i, j, rat(((i + 2 * j) % 11) as i64 - 5)));
                }
            }
        }
        let a = SparseRationalMatrix::from_triplets(n, n, trip);
        assert!(a.nnz() > 1000);
        let on = ElimOptions { modular_prepass: true };
        let off = ElimOptions { modular_prepass: false };
        assert_eq!(rank_with_options(&a, on), rank_with_options(&a, off));
        let ech_on = echelonize(&a, on);
        assert!(ech_on.stats.hinted_pivots > 0, "prepass should have guided pivots");
        assert_eq!(ech_on.kernel_vectors(), echelonize(&a, off).kernel_vectors());
    }
}
