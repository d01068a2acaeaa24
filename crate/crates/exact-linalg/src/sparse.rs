use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::{Int, Rational};

/// A sparse vector: entries sorted by index, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec { entries: vec![(index, Rational::one())] }
    }

    pub fn single(index: usize, value: Rational) -> Self {
        if value.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(index, value)] }
        }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates and
    /// dropping zeros.
    pub fn from_entries(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            if v.is_zero() {
                continue;
            }
            let slot = map.entry(i).or_insert_with(Rational::zero);
            *slot += v;
            if slot.is_zero() {
                map.remove(&i);
            }
        }
        SparseVec { entries: map.into_iter().collect() }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rational)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.entries.binary_search_by_key(&index, |e| e.0) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Index of the first nonzero entry.
    pub fn leading(&self) -> Option<usize> {
        self.entries.first().map(|e| e.0)
    }

    pub fn leading_value(&self) -> Option<&Rational> {
        self.entries.first().map(|e| &e.1)
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`, merging sorted entry lists.
    pub fn add_scaled(&self, other: &SparseVec, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let next = match (self.entries.get(a), other.entries.get(b)) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        a += 1;
                        (*ia, va.clone())
                    } else if ib < ia {
                        b += 1;
                        (*ib, vb * c)
                    } else {
                        let v = va + vb * c;
                        a += 1;
                        b += 1;
                        (*ia, v)
                    }
                }
                (Some((ia, va)), None) => {
                    a += 1;
                    (*ia, va.clone())
                }
                (None, Some((ib, vb))) => {
                    b += 1;
                    (*ib, vb * c)
                }
                (None, None) => unreachable!(),
            };
            if !next.1.is_zero() {
                out.push(next);
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Rational::one())
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (ia, va) = &self.entries[a];
            let (ib, vb) = &other.entries[b];
            if ia < ib {
                a += 1;
            } else if ib < ia {
                b += 1;
            } else {
                acc += va * vb;
                a += 1;
                b += 1;
            }
        }
        acc
    }

    /// Remaps indices through `f` (must be strictly monotone on the support).
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        let entries: Vec<(usize, Rational)> =
            self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect();
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVec { entries }
    }
}

impl FromIterator<(usize, Rational)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Rational)>>(iter: T) -> Self {
        SparseVec::from_entries(iter)
    }
}

/// Sparse matrix with arbitrary-precision rational entries, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseRationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseRationalMatrix { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(SparseVec::unit).collect();
        SparseRationalMatrix { rows: n, cols: n, data }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        for r in &rows {
            if let Some(last) = r.entries().last() {
                assert!(last.0 < cols, "column index {} out of range {}", last.0, cols);
            }
        }
        SparseRationalMatrix { rows: rows.len(), cols, data: rows }
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut per_row: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of range");
            per_row[r].push((c, v));
        }
        let data = per_row.into_iter().map(SparseVec::from_entries).collect();
        SparseRationalMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_vecs(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        let mut entries: Vec<(usize, Rational)> = self.data[r]
            .iter()
            .filter(|(i, _)| *i != c)
            .cloned()
            .collect();
        if !v.is_zero() {
            entries.push((c, v));
        }
        self.data[r] = SparseVec::from_entries(entries);
    }

    pub fn transpose(&self) -> SparseRationalMatrix {
        let mut per_row: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter() {
                per_row[*c].push((r, v.clone()));
            }
        }
        let data = per_row.into_iter().map(SparseVec::from_entries).collect();
        SparseRationalMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Matrix-vector product `A * x` with `x` sparse (column semantics).
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let pairs = self
            .data
            .iter()
            .enumerate()
            .filter_map(|(r, row)| {
                let v = row.dot(x);
                if v.is_zero() {
                    None
                } else {
                    Some((r, v))
                }
            })
            .collect::<Vec<_>>();
        SparseVec { entries: pairs }
    }

    pub fn matmul(&self, other: &SparseRationalMatrix) -> SparseRationalMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matmul");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = SparseVec::new();
                for (k, v) in row.iter() {
                    acc = acc.add_scaled(&other.data[*k], v);
                }
                acc
            })
            .collect();
        SparseRationalMatrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn vstack(&self, other: &SparseRationalMatrix) -> SparseRationalMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        SparseRationalMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Debug dump: `rows cols` header, then sorted `r c p/q` triplets.
    pub fn dump(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter() {
                out.push_str(&format!("{} {} {}\n", r, c, v));
            }
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<SparseRationalMatrix, String> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or("empty dump")?;
        let mut hp = header.split_whitespace();
        let rows: usize = hp
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or("bad row count")?;
        let cols: usize = hp
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or("bad col count")?;
        let mut triplets = Vec::new();
        for line in lines {
            let mut parts = line.split_whitespace();
            let r: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| format!("bad row index in {line:?}"))?;
            let c: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| format!("bad col index in {line:?}"))?;
            let v = parts
                .next()
                .and_then(|t| Rational::from_str(t).ok())
                .ok_or_else(|| format!("bad value in {line:?}"))?;
            triplets.push((r, c, v));
        }
        Ok(SparseRationalMatrix::from_triplets(rows, cols, triplets))
    }
}

impl fmt::Display for SparseRationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dump())
    }
}

/// Clears denominators and divides by the content, returning a primitive
/// integer row. Zero rows map to empty vectors.
pub(crate) fn primitive_int_row(row: &SparseVec) -> Vec<(usize, Int)> {
    use num_integer::Integer;
    if row.is_zero() {
        return Vec::new();
    }
    let mut lcm = Int::one();
    for (_, v) in row.iter() {
        lcm = lcm.lcm(v.denom());
    }
    let mut ints: Vec<(usize, Int)> = row
        .iter()
        .map(|(i, v)| (*i, v.numer() * (&lcm / v.denom())))
        .collect();
    let mut content = Int::zero();
    for (_, v) in &ints {
        content = content.gcd(v);
    }
    if !content.is_one() && !content.is_zero() {
        for (_, v) in &mut ints {
            *v = &*v / &content;
        }
    }
    // Normalize the sign of the leading coefficient.
    if ints.first().map(|e| e.1.is_negative()).unwrap_or(false) {
        for (_, v) in &mut ints {
            *v = -v.clone();
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn sparse_vec_merge_and_cancel() {
        let a = SparseVec::from_entries([(0, rat(1)), (2, rat(3))]);
        let b = SparseVec::from_entries([(0, rat(-1)), (1, rat(5))]);
        let s = a.add(&b);
        assert_eq!(s.get(0), rat(0));
        assert_eq!(s.get(1), rat(5));
        assert_eq!(s.get(2), rat(3));
        assert_eq!(s.nnz(), 2);
    }

    #[test]
    fn dump_round_trip() {
        let m = SparseRationalMatrix::from_triplets(
            2,
            3,
            [(0, 0, rat(1)), (1, 2, crate::ratio(-3, 7))],
        );
        let text = m.dump();
        assert!(text.starts_with("2 3\n"));
        assert!(text.contains("1 2 -3/7"));
        let back = SparseRationalMatrix::parse_dump(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn primitive_rows_clear_denominators() {
        let row = SparseVec::from_entries([(0, crate::ratio(1, 2)), (3, crate::ratio(-5, 6))]);
        let ints = primitive_int_row(&row);
        assert_eq!(ints, vec![(0, Int::from(3)), (3, Int::from(-5))]);
    }
}
