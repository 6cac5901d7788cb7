//! Sparse vectors and incremental row reduction.

use std::collections::BTreeMap;

use crate::scalar::{Field, Scalar};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, one: Scalar) -> Self {
        SparseVec { entries: vec![(i, one)] }
    }

    /// From `(index, value)` pairs in any order; duplicates are summed, zeros dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut m: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            match m.get_mut(&i) {
                Some(x) => *x += &v,
                None => {
                    m.insert(i, v);
                }
            }
        }
        SparseVec { entries: m.into_iter().filter(|(_, v)| !v.is_zero()).collect() }
    }

    /// From pairs already sorted by strictly increasing index and nonzero.
    pub fn from_sorted(entries: Vec<(usize, Scalar)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, field: Field, len: usize) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect() }
    }

    /// `self += c · other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, c * w));
                }
                (Some(_), Some(_)) => {
                    let (i, v) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    let s = v + c * w;
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, c * w));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut s = self.clone();
        if let Some((_, v)) = other.entries.first() {
            s.axpy(&v.field().one(), other);
        }
        s
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut s = self.clone();
        if let Some((_, v)) = other.entries.first() {
            s.axpy(&-v.field().one(), other);
        }
        s
    }

    pub fn dot(&self, other: &SparseVec) -> Option<Scalar> {
        let mut acc: Option<Scalar> = None;
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, x) = &self.entries[i];
            let (b, y) = &other.entries[j];
            if a < b {
                i += 1;
            } else if a > b {
                j += 1;
            } else {
                let t = x * y;
                match acc.as_mut() {
                    Some(s) => *s += &t,
                    None => acc = Some(t),
                }
                i += 1;
                j += 1;
            }
        }
        acc
    }

    /// Keep entries with index in `lo..hi`, shifted down by `lo`.
    pub fn window(&self, lo: usize, hi: usize) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, v)| (i - lo, v.clone()))
                .collect(),
        }
    }

    /// Shift every index up by `offset`.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect() }
    }

    /// Reindex through `f`, which must be strictly increasing on the support.
    pub fn remap_monotone(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_sorted(self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect())
    }
}

/// Accumulates a linear combination of sparse vectors into a dense buffer.
pub struct Accumulator {
    vals: Vec<Option<Scalar>>,
    touched: Vec<usize>,
}

impl Accumulator {
    pub fn new(len: usize) -> Self {
        Accumulator { vals: vec![None; len], touched: Vec::new() }
    }

    pub fn add(&mut self, i: usize, v: Scalar) {
        match &mut self.vals[i] {
            Some(x) => *x += &v,
            slot @ None => {
                *slot = Some(v);
                self.touched.push(i);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &SparseVec) {
        for (i, x) in v.iter() {
            self.add(*i, c * x);
        }
    }

    /// Drain into a sparse vector, leaving the accumulator empty.
    pub fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            if let Some(v) = self.vals[i].take() {
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
        }
        self.touched.clear();
        SparseVec::from_sorted(out)
    }
}

/// Incremental Gaussian elimination: keeps a set of rows with distinct pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduce `row` against the current pivots.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        let mut start = 0usize;
        loop {
            let hit = row
                .iter()
                .find(|(c, _)| *c >= start && self.pivot_row[*c].is_some())
                .map(|(c, v)| (*c, v.clone()));
            match hit {
                None => return row,
                Some((c, v)) => {
                    let p = &self.rows[self.pivot_row[c].unwrap()];
                    row.axpy(&-v, p);
                    start = c + 1;
                }
            }
        }
    }

    /// Insert a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        if row.is_zero() {
            return false;
        }
        let r = self.reduce(row);
        match r.leading() {
            None => false,
            Some((c, lead)) => {
                let c = *c;
                let inv = lead.inv().expect("nonzero pivot");
                let r = r.scale(&inv);
                self.pivot_row[c] = Some(self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }

    pub fn contains(&self, row: &SparseVec) -> bool {
        self.reduce(row.clone()).is_zero()
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Reduced row-echelon rows sorted by pivot column, and the pivot columns.
    pub fn into_rref(self) -> (Vec<SparseVec>, Vec<usize>) {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r.leading().map(|(c, _)| *c).unwrap());
        let pivots: Vec<usize> = rows.iter().map(|r| r.leading().unwrap().0).collect();
        for i in (0..rows.len()).rev() {
            let pc = pivots[i];
            let (head, tail) = rows.split_at_mut(i);
            let pr = &tail[0];
            for r in head.iter_mut() {
                if let Some(v) = r.get(pc).cloned() {
                    r.axpy(&-v, pr);
                }
            }
        }
        (rows, pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn axpy_cancels() {
        let mut a = SparseVec::from_pairs(vec![(0, q(1)), (2, q(3))]);
        let b = SparseVec::from_pairs(vec![(2, q(1)), (3, q(1))]);
        a.axpy(&q(-3), &b);
        assert_eq!(a, SparseVec::from_pairs(vec![(0, q(1)), (3, q(-3))]));
    }

    #[test]
    fn echelon_rank_and_rref() {
        let mut e = Echelon::new(3);
        assert!(e.insert(SparseVec::from_dense(&[q(1), q(1), q(0)])));
        assert!(e.insert(SparseVec::from_dense(&[q(1), q(0), q(1)])));
        assert!(!e.insert(SparseVec::from_dense(&[q(0), q(1), q(-1)])));
        let (rows, piv) = e.into_rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(rows[0], SparseVec::from_dense(&[q(1), q(0), q(1)]));
        assert_eq!(rows[1], SparseVec::from_dense(&[q(0), q(1), q(-1)]));
    }
}
