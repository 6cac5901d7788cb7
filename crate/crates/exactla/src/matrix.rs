//! Matrices acting on column vectors, stored as sparse rows.

use std::fmt;

use crate::error::LinAlgError;
use crate::scalar::{Field, Scalar};
use crate::sparse::{Accumulator, Echelon, SparseVec};

/// An `nrows × ncols` matrix over a fixed field. A matrix of shape `m × n` is a map
/// from an `n`-dimensional space to an `m`-dimensional one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> Self {
        Matrix { field, nrows, ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Matrix {
            field,
            nrows: n,
            ncols: n,
            rows: (0..n).map(|i| SparseVec::unit(i, field.one())).collect(),
        }
    }

    pub fn from_rows(field: Field, ncols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().is_none_or(|m| m < ncols)));
        Matrix { field, nrows: rows.len(), ncols, rows }
    }

    pub fn from_columns(field: Field, nrows: usize, cols: Vec<SparseVec>) -> Self {
        let ncols = cols.len();
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (j, c) in cols.into_iter().enumerate() {
            for (i, v) in c.into_entries() {
                buckets[i].push((j, v));
            }
        }
        Matrix {
            field,
            nrows,
            ncols,
            rows: buckets.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    pub fn from_dense(field: Field, rows: &[Vec<Scalar>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged dense matrix");
        Matrix::from_rows(field, ncols, rows.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        if dense.is_empty() {
            return Matrix::zeros(field, 0, 0);
        }
        Matrix::from_dense(field, &dense)
    }

    pub fn from_fn(field: Field, nrows: usize, ncols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let rows = (0..nrows)
            .map(|i| SparseVec::from_sorted((0..ncols).filter_map(|j| {
                let v = f(i, j);
                (!v.is_zero()).then_some((j, v))
            }).collect()))
            .collect();
        Matrix { field, nrows, ncols, rows }
    }

    /// A single column vector.
    pub fn column_vector(field: Field, len: usize, v: SparseVec) -> Self {
        Matrix::from_columns(field, len, vec![v])
    }

    /// A single row vector.
    pub fn row_vector(field: Field, len: usize, v: SparseVec) -> Self {
        Matrix::from_rows(field, len, vec![v])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].get(j).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec> {
        self.rows
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r.iter() {
                buckets[*j].push((i, v.clone()));
            }
        }
        buckets.into_iter().map(SparseVec::from_sorted).collect()
    }

    pub fn column(&self, j: usize) -> SparseVec {
        SparseVec::from_sorted(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.get(j).map(|v| (i, v.clone())))
                .collect(),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.rows.iter().map(|r| r.to_dense(self.field, self.ncols)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix { field: self.field, nrows: self.ncols, ncols: self.nrows, rows: self.columns() }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && self.rows.iter().enumerate().all(|(i, r)| {
                r.nnz() == 1 && r.leading().is_some_and(|(j, v)| *j == i && v.is_one())
            })
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.nnz()).sum()
    }

    fn check_same_shape(&self, other: &Matrix, what: &str) -> Result<(), LinAlgError> {
        if self.shape() != other.shape() {
            return Err(LinAlgError::Shape(format!(
                "{what}: {:?} vs {:?}",
                self.shape(),
                other.shape()
            )));
        }
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_same_shape(other, "add")?;
        let one = self.field.one();
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut s = a.clone();
                s.axpy(&one, b);
                s
            })
            .collect();
        Ok(self.with_rows(rows))
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_same_shape(other, "sub")?;
        let m1 = -self.field.one();
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut s = a.clone();
                s.axpy(&m1, b);
                s
            })
            .collect();
        Ok(self.with_rows(rows))
    }

    fn with_rows(&self, rows: Vec<SparseVec>) -> Matrix {
        Matrix { field: self.field, nrows: self.nrows, ncols: self.ncols, rows }
    }

    /// `self + other`; panics on shape mismatch.
    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).expect("matrix add")
    }

    /// `self − other`; panics on shape mismatch.
    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.try_sub(other).expect("matrix sub")
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        self.with_rows(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn neg(&self) -> Matrix {
        self.with_rows(self.rows.iter().map(|r| r.neg()).collect())
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.ncols != other.nrows {
            return Err(LinAlgError::Shape(format!(
                "mul: {:?} · {:?}",
                self.shape(),
                other.shape()
            )));
        }
        let mut acc = Accumulator::new(other.ncols);
        let rows = self
            .rows
            .iter()
            .map(|r| {
                for (k, v) in r.iter() {
                    acc.add_scaled(v, &other.rows[*k]);
                }
                acc.take()
            })
            .collect();
        Ok(Matrix { field: self.field, nrows: self.nrows, ncols: other.ncols, rows })
    }

    /// Matrix product `self · other`; panics on shape mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix mul")
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        debug_assert!(v.max_index().is_none_or(|m| m < self.ncols));
        SparseVec::from_sorted(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.dot(v).filter(|s| !s.is_zero()).map(|s| (i, s)))
                .collect(),
        )
    }

    /// Kronecker product; index of `(i, j)` in the product space is `i·dim₂ + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut rows = Vec::with_capacity(self.nrows * other.nrows);
        for a in &self.rows {
            for b in &other.rows {
                let mut e = Vec::with_capacity(a.nnz() * b.nnz());
                for (j1, x) in a.iter() {
                    for (j2, y) in b.iter() {
                        e.push((j1 * other.ncols + j2, x * y));
                    }
                }
                rows.push(SparseVec::from_sorted(e));
            }
        }
        Matrix {
            field: self.field,
            nrows: self.nrows * other.nrows,
            ncols: self.ncols * other.ncols,
            rows,
        }
    }

    /// Block `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.nrows, other.nrows, "hstack row mismatch");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut e = a.entries().to_vec();
                e.extend(b.shifted(self.ncols).into_entries());
                SparseVec::from_sorted(e)
            })
            .collect();
        Matrix { field: self.field, nrows: self.nrows, ncols: self.ncols + other.ncols, rows }
    }

    /// Block `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.ncols, other.ncols, "vstack column mismatch");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Matrix { field: self.field, nrows: self.nrows + other.nrows, ncols: self.ncols, rows }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let c = self.columns();
        Matrix::from_columns(self.field, self.nrows, cols.iter().map(|&j| c[j].clone()).collect())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_rows(self.field, self.ncols, rows.iter().map(|&i| self.rows[i].clone()).collect())
    }

    pub fn power(&self, k: u32) -> Matrix {
        assert_eq!(self.nrows, self.ncols);
        let mut acc = Matrix::identity(self.field, self.nrows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ncols);
        for r in &self.rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Reduced row-echelon form (nonzero rows only) and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (rows, piv) = self.echelon().into_rref();
        (Matrix::from_rows(self.field, self.ncols, rows), piv)
    }

    /// Some `X` with `self · X = rhs`, free variables set to zero; `None` if inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.nrows, rhs.nrows, "solve row mismatch");
        let n = self.ncols;
        let aug = self.hstack(rhs);
        let (rows, piv) = aug.echelon().into_rref();
        if piv.iter().any(|&c| c >= n) {
            return None;
        }
        let mut xrows = vec![SparseVec::new(); n];
        for (r, &c) in rows.iter().zip(&piv) {
            xrows[c] = r.window(n, n + rhs.ncols);
        }
        Some(Matrix::from_rows(self.field, rhs.ncols, xrows))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.nrows != self.ncols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.nrows))?;
        (self.mul(&x).is_identity()).then_some(x)
    }

    /// First entry (in row-major order) where the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        assert_eq!(self.shape(), other.shape());
        for (i, (a, b)) in self.rows.iter().zip(&other.rows).enumerate() {
            if a != b {
                let d = a.sub(b);
                return Some((i, d.leading().map(|(j, _)| *j).unwrap_or(0)));
            }
        }
        None
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.nrows, self.ncols, self.field)?;
        if self.nrows * self.ncols <= 400 {
            for r in self.to_dense() {
                let cells: Vec<String> = r.iter().map(|s| s.to_text()).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        }
        Ok(())
    }
}
