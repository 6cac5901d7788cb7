//! Elements of tensor products of coordinate spaces, manipulated factor by factor.
//!
//! A tensor over factor dimensions `[d₀, …, d_{k−1}]` is a sparse vector indexed row-major:
//! `(i₀, …, i_{k−1}) ↦ ((i₀·d₁ + i₁)·d₂ + …)`. Structure maps act on contiguous blocks of
//! factors; this is how every Sweedler-notation formula is evaluated without forming large
//! Kronecker products.

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::sparse::{Accumulator, SparseVec};

/// A linear map stored by columns, for repeated application to basis tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMap {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl ColumnMap {
    pub fn new(m: &Matrix) -> Self {
        ColumnMap { nrows: m.nrows(), cols: m.columns() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }
}

impl From<&Matrix> for ColumnMap {
    fn from(m: &Matrix) -> Self {
        ColumnMap::new(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    dims: Vec<usize>,
    v: SparseVec,
}

fn prod(d: &[usize]) -> usize {
    d.iter().product()
}

impl Tensor {
    pub fn new(field: Field, dims: &[usize], v: SparseVec) -> Self {
        debug_assert!(v.max_index().is_none_or(|m| m < prod(dims)));
        Tensor { field, dims: dims.to_vec(), v }
    }

    /// The basis tensor with flat index `flat`.
    pub fn basis(field: Field, dims: &[usize], flat: usize) -> Self {
        Tensor::new(field, dims, SparseVec::unit(flat, field.one()))
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn vector(&self) -> &SparseVec {
        &self.v
    }

    pub fn into_vector(self) -> SparseVec {
        self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    /// Apply `map` (columns indexed by the flattened block) to factors `at..at+len`,
    /// replacing them by factors of dimensions `out`. `len = 0` inserts a fixed vector.
    pub fn apply(self, at: usize, len: usize, map: &ColumnMap, out: &[usize]) -> Tensor {
        assert!(at + len <= self.dims.len(), "block out of range");
        let b_in = prod(&self.dims[at..at + len]);
        let b_out = prod(out);
        assert_eq!(map.ncols(), b_in, "map domain does not match block");
        assert_eq!(map.nrows(), b_out, "map codomain does not match output factors");
        let s = prod(&self.dims[at + len..]);
        let mut dims = self.dims[..at].to_vec();
        dims.extend_from_slice(out);
        dims.extend_from_slice(&self.dims[at + len..]);
        let total = prod(&dims);
        let mut acc = Accumulator::new(total);
        for (idx, c) in self.v.iter() {
            let suf = idx % s;
            let rest = idx / s;
            let blk = rest % b_in;
            let pre = rest / b_in;
            for (r, x) in map.column(blk).iter() {
                acc.add((pre * b_out + r) * s + suf, c * x);
            }
        }
        Tensor { field: self.field, dims, v: acc.take() }
    }

    /// Apply a map on a single factor.
    pub fn map(self, at: usize, m: &ColumnMap) -> Tensor {
        let out = [m.nrows()];
        self.apply(at, 1, m, &out)
    }

    /// Insert the vector `w` (of dimension `dim`) as a new factor at position `at`.
    pub fn insert(self, at: usize, w: &SparseVec, dim: usize) -> Tensor {
        let m = ColumnMap { nrows: dim, cols: vec![w.clone()] };
        self.apply(at, 0, &m, &[dim])
    }

    /// Reorder factors: new factor `k` is old factor `perm[k]`.
    pub fn permute(self, perm: &[usize]) -> Tensor {
        let k = self.dims.len();
        assert_eq!(perm.len(), k, "permutation length");
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut new_stride = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            new_stride[i] = new_stride[i + 1] * new_dims[i + 1];
        }
        // Stride of old factor p in the new layout.
        let mut stride_of_old = vec![0usize; k];
        for (pos, &p) in perm.iter().enumerate() {
            stride_of_old[p] = new_stride[pos];
        }
        let pairs = self.v.iter().map(|(idx, c)| {
            let mut rem = *idx;
            let mut flat = 0usize;
            for p in (0..k).rev() {
                let i = rem % self.dims[p];
                rem /= self.dims[p];
                flat += i * stride_of_old[p];
            }
            (flat, c.clone())
        });
        Tensor { field: self.field, dims: new_dims, v: SparseVec::from_pairs(pairs) }
    }

    pub fn scale(self, c: &Scalar) -> Tensor {
        Tensor { v: self.v.scale(c), ..self }
    }
}

/// Build the matrix of a linear map from its action on basis tensors of `in_dims`.
pub fn build_map(
    field: Field,
    in_dims: &[usize],
    out_dim: usize,
    f: impl Fn(Tensor) -> Tensor,
) -> Matrix {
    let n = prod(in_dims);
    let cols = (0..n)
        .map(|j| {
            let t = f(Tensor::basis(field, in_dims, j));
            assert_eq!(prod(t.dims()), out_dim, "map output dimension");
            t.into_vector()
        })
        .collect();
    Matrix::from_columns(field, out_dim, cols)
}

/// The permutation map between tensor products; new factor `k` is old factor `perm[k]`.
pub fn permutation_matrix(field: Field, dims: &[usize], perm: &[usize]) -> Matrix {
    build_map(field, dims, prod(dims), |t| t.permute(perm))
}

/// Split a flat index into its multi-index.
pub fn unflatten_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for p in (0..dims.len()).rev() {
        out[p] = idx % dims[p];
        idx /= dims[p];
    }
    out
}

pub fn flatten_index(multi: &[usize], dims: &[usize]) -> usize {
    multi.iter().zip(dims).fold(0, |acc, (i, d)| acc * d + i)
}
