//! Matrix plumbing local to this crate.

use exactla::{Field, Matrix, SparseVec};

pub(crate) fn eye(field: Field, n: usize) -> Matrix {
    Matrix::identity(field, n)
}

/// `I_pre ⊗ m ⊗ I_post`.
pub(crate) fn padded(m: &Matrix, pre: usize, post: usize) -> Matrix {
    let f = m.field();
    let mut out = m.clone();
    if pre != 1 {
        out = eye(f, pre).kron(&out);
    }
    if post != 1 {
        out = out.kron(&eye(f, post));
    }
    out
}

pub(crate) fn column(field: Field, len: usize, v: &SparseVec) -> Matrix {
    Matrix::column_vector(field, len, v.clone())
}

/// Columns of `m` as vectors, sliced into consecutive blocks of length `block`.
pub(crate) fn block(v: &SparseVec, index: usize, block: usize) -> SparseVec {
    v.window(index * block, (index + 1) * block)
}

/// `dim ker(m)`.
pub(crate) fn nullity(m: &Matrix) -> usize {
    m.ncols() - m.rank()
}
