//! Small matrix plumbing shared by the structure constructions.

use exactla::{kernel, Field, Matrix, Quotient, SparseVec, Subspace};

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

/// Left inverse of the embedding of `u`: reads off the pivot coordinates.
pub(crate) fn coordinate_rows(u: &Subspace) -> Matrix {
    let rows = u.pivots().iter().map(|&p| SparseVec::unit(p, u.field().one())).collect();
    Matrix::from_rows(u.field(), u.ambient_dim(), rows)
}

/// `f·src` written in the coordinates of `I_pre ⊗ to ⊗ I_post`, or `None` if it leaves that subspace.
pub(crate) fn restrict_map(f: &Matrix, src: &Matrix, to: &Subspace, pre: usize, post: usize) -> Option<Matrix> {
    let image = f.mul(src);
    let res = padded(&coordinate_rows(to), pre, post).mul(&image);
    (padded(&to.embedding(), pre, post).mul(&res) == image).then_some(res)
}

/// The map induced by `f` from a quotient (given by a section and a spanning matrix of its kernel)
/// to `I_pre ⊗ to ⊗ I_post`; `None` if `f` does not kill the kernel.
pub(crate) fn descend_map(
    f: &Matrix,
    src_section: &Matrix,
    src_kernel: &Matrix,
    to: &Quotient,
    pre: usize,
    post: usize,
) -> Option<Matrix> {
    let p = padded(&to.projection, pre, post);
    let pf = p.mul(f);
    pf.mul(src_kernel).is_zero().then(|| pf.mul(src_section))
}

/// Columns spanning the kernel of a quotient map.
pub(crate) fn kernel_basis(q: &Quotient) -> Matrix {
    kernel(&q.projection).embedding()
}

pub(crate) fn is_invertible(m: &Matrix) -> bool {
    m.nrows() == m.ncols() && (m.nrows() == 0 || m.inverse().is_some())
}
