//! Canonical subspaces, kernels, quotients, equalizers and coequalizers.

use crate::error::LinAlgError;
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::sparse::{Echelon, SparseVec};

/// A linear subspace of `field^ambient`, stored by its reduced row-echelon basis.
/// The basis is the unique canonical representative, so `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary vectors.
    pub fn span<I: IntoIterator<Item = SparseVec>>(field: Field, ambient: usize, vectors: I) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(v);
        }
        Self::from_echelon(field, e)
    }

    fn from_echelon(field: Field, e: Echelon) -> Self {
        let ambient = e.ncols();
        let (rows, pivots) = e.into_rref();
        Subspace { basis: Matrix::from_rows(field, ambient, rows), pivots }
    }

    /// Span of the rows of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        Self::span(m.field(), m.ncols(), m.rows().iter().cloned())
    }

    /// Image (column space) of a map.
    pub fn image(m: &Matrix) -> Self {
        Self::span(m.field(), m.nrows(), m.columns())
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Basis vectors as the rows of an RREF matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> &[SparseVec] {
        self.basis.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Inclusion map `field^dim → field^ambient` (basis vectors as columns).
    pub fn embedding(&self) -> Matrix {
        self.basis.transpose()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim());
        for r in self.basis.rows() {
            e.insert(r.clone());
        }
        e
    }

    /// Coordinates with respect to the canonical basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let coords = SparseVec::from_sorted(
            self.pivots
                .iter()
                .enumerate()
                .filter_map(|(k, &p)| v.get(p).map(|x| (k, x.clone())))
                .collect(),
        );
        let mut back = v.clone();
        for (k, c) in coords.iter() {
            back.axpy(&-c, &self.basis.rows()[*k]);
        }
        back.is_zero().then_some(coords)
    }

    /// Coordinates of every column of `m` (each must lie in the subspace), as a `dim × ncols` matrix.
    pub fn coordinates_of_columns(&self, m: &Matrix) -> Option<Matrix> {
        let cols = m.columns();
        let mut out = Vec::with_capacity(cols.len());
        for c in &cols {
            out.push(self.coordinates(c)?);
        }
        Some(Matrix::from_columns(self.field(), self.dim(), out))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    /// First basis vector of `self` not contained in `other`.
    pub fn first_outside(&self, other: &Subspace) -> Option<SparseVec> {
        self.basis_vectors().iter().find(|v| !other.contains(v)).cloned()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.first_outside(other).is_none()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = self.echelon();
        for r in other.basis.rows() {
            e.insert(r.clone());
        }
        Self::from_echelon(self.field(), e)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(self.field(), self.ambient_dim());
        }
        // Solve Σ αᵢuᵢ − Σ βⱼwⱼ = 0 and map α back.
        let stacked = self.basis.vstack(&other.basis.neg());
        let rel = kernel(&stacked.transpose());
        let vecs = rel.basis_vectors().iter().map(|r| {
            let alpha = r.window(0, a);
            self.basis.transpose().apply(&alpha)
        });
        Subspace::span(self.field(), self.ambient_dim(), vecs.collect::<Vec<_>>())
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.ncols(), self.ambient_dim(), "map domain mismatch");
        Subspace::span(f.field(), f.nrows(), self.basis_vectors().iter().map(|v| f.apply(v)).collect::<Vec<_>>())
    }

    /// Preimage `{v : f v ∈ self}`.
    pub fn preimage(&self, f: &Matrix) -> Subspace {
        assert_eq!(f.nrows(), self.ambient_dim(), "preimage codomain mismatch");
        let q = quotient_of(self);
        kernel(&q.projection.mul(f))
    }

    /// Tensor product `self ⊗ other` inside the tensor product of the ambient spaces.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let n2 = other.ambient_dim();
        let mut vecs = Vec::with_capacity(self.dim() * other.dim());
        for u in self.basis_vectors() {
            for w in other.basis_vectors() {
                let mut e = Vec::with_capacity(u.nnz() * w.nnz());
                for (i, x) in u.iter() {
                    for (j, y) in w.iter() {
                        e.push((i * n2 + j, x * y));
                    }
                }
                vecs.push(SparseVec::from_sorted(e));
            }
        }
        Subspace::span(self.field(), self.ambient_dim() * n2, vecs)
    }
}

/// `{v : f·v = 0}` in canonical form.
pub fn kernel(f: &Matrix) -> Subspace {
    let n = f.ncols();
    let field = f.field();
    let (rows, pivots) = f.rref();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let rows = rows.rows();
    let one = field.one();
    let vecs: Vec<SparseVec> = (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut e: Vec<(usize, Scalar)> = rows
                .iter()
                .zip(&pivots)
                .filter_map(|(r, &p)| r.get(j).map(|v| (p, -v)))
                .collect();
            e.push((j, one.clone()));
            SparseVec::from_pairs(e)
        })
        .collect();
    Subspace::span(field, n, vecs)
}

/// A quotient map together with its canonical section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// `(ambient − dim U) × ambient`, kernel exactly `U`.
    pub projection: Matrix,
    /// `ambient × (ambient − dim U)`, spanning the non-pivot coordinate axes of `U`.
    pub section: Matrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.projection.nrows()
    }
}

fn quotient_of(u: &Subspace) -> Quotient {
    let n = u.ambient_dim();
    let field = u.field();
    let mut is_pivot = vec![false; n];
    for &p in u.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    let mut pos = vec![usize::MAX; n];
    for (k, &j) in free.iter().enumerate() {
        pos[j] = k;
    }
    // v ↦ v − Σ v[pᵢ]·bᵢ, read off on the free coordinates.
    let mut cols: Vec<SparseVec> = Vec::with_capacity(n);
    let mut piv_iter = 0usize;
    for j in 0..n {
        if is_pivot[j] {
            let b = &u.basis_vectors()[piv_iter];
            piv_iter += 1;
            cols.push(SparseVec::from_sorted(
                b.iter()
                    .filter(|(c, _)| !is_pivot[*c])
                    .map(|(c, v)| (pos[*c], -v))
                    .collect(),
            ));
        } else {
            cols.push(SparseVec::unit(pos[j], field.one()));
        }
    }
    let projection = Matrix::from_columns(field, free.len(), cols);
    let section = Matrix::from_columns(
        field,
        n,
        free.iter().map(|&j| SparseVec::unit(j, field.one())).collect(),
    );
    Quotient { projection, section }
}

/// Quotient of `field^ambient_dim` by `u`.
pub fn quotient(ambient_dim: usize, u: &Subspace) -> Result<Quotient, LinAlgError> {
    if u.ambient_dim() != ambient_dim {
        return Err(LinAlgError::Shape(format!(
            "quotient: subspace of dim-{} space used in dim-{ambient_dim} space",
            u.ambient_dim()
        )));
    }
    Ok(quotient_of(u))
}

/// `kernel(f − g)`.
pub fn equalizer(f: &Matrix, g: &Matrix) -> Result<Subspace, LinAlgError> {
    Ok(kernel(&f.try_sub(g)?))
}

/// Quotient of the shared codomain by `image(f − g)`.
pub fn coequalizer(f: &Matrix, g: &Matrix) -> Result<Quotient, LinAlgError> {
    let d = f.try_sub(g)?;
    Ok(quotient_of(&Subspace::image(&d)))
}
