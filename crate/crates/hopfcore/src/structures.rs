//! Plain finite-dimensional algebras and coalgebras given by structure matrices.

use exactla::{ColumnMap, Field, Matrix, SparseVec};

use crate::error::HopfError;

/// Associative unital algebra: `mult` is `dim × dim²` (column `i·dim + j` holds `eᵢ·eⱼ`),
/// `unit` is `dim × 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    mult: Matrix,
    unit: Matrix,
    mult_cols: ColumnMap,
}

impl Algebra {
    pub fn new(mult: Matrix, unit: Matrix) -> Result<Self, HopfError> {
        let n = mult.nrows();
        if mult.ncols() != n * n || unit.shape() != (n, 1) {
            return Err(HopfError::Shape(format!(
                "algebra of dim {n}: mult {:?}, unit {:?}",
                mult.shape(),
                unit.shape()
            )));
        }
        let id = Matrix::identity(mult.field(), n);
        let assoc_l = mult.mul(&mult.kron(&id));
        let assoc_r = mult.mul(&id.kron(&mult));
        if let Some((_, c)) = assoc_l.first_difference(&assoc_r) {
            return Err(HopfError::NotAnAlgebra(format!(
                "associativity fails at basis triple {:?}",
                exactla::tensor::unflatten_index(c, &[n, n, n])
            )));
        }
        if !mult.mul(&unit.kron(&id)).is_identity() || !mult.mul(&id.kron(&unit)).is_identity() {
            return Err(HopfError::NotAnAlgebra("unit law fails".into()));
        }
        let mult_cols = ColumnMap::new(&mult);
        Ok(Algebra { mult, unit, mult_cols })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.mult.nrows()
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn mult_map(&self) -> &ColumnMap {
        &self.mult_cols
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn unit_vector(&self) -> SparseVec {
        self.unit.column(0)
    }

    pub fn product(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut pairs = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                for (k, z) in self.mult_cols.column(i * n + j).iter() {
                    pairs.push((*k, x * y * z));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// Matrix of `v ↦ a·v`.
    pub fn left_mult(&self, a: &SparseVec) -> Matrix {
        let n = self.dim();
        let cols = (0..n).map(|j| self.product(a, &SparseVec::unit(j, self.field().one()))).collect();
        Matrix::from_columns(self.field(), n, cols)
    }

    /// Matrix of `v ↦ v·a`.
    pub fn right_mult(&self, a: &SparseVec) -> Matrix {
        let n = self.dim();
        let cols = (0..n).map(|j| self.product(&SparseVec::unit(j, self.field().one()), a)).collect();
        Matrix::from_columns(self.field(), n, cols)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        let swap = exactla::permutation_matrix(self.field(), &[n, n], &[1, 0]);
        self.mult.mul(&swap) == self.mult
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        let swap = exactla::permutation_matrix(self.field(), &[n, n], &[1, 0]);
        Algebra::new(self.mult.mul(&swap), self.unit.clone()).expect("opposite of an algebra")
    }

    /// The dual coalgebra: comultiplication is the transpose of multiplication.
    pub fn dual_coalgebra(&self) -> Coalgebra {
        Coalgebra::new(self.mult.transpose(), self.unit.transpose()).expect("dual of an algebra")
    }
}

/// Coassociative counital coalgebra: `comult` is `dim² × dim`, `counit` is `1 × dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    comult: Matrix,
    counit: Matrix,
    comult_cols: ColumnMap,
}

impl Coalgebra {
    pub fn new(comult: Matrix, counit: Matrix) -> Result<Self, HopfError> {
        let n = comult.ncols();
        if comult.nrows() != n * n || counit.shape() != (1, n) {
            return Err(HopfError::Shape(format!(
                "coalgebra of dim {n}: comult {:?}, counit {:?}",
                comult.shape(),
                counit.shape()
            )));
        }
        let id = Matrix::identity(comult.field(), n);
        let l = comult.kron(&id).mul(&comult);
        let r = id.kron(&comult).mul(&comult);
        if let Some((_, c)) = l.first_difference(&r) {
            return Err(HopfError::NotACoalgebra(format!("coassociativity fails at basis element {c}")));
        }
        if !counit.kron(&id).mul(&comult).is_identity() || !id.kron(&counit).mul(&comult).is_identity() {
            return Err(HopfError::NotACoalgebra("counit law fails".into()));
        }
        let comult_cols = ColumnMap::new(&comult);
        Ok(Coalgebra { comult, counit, comult_cols })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.comult.ncols()
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn comult_map(&self) -> &ColumnMap {
        &self.comult_cols
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn counit_vector(&self) -> SparseVec {
        self.counit.row(0).clone()
    }

    pub fn coproduct(&self, v: &SparseVec) -> SparseVec {
        self.comult.apply(v)
    }

    pub fn counit_of(&self, v: &SparseVec) -> exactla::Scalar {
        self.counit.row(0).dot(v).unwrap_or_else(|| self.field().zero())
    }

    pub fn is_grouplike(&self, v: &SparseVec) -> bool {
        let n = self.dim();
        let mut vv = Vec::new();
        for (i, x) in v.iter() {
            for (j, y) in v.iter() {
                vv.push((i * n + j, x * y));
            }
        }
        self.coproduct(v) == SparseVec::from_pairs(vv) && self.counit_of(v).is_one()
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        let swap = exactla::permutation_matrix(self.field(), &[n, n], &[1, 0]);
        swap.mul(&self.comult) == self.comult
    }

    pub fn co_opposite(&self) -> Coalgebra {
        let n = self.dim();
        let swap = exactla::permutation_matrix(self.field(), &[n, n], &[1, 0]);
        Coalgebra::new(swap.mul(&self.comult), self.counit.clone()).expect("co-opposite")
    }

    /// The dual algebra `C*`: `(f·g)(c) = f(c₁)g(c₂)`, multiplication is the transpose of Δ.
    pub fn dual_algebra(&self) -> Algebra {
        Algebra::new(self.comult.transpose(), self.counit.transpose()).expect("dual of a coalgebra")
    }
}
