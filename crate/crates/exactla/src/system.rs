//! Linear systems whose unknown is a matrix: `Σ cₖ·Lₖ·(I ⊗ X ⊗ I)·Rₖ = B`.
//!
//! Every Hom-space, splitting and colinearity problem in the workspace is phrased this way.

use std::collections::HashMap;

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::sparse::{Echelon, SparseVec};
use crate::subspace::kernel;

#[derive(Clone)]
enum Coeff {
    One,
    MinusOne,
    Value(Scalar),
}

/// One summand `c · L · (I_pre ⊗ X ⊗ I_post) · R`; `None` stands for an identity.
#[derive(Clone)]
pub struct Term<'a> {
    coeff: Coeff,
    left: Option<&'a Matrix>,
    right: Option<&'a Matrix>,
    pre: usize,
    post: usize,
}

impl<'a> Term<'a> {
    /// `X`.
    pub fn x() -> Self {
        Term { coeff: Coeff::One, left: None, right: None, pre: 1, post: 1 }
    }

    /// `L · X`.
    pub fn left(l: &'a Matrix) -> Self {
        Term { left: Some(l), ..Term::x() }
    }

    /// `X · R`.
    pub fn right(r: &'a Matrix) -> Self {
        Term { right: Some(r), ..Term::x() }
    }

    /// `L · X · R`.
    pub fn sandwich(l: &'a Matrix, r: &'a Matrix) -> Self {
        Term { left: Some(l), right: Some(r), ..Term::x() }
    }

    /// Replace `X` by `I_pre ⊗ X ⊗ I_post`.
    pub fn tensored(mut self, pre: usize, post: usize) -> Self {
        self.pre = pre;
        self.post = post;
        self
    }

    pub fn scaled(mut self, c: Scalar) -> Self {
        self.coeff = Coeff::Value(match self.coeff {
            Coeff::One => c,
            Coeff::MinusOne => -c,
            Coeff::Value(a) => a * c,
        });
        self
    }

    pub fn negated(mut self) -> Self {
        self.coeff = match self.coeff {
            Coeff::One => Coeff::MinusOne,
            Coeff::MinusOne => Coeff::One,
            Coeff::Value(a) => Coeff::Value(-a),
        };
        self
    }
}

/// Accumulates equations for an unknown `rows × cols` matrix `X`.
pub struct MatrixSystem {
    field: Field,
    xrows: usize,
    xcols: usize,
    equations: Vec<SparseVec>,
}

impl MatrixSystem {
    pub fn new(field: Field, xrows: usize, xcols: usize) -> Self {
        MatrixSystem { field, xrows, xcols, equations: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.xrows * self.xcols
    }

    /// Add `Σ terms = rhs` (`rhs = None` means zero). All terms must have the same output shape.
    pub fn equation(&mut self, terms: &[Term<'_>], rhs: Option<&Matrix>) {
        let n = self.unknowns();
        let mut eqs: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
        let mut shape: Option<(usize, usize)> = None;
        for t in terms {
            let pre = t.pre;
            let post = t.post;
            let inner_rows = pre * self.xrows * post;
            let inner_cols = pre * self.xcols * post;
            let out_rows = t.left.map_or(inner_rows, |l| {
                assert_eq!(l.ncols(), inner_rows, "left factor shape");
                l.nrows()
            });
            let out_cols = t.right.map_or(inner_cols, |r| {
                assert_eq!(r.nrows(), inner_cols, "right factor shape");
                r.ncols()
            });
            match shape {
                None => shape = Some((out_rows, out_cols)),
                Some(s) => assert_eq!(s, (out_rows, out_cols), "terms disagree in shape"),
            }
            let c = match &t.coeff {
                Coeff::One => self.field.one(),
                Coeff::MinusOne => -self.field.one(),
                Coeff::Value(v) => v.clone(),
            };
            let lcols: Option<Vec<SparseVec>> = t.left.map(|l| l.columns());
            let one = self.field.one();
            for p in 0..pre {
                for q in 0..post {
                    for a in 0..self.xrows {
                        let li = (p * self.xrows + a) * post + q;
                        let lcol: SparseVec = match &lcols {
                            Some(cols) => cols[li].clone(),
                            None => SparseVec::unit(li, one.clone()),
                        };
                        if lcol.is_zero() {
                            continue;
                        }
                        for b in 0..self.xcols {
                            let ri = (p * self.xcols + b) * post + q;
                            let rrow: SparseVec = match t.right {
                                Some(r) => r.row(ri).clone(),
                                None => SparseVec::unit(ri, one.clone()),
                            };
                            let unknown = a * self.xcols + b;
                            for (r, lv) in lcol.iter() {
                                let lc = &c * lv;
                                for (col, rv) in rrow.iter() {
                                    eqs.entry((*r, *col)).or_default().push((unknown, &lc * rv));
                                }
                            }
                        }
                    }
                }
            }
        }
        if let Some(b) = rhs {
            if let Some(s) = shape {
                assert_eq!(s, b.shape(), "rhs shape");
            }
            for (i, row) in b.rows().iter().enumerate() {
                for (j, v) in row.iter() {
                    eqs.entry((i, *j)).or_default().push((n, -v));
                }
            }
        }
        let mut keys: Vec<(usize, usize)> = eqs.keys().copied().collect();
        keys.sort_unstable();
        for k in keys {
            let row = SparseVec::from_pairs(eqs.remove(&k).unwrap());
            if !row.is_zero() {
                self.equations.push(row);
            }
        }
    }

    fn echelon(&self, with_rhs: bool) -> Echelon {
        let n = self.unknowns();
        let mut e = Echelon::new(n + 1);
        for r in &self.equations {
            if with_rhs {
                e.insert(r.clone());
            } else {
                e.insert(r.window(0, n));
            }
        }
        e
    }

    /// A solution with all free unknowns zero (the first pivot solution), if consistent.
    pub fn solve(&self) -> Option<Matrix> {
        let n = self.unknowns();
        let (rows, piv) = self.echelon(true).into_rref();
        if piv.last() == Some(&n) {
            return None;
        }
        // Row r reads X[p] + Σ free = -rhs stored at column n (equation was LHS - rhs = 0).
        let mut x = vec![self.field.zero(); n];
        for (r, &p) in rows.iter().zip(&piv) {
            if let Some(v) = r.get(n) {
                x[p] = -v;
            }
        }
        Some(self.unflatten(&SparseVec::from_dense(&x)))
    }

    /// Basis of the homogeneous solution space.
    pub fn solution_space(&self) -> Vec<Matrix> {
        let n = self.unknowns();
        let (rows, _) = self.echelon(false).into_rref();
        let m = Matrix::from_rows(self.field, n, rows.into_iter().map(|r| r.window(0, n)).collect());
        kernel(&m).basis_vectors().iter().map(|v| self.unflatten(v)).collect()
    }

    pub fn solution_dim(&self) -> usize {
        self.unknowns() - self.echelon(false).rank()
    }

    /// Row-major flattening of an unknown back into a matrix.
    pub fn unflatten(&self, v: &SparseVec) -> Matrix {
        let mut rows = vec![Vec::new(); self.xrows];
        for (k, s) in v.iter() {
            rows[k / self.xcols].push((k % self.xcols, s.clone()));
        }
        Matrix::from_rows(self.field, self.xcols, rows.into_iter().map(SparseVec::from_sorted).collect())
    }
}
