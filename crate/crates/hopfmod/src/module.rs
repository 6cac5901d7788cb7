//! Finite-dimensional modules over an algebra given by structure constants.

use correspondence::Side;
use exactla::{build_map, permutation_matrix, quotient, Field, Matrix, Quotient, SparseVec, Subspace};
use hopfcore::Algebra;

use crate::error::ModError;
use crate::util::{column, eye, restrict_map};

/// A module of dimension `dim` over an algebra of dimension `algebra_dim`. The action is
/// `dim × (algebra_dim·dim)` on `A⊗M` (left, column `a·dim + m`) or `dim × (dim·algebra_dim)`
/// on `M⊗A` (right, column `m·algebra_dim + a`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleStr {
    side: Side,
    algebra_dim: usize,
    action: Matrix,
}

impl ModuleStr {
    pub fn new(alg: &Algebra, side: Side, action: Matrix) -> Result<Self, ModError> {
        let d = alg.dim();
        let n = action.nrows();
        if action.ncols() != d * n {
            return Err(ModError::Shape(format!("action is {}x{}, algebra has dim {d}", n, action.ncols())));
        }
        let f = action.field();
        let (assoc_l, assoc_r, unit) = match side {
            Side::Left => (
                action.mul(&alg.mult().kron(&eye(f, n))),
                action.mul(&eye(f, d).kron(&action)),
                action.mul(&alg.unit().kron(&eye(f, n))),
            ),
            Side::Right => (
                action.mul(&action.kron(&eye(f, d))),
                action.mul(&eye(f, n).kron(alg.mult())),
                action.mul(&eye(f, n).kron(alg.unit())),
            ),
        };
        if assoc_l != assoc_r {
            return Err(ModError::Law { structure: "module", law: "associativity" });
        }
        if !unit.is_identity() {
            return Err(ModError::Law { structure: "module", law: "unit action" });
        }
        Ok(ModuleStr { side, algebra_dim: d, action })
    }

    pub(crate) fn from_parts(side: Side, algebra_dim: usize, action: Matrix) -> Self {
        debug_assert_eq!(action.ncols(), algebra_dim * action.nrows());
        ModuleStr { side, algebra_dim, action }
    }

    pub fn regular(alg: &Algebra, side: Side) -> Self {
        ModuleStr::from_parts(side, alg.dim(), alg.mult().clone())
    }

    /// `A^rank`, copy `k` occupying coordinates `k·dim A ..`.
    pub fn free(alg: &Algebra, side: Side, rank: usize) -> Self {
        let d = alg.dim();
        let mult = alg.mult_map();
        let action = match side {
            Side::Left => build_map(alg.field(), &[d, rank, d], rank * d, |t| t.permute(&[1, 0, 2]).apply(1, 2, mult, &[d])),
            Side::Right => build_map(alg.field(), &[rank, d, d], rank * d, |t| t.apply(1, 2, mult, &[d])),
        };
        ModuleStr::from_parts(side, d, action)
    }

    /// The one-dimensional module on which `a` acts by `chi(a)`.
    pub fn character(alg: &Algebra, side: Side, chi: &Matrix) -> Result<Self, ModError> {
        ModuleStr::new(alg, side, chi.clone())
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.action.nrows()
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn field(&self) -> Field {
        self.action.field()
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    /// Matrix of `m ↦ a·m` or `m ↦ m·a`.
    pub fn act(&self, a: &SparseVec) -> Matrix {
        let f = self.field();
        let a = column(f, self.algebra_dim, a);
        let n = eye(f, self.dim());
        match self.side {
            Side::Left => self.action.mul(&a.kron(&n)),
            Side::Right => self.action.mul(&n.kron(&a)),
        }
    }

    /// The same action read as a module over the opposite algebra, on the other side.
    pub fn opposite(&self) -> ModuleStr {
        let (n, d) = (self.dim(), self.algebra_dim);
        let swap = match self.side {
            Side::Left => permutation_matrix(self.field(), &[n, d], &[1, 0]),
            Side::Right => permutation_matrix(self.field(), &[d, n], &[1, 0]),
        };
        ModuleStr::from_parts(self.side.flip(), d, self.action.mul(&swap))
    }

    /// Restriction along an algebra map with matrix `incl` (`algebra_dim × d′`).
    pub fn restrict_scalars(&self, incl: &Matrix) -> ModuleStr {
        let n = eye(self.field(), self.dim());
        let action = match self.side {
            Side::Left => self.action.mul(&incl.kron(&n)),
            Side::Right => self.action.mul(&n.kron(incl)),
        };
        ModuleStr::from_parts(self.side, incl.ncols(), action)
    }

    fn padding(&self) -> (usize, usize) {
        match self.side {
            Side::Left => (self.algebra_dim, 1),
            Side::Right => (1, self.algebra_dim),
        }
    }

    /// The action restricted to `u`, in the canonical coordinates of `u`.
    pub fn submodule(&self, u: &Subspace) -> Result<ModuleStr, ModError> {
        let (pre, post) = self.padding();
        let src = crate::util::padded(&u.embedding(), pre, post);
        let action = restrict_map(&self.action, &src, u, 1, 1).ok_or(ModError::NotStable("action"))?;
        Ok(ModuleStr::from_parts(self.side, self.algebra_dim, action))
    }

    pub fn quotient(&self, u: &Subspace) -> Result<(ModuleStr, Quotient), ModError> {
        if !self.is_submodule(u) {
            return Err(ModError::NotStable("action"));
        }
        let q = quotient(self.dim(), u)?;
        let (pre, post) = self.padding();
        let action = q.projection.mul(&self.action).mul(&crate::util::padded(&q.section, pre, post));
        Ok((ModuleStr::from_parts(self.side, self.algebra_dim, action), q))
    }

    pub fn is_submodule(&self, u: &Subspace) -> bool {
        (0..self.algebra_dim).all(|j| {
            let a = self.act(&SparseVec::unit(j, self.field().one()));
            u.map(&a).is_subspace_of(u)
        })
    }

    /// The submodule generated by `vectors`.
    pub fn generated(&self, vectors: &[SparseVec]) -> Subspace {
        let acts: Vec<Matrix> = (0..self.algebra_dim).map(|j| self.act(&SparseVec::unit(j, self.field().one()))).collect();
        let mut u = Subspace::span(self.field(), self.dim(), vectors.iter().cloned());
        loop {
            let next = acts.iter().fold(u.clone(), |acc, a| acc.sum(&u.map(a)));
            if next.dim() == u.dim() {
                return u;
            }
            u = next;
        }
    }

    /// `M ⊕ N`, coordinates of `N` following those of `M`.
    pub fn direct_sum(&self, other: &ModuleStr) -> ModuleStr {
        assert_eq!((self.side, self.algebra_dim), (other.side, other.algebra_dim), "direct sum of unlike modules");
        let (n1, n2, d) = (self.dim(), other.dim(), self.algebra_dim);
        let n = n1 + n2;
        let mut cols = Vec::with_capacity(d * n);
        let split = |c: usize| match self.side {
            Side::Left => (c / n, c % n),
            Side::Right => (c % d, c / d),
        };
        for c in 0..d * n {
            let (a, m) = split(c);
            let col = if m < n1 {
                self.action.column(match self.side {
                    Side::Left => a * n1 + m,
                    Side::Right => m * d + a,
                })
            } else {
                let m = m - n1;
                other
                    .action
                    .column(match self.side {
                        Side::Left => a * n2 + m,
                        Side::Right => m * d + a,
                    })
                    .shifted(n1)
            };
            cols.push(col);
        }
        ModuleStr::from_parts(self.side, d, Matrix::from_columns(self.field(), n, cols))
    }
}
