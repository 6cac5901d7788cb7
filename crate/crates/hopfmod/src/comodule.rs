//! Finite-dimensional comodules over a coalgebra given by structure constants.

use correspondence::Side;
use exactla::{build_map, kernel, permutation_matrix, quotient, Field, Matrix, Quotient, SparseVec, Subspace};
use hopfcore::Coalgebra;

use crate::error::ModError;
use crate::util::{column, eye, padded};

/// A comodule of dimension `dim` over a coalgebra of dimension `coalgebra_dim`. The coaction is
/// `V → V⊗C` (right, row `v·c + j`) or `V → C⊗V` (left, row `j·dim + v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleStr {
    side: Side,
    coalgebra_dim: usize,
    coaction: Matrix,
}

impl ComoduleStr {
    pub fn new(coalg: &Coalgebra, side: Side, coaction: Matrix) -> Result<Self, ModError> {
        let c = coalg.dim();
        let n = coaction.ncols();
        if coaction.nrows() != c * n {
            return Err(ModError::Shape(format!("coaction is {}x{n}, coalgebra has dim {c}", coaction.nrows())));
        }
        let f = coaction.field();
        let (assoc_l, assoc_r, counit) = match side {
            Side::Right => (
                coaction.kron(&eye(f, c)).mul(&coaction),
                eye(f, n).kron(coalg.comult()).mul(&coaction),
                eye(f, n).kron(coalg.counit()).mul(&coaction),
            ),
            Side::Left => (
                eye(f, c).kron(&coaction).mul(&coaction),
                coalg.comult().kron(&eye(f, n)).mul(&coaction),
                coalg.counit().kron(&eye(f, n)).mul(&coaction),
            ),
        };
        if assoc_l != assoc_r {
            return Err(ModError::Law { structure: "comodule", law: "coassociativity" });
        }
        if !counit.is_identity() {
            return Err(ModError::Law { structure: "comodule", law: "counit law" });
        }
        Ok(ComoduleStr { side, coalgebra_dim: c, coaction })
    }

    pub(crate) fn from_parts(side: Side, coalgebra_dim: usize, coaction: Matrix) -> Self {
        debug_assert_eq!(coaction.nrows(), coalgebra_dim * coaction.ncols());
        ComoduleStr { side, coalgebra_dim, coaction }
    }

    pub fn regular(coalg: &Coalgebra, side: Side) -> Self {
        ComoduleStr::from_parts(side, coalg.dim(), coalg.comult().clone())
    }

    /// `k^rank ⊗ C`, copy `k` occupying coordinates `k·dim C ..`.
    pub fn cofree(coalg: &Coalgebra, side: Side, rank: usize) -> Self {
        let c = coalg.dim();
        let comult = coalg.comult_map();
        let coaction = match side {
            Side::Right => build_map(coalg.field(), &[rank, c], rank * c * c, |t| t.apply(1, 1, comult, &[c, c])),
            Side::Left => {
                build_map(coalg.field(), &[rank, c], rank * c * c, |t| t.apply(1, 1, comult, &[c, c]).permute(&[1, 0, 2]))
            }
        };
        ComoduleStr::from_parts(side, c, coaction)
    }

    /// The one-dimensional comodule `v ↦ v⊗g` for a grouplike `g`.
    pub fn trivial(coalg: &Coalgebra, side: Side, grouplike: &SparseVec) -> Result<Self, ModError> {
        ComoduleStr::new(coalg, side, column(coalg.field(), coalg.dim(), grouplike))
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.coaction.ncols()
    }

    pub fn coalgebra_dim(&self) -> usize {
        self.coalgebra_dim
    }

    pub fn field(&self) -> Field {
        self.coaction.field()
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    fn padding(&self) -> (usize, usize) {
        match self.side {
            Side::Right => (1, self.coalgebra_dim),
            Side::Left => (self.coalgebra_dim, 1),
        }
    }

    /// Corestriction along a coalgebra map `f : C → C′`.
    pub fn pushforward(&self, target: &Coalgebra, f: &Matrix) -> Result<ComoduleStr, ModError> {
        let (pre, post) = match self.side {
            Side::Right => (self.dim(), 1),
            Side::Left => (1, self.dim()),
        };
        ComoduleStr::new(target, self.side, padded(f, pre, post).mul(&self.coaction))
    }

    /// The same coaction read over the co-opposite coalgebra, on the other side.
    pub fn opposite(&self) -> ComoduleStr {
        let (n, c) = (self.dim(), self.coalgebra_dim);
        let swap = match self.side {
            Side::Right => permutation_matrix(self.field(), &[n, c], &[1, 0]),
            Side::Left => permutation_matrix(self.field(), &[c, n], &[1, 0]),
        };
        ComoduleStr::from_parts(self.side.flip(), c, swap.mul(&self.coaction))
    }

    pub fn is_subcomodule(&self, u: &Subspace) -> bool {
        self.subcomodule(u).is_ok()
    }

    pub fn subcomodule(&self, u: &Subspace) -> Result<ComoduleStr, ModError> {
        let (pre, post) = self.padding();
        let coaction = crate::util::restrict_map(&self.coaction, &u.embedding(), u, pre, post)
            .ok_or(ModError::NotStable("coaction"))?;
        Ok(ComoduleStr::from_parts(self.side, self.coalgebra_dim, coaction))
    }

    pub fn quotient(&self, u: &Subspace) -> Result<(ComoduleStr, Quotient), ModError> {
        if !self.is_subcomodule(u) {
            return Err(ModError::NotStable("coaction"));
        }
        let q = quotient(self.dim(), u)?;
        let (pre, post) = self.padding();
        let coaction = padded(&q.projection, pre, post).mul(&self.coaction).mul(&q.section);
        Ok((ComoduleStr::from_parts(self.side, self.coalgebra_dim, coaction), q))
    }

    /// The subcomodule generated by `vectors`: the span of all legs of their coactions.
    pub fn generated(&self, vectors: &[SparseVec]) -> Subspace {
        let (n, c) = (self.dim(), self.coalgebra_dim);
        let mut u = Subspace::span(self.field(), n, vectors.iter().cloned());
        loop {
            let mut legs = u.basis_vectors().to_vec();
            for v in u.basis_vectors() {
                let image = self.coaction.apply(v);
                let mut per_leg: Vec<Vec<(usize, exactla::Scalar)>> = vec![Vec::new(); c];
                for (idx, x) in image.iter() {
                    let (vi, j) = match self.side {
                        Side::Right => (idx / c, idx % c),
                        Side::Left => (idx % n, idx / n),
                    };
                    per_leg[j].push((vi, x.clone()));
                }
                legs.extend(per_leg.into_iter().map(SparseVec::from_pairs));
            }
            let next = Subspace::span(self.field(), n, legs);
            if next.dim() == u.dim() {
                return u;
            }
            u = next;
        }
    }

    /// `{v : ρ(v) = v⊗g}` (right) or `{v : λ(v) = g⊗v}` (left).
    pub fn coinvariants(&self, grouplike: &SparseVec) -> Subspace {
        let f = self.field();
        let g = column(f, self.coalgebra_dim, grouplike);
        let n = eye(f, self.dim());
        let trivial = match self.side {
            Side::Right => n.kron(&g),
            Side::Left => g.kron(&n),
        };
        kernel(&self.coaction.sub(&trivial))
    }

    pub fn direct_sum(&self, other: &ComoduleStr) -> ComoduleStr {
        assert_eq!((self.side, self.coalgebra_dim), (other.side, other.coalgebra_dim), "direct sum of unlike comodules");
        let (n1, n2, c) = (self.dim(), other.dim(), self.coalgebra_dim);
        let n = n1 + n2;
        let relabel = |col: SparseVec, offset: usize, width: usize| {
            SparseVec::from_pairs(col.into_entries().into_iter().map(|(idx, x)| {
                let (v, j) = match self.side {
                    Side::Right => (idx / c, idx % c),
                    Side::Left => (idx % width, idx / width),
                };
                let v = v + offset;
                let flat = match self.side {
                    Side::Right => v * c + j,
                    Side::Left => j * n + v,
                };
                (flat, x)
            }))
        };
        let cols = (0..n1)
            .map(|v| relabel(self.coaction.column(v), 0, n1))
            .chain((0..n2).map(|v| relabel(other.coaction.column(v), n1, n2)))
            .collect();
        ComoduleStr::from_parts(self.side, c, Matrix::from_columns(self.field(), c * n, cols))
    }
}

/// Right coaction of the one-dimensional trivial comodule over any coalgebra with grouplike
/// `g`, as used for `U_triv`: `u ↦ u⊗g` on a space of dimension `dim`.
pub fn trivial_coaction(field: Field, dim: usize, coalgebra_dim: usize, grouplike: &SparseVec, side: Side) -> ComoduleStr {
    let g = column(field, coalgebra_dim, grouplike);
    let n = eye(field, dim);
    let coaction = match side {
        Side::Right => n.kron(&g),
        Side::Left => g.kron(&n),
    };
    ComoduleStr::from_parts(side, coalgebra_dim, coaction)
}
