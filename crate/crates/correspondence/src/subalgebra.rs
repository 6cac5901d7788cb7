//! One-sided coideal subalgebras: verification, closure of generators, and the induced
//! algebra and comodule structure on the subspace.

use exactla::{kernel, ColumnMap, Matrix, SparseVec, Subspace, Tensor};
use hopfcore::{Algebra, FiniteHopfAlgebra, Twist};
use serde::{Deserialize, Serialize};

use crate::error::{CorrespondenceError, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A subalgebra `A ⊆ H` with `Δ(A) ⊆ A⊗H` (right) or `Δ(A) ⊆ H⊗A` (left).
/// Values are only produced by [`check_coideal_subalgebra`], so the conditions always hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealSubalgebra {
    space: Subspace,
    side: Side,
    aug: Subspace,
}

impl CoidealSubalgebra {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `A⁺ = A ∩ Ker ε`.
    pub fn augmentation(&self) -> &Subspace {
        &self.aug
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.space.contains(v)
    }

    /// Columns are the canonical basis of `A` in `H`-coordinates.
    pub fn inclusion(&self) -> Matrix {
        self.space.embedding()
    }

    /// Structure constants of `A` in its canonical basis.
    pub fn algebra(&self, h: &FiniteHopfAlgebra) -> Algebra {
        let d = self.dim();
        let basis = self.space.basis_vectors();
        let cols = (0..d * d)
            .map(|c| {
                let p = h.product(&basis[c / d], &basis[c % d]);
                self.space.coordinates(&p).expect("closed under multiplication")
            })
            .collect();
        let mult = Matrix::from_columns(h.field(), d, cols);
        let unit = Matrix::column_vector(h.field(), d, self.space.coordinates(&h.one()).expect("contains 1"));
        Algebra::new(mult, unit).expect("subalgebra of an algebra")
    }

    /// The coaction `A → A⊗H` (right side) or `A → H⊗A` (left side) in the canonical basis.
    pub fn coaction(&self, h: &FiniteHopfAlgebra) -> Matrix {
        let n = h.dim();
        let coords = ColumnMap::new(&coordinate_map(&self.space));
        let at = match self.side {
            Side::Right => 0,
            Side::Left => 1,
        };
        let cols = self
            .space
            .basis_vectors()
            .iter()
            .map(|a| Tensor::new(h.field(), &[n, n], h.coproduct(a)).map(at, &coords).into_vector())
            .collect();
        Matrix::from_columns(h.field(), self.dim() * n, cols)
    }
}

/// Left inverse of the embedding of `U`: picks off the pivot coordinates.
fn coordinate_map(u: &Subspace) -> Matrix {
    let n = u.ambient_dim();
    let rows = u.pivots().iter().map(|&p| SparseVec::unit(p, u.field().one())).collect();
    Matrix::from_rows(u.field(), n, rows)
}

/// Verify unit membership, the one-sided coideal condition and multiplicative closure.
pub fn check_coideal_subalgebra(
    h: &FiniteHopfAlgebra,
    space: Subspace,
    side: Side,
) -> Result<CoidealSubalgebra, CorrespondenceError> {
    let n = h.dim();
    let fail = |reason, witness| Err(CorrespondenceError::NotCoidealSubalgebra { reason, witness });
    if space.ambient_dim() != n || space.field() != h.field() {
        return fail(Violation::Ambient, SparseVec::new());
    }
    if !space.contains(&h.one()) {
        return fail(Violation::MissingUnit, h.one());
    }
    let full = Subspace::full(h.field(), n);
    let target = match side {
        Side::Right => space.tensor(&full),
        Side::Left => full.tensor(&space),
    };
    for b in space.basis_vectors() {
        if !target.contains(&h.coproduct(b)) {
            return fail(Violation::NotCoideal, b.clone());
        }
    }
    for a in space.basis_vectors() {
        for b in space.basis_vectors() {
            let p = h.product(a, b);
            if !space.contains(&p) {
                return fail(Violation::NotMultiplicative, p);
            }
        }
    }
    let counit = h.counit().clone();
    let aug = space.intersection(&kernel(&counit));
    Ok(CoidealSubalgebra { space, side, aug })
}

/// Span of the first legs (right) or second legs (left) of `Δ(v)` for `v` in `V`: the smallest
/// one-sided coideal containing `V`.
fn coideal_closure(h: &FiniteHopfAlgebra, v: &Subspace, side: Side) -> Subspace {
    let n = h.dim();
    let mut legs = Vec::new();
    for b in v.basis_vectors() {
        let d = h.coproduct(b);
        let mut by_other: Vec<Vec<(usize, exactla::Scalar)>> = vec![Vec::new(); n];
        for (idx, c) in d.iter() {
            let (l, r) = (idx / n, idx % n);
            match side {
                Side::Right => by_other[r].push((l, c.clone())),
                Side::Left => by_other[l].push((r, c.clone())),
            }
        }
        legs.extend(by_other.into_iter().filter(|p| !p.is_empty()).map(SparseVec::from_pairs));
    }
    Subspace::span(h.field(), n, legs).sum(v)
}

fn algebra_closure(h: &FiniteHopfAlgebra, v: &Subspace) -> Subspace {
    let mut cur = v.sum(&Subspace::span(h.field(), h.dim(), [h.one()]));
    loop {
        let basis = cur.basis_vectors().to_vec();
        let products = basis.iter().flat_map(|a| basis.iter().map(move |b| (a, b))).map(|(a, b)| h.product(a, b));
        let next = cur.sum(&Subspace::span(h.field(), h.dim(), products));
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

/// Smallest coideal subalgebra of the given side containing `generators`: alternate coideal
/// and algebra closure until the dimension stops growing (at most `dim H` rounds).
pub fn generate_coideal_subalgebra(h: &FiniteHopfAlgebra, generators: &[SparseVec], side: Side) -> CoidealSubalgebra {
    if side == Side::Left {
        // left coideal subalgebras of H are right coideal subalgebras of H^cop
        let r = generate_coideal_subalgebra(h.twisted(Twist::Cop), generators, Side::Right);
        return CoidealSubalgebra { side: Side::Left, ..r };
    }
    let mut cur = Subspace::span(h.field(), h.dim(), generators.iter().cloned());
    loop {
        let next = algebra_closure(h, &coideal_closure(h, &cur, side));
        if next.dim() == cur.dim() {
            break;
        }
        cur = next;
    }
    check_coideal_subalgebra(h, cur, side).expect("closure is a coideal subalgebra")
}

/// `S(A)`, a coideal subalgebra of the opposite side.
pub fn antipode_image(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> CoidealSubalgebra {
    let s = a.space.map(h.antipode());
    check_coideal_subalgebra(h, s, a.side.flip()).expect("antipode reverses the coideal side")
}

#[cfg(test)]
mod tests {
    use super::*;
    use catalog::{build, AlgebraSpec};
    use exactla::Field;

    fn h4() -> FiniteHopfAlgebra {
        build(&AlgebraSpec::sweedler(Field::Rational)).unwrap()
    }

    #[test]
    fn coaction_of_group_subalgebra() {
        let h = h4();
        let a = generate_coideal_subalgebra(&h, &[h.basis_vector(1)], Side::Right);
        assert_eq!(a.dim(), 2);
        let rho = a.coaction(&h);
        assert_eq!(rho.shape(), (8, 2));
        // g ↦ g⊗g: A-coordinate of g is 1 (basis 1, g), H index 1
        assert_eq!(rho.column(1), SparseVec::unit(4 + 1, Field::Rational.one()));
        assert_eq!(a.algebra(&h).dim(), 2);
    }

    #[test]
    fn left_closure_by_delegation() {
        let h = h4();
        // Δx = x⊗1 + g⊗x: second legs {1, x}; span{1, x} is a left coideal subalgebra
        let b = generate_coideal_subalgebra(&h, &[h.basis_vector(2)], Side::Left);
        assert_eq!(b.side(), Side::Left);
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&h.basis_vector(2)));
    }
}
