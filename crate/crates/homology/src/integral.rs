//! Total integrals `φ: C → H` and the splittings of `A → H` and `B → H` built from them.

use correspondence::{coinvariants, FactorCoalgebra, Side};
use exactla::{Matrix, MatrixSystem, SparseVec, Subspace, Term};
use hopfcore::FiniteHopfAlgebra;

use crate::error::HomologyError;
use crate::util::{column, eye, padded};

fn check_left(c: &FactorCoalgebra) -> Result<(), HomologyError> {
    match c.side() {
        Side::Left => Ok(()),
        Side::Right => Err(HomologyError::FactorSide("left")),
    }
}

/// A right `C`-colinear `φ: C → H` with `φ(π(1)) = 1`, where `H` is a right `C`-comodule via
/// `(id⊗π)Δ`. The particular solution of the linear system puts every free unknown at
/// zero, so the answer is reproducible.
pub fn total_integral(h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> Result<Option<Matrix>, HomologyError> {
    check_left(c)?;
    let f = h.field();
    let cd = c.dim();
    let rho = c.right_coaction_on_h(h);
    let one_c = column(f, cd, c.grouplike());
    let mut sys = MatrixSystem::new(f, h.dim(), cd);
    sys.equation(&[Term::left(&rho), Term::right(c.coalgebra().comult()).tensored(1, cd).negated()], None);
    sys.equation(&[Term::right(&one_c)], Some(h.unit()));
    Ok(sys.solve())
}

/// `p(h) = Σ S(φ(π(h₁)))h₂` onto `A = ᶜᵒCH` and `q(h) = Σ h₁φ(π(S(h₂)))` onto `B = H^coC`,
/// with the outcome of each property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoiSplittings {
    pub right: Matrix,
    pub left: Matrix,
    pub right_image_in_a: bool,
    pub right_identity_on_a: bool,
    pub right_a_linear: bool,
    pub left_image_in_b: bool,
    pub left_identity_on_b: bool,
    pub left_b_linear: bool,
}

impl DoiSplittings {
    pub fn right_ok(&self) -> bool {
        self.right_image_in_a && self.right_identity_on_a && self.right_a_linear
    }

    pub fn left_ok(&self) -> bool {
        self.left_image_in_b && self.left_identity_on_b && self.left_b_linear
    }

    pub fn holds(&self) -> bool {
        self.right_ok() && self.left_ok()
    }
}

fn identity_on(p: &Matrix, u: &Subspace) -> bool {
    let e = u.embedding();
    p.mul(&e) == e
}

fn linear_over(p: &Matrix, u: &Subspace, mult: impl Fn(&SparseVec) -> Matrix) -> bool {
    u.basis_vectors().iter().all(|a| {
        let m = mult(a);
        p.mul(&m) == m.mul(p)
    })
}

pub fn doi_splittings(h: &FiniteHopfAlgebra, c: &FactorCoalgebra, phi: &Matrix) -> Result<DoiSplittings, HomologyError> {
    check_left(c)?;
    let f = h.field();
    let n = h.dim();
    let cd = c.dim();
    if phi.shape() != (n, cd) {
        return Err(HomologyError::NotTotalIntegral("wrong shape"));
    }
    if phi.mul(&column(f, cd, c.grouplike())) != *h.unit() {
        return Err(HomologyError::NotTotalIntegral("φ(1_C) ≠ 1"));
    }
    if c.right_coaction_on_h(h).mul(phi) != padded(phi, 1, cd).mul(c.coalgebra().comult()) {
        return Err(HomologyError::NotTotalIntegral("not right C-colinear"));
    }
    let s = h.antipode();
    let pi = c.projection();
    let id = eye(f, n);
    let right = h.mult().mul(&s.mul(phi).mul(pi).kron(&id)).mul(h.comult());
    let left = h.mult().mul(&id.kron(&phi.mul(pi).mul(s))).mul(h.comult());
    let a = coinvariants(h, c, Side::Right);
    let b = coinvariants(h, c, Side::Left);
    let basis = |i: usize| SparseVec::unit(i, f.one());
    let right_mult = |x: &SparseVec| Matrix::from_columns(f, n, (0..n).map(|i| h.product(&basis(i), x)).collect());
    let left_mult = |x: &SparseVec| Matrix::from_columns(f, n, (0..n).map(|i| h.product(x, &basis(i))).collect());
    Ok(DoiSplittings {
        right_image_in_a: Subspace::image(&right).is_subspace_of(&a),
        right_identity_on_a: identity_on(&right, &a),
        right_a_linear: linear_over(&right, &a, right_mult),
        left_image_in_b: Subspace::image(&left).is_subspace_of(&b),
        left_identity_on_b: identity_on(&left, &b),
        left_b_linear: linear_over(&left, &b, left_mult),
        right,
        left,
    })
}
