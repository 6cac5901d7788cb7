//! One-sided module factor coalgebras `C = H/I` and coinvariants.

use exactla::{kernel, quotient, Matrix, SparseVec, Subspace};
use hopfcore::{Coalgebra, FiniteHopfAlgebra, Twist};

use crate::error::{CorrespondenceError, Violation};
use crate::subalgebra::{check_coideal_subalgebra, CoidealSubalgebra, Side};

/// `C = H/I` with `I` a coideal and a left (`side = Left`) or right ideal, so that `C` is a
/// left or right `H`-module coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCoalgebra {
    ideal: Subspace,
    side: Side,
    proj: Matrix,
    section: Matrix,
    coalgebra: Coalgebra,
    action: Matrix,
    grouplike: SparseVec,
}

impl FactorCoalgebra {
    /// Verifies `ε(I) = 0`, `Δ(I) ⊆ I⊗H + H⊗I` and the one-sided ideal property, then builds
    /// the induced structure through the canonical quotient.
    pub fn new(h: &FiniteHopfAlgebra, ideal: Subspace, side: Side) -> Result<Self, CorrespondenceError> {
        let n = h.dim();
        let f = h.field();
        let fail = |reason, witness| Err(CorrespondenceError::NotFactorCoalgebra { reason, witness });
        if ideal.ambient_dim() != n || ideal.field() != f {
            return fail(Violation::Ambient, SparseVec::new());
        }
        for b in ideal.basis_vectors() {
            if !h.counit_of(b).is_zero() {
                return fail(Violation::CounitNonzero, b.clone());
            }
        }
        let full = Subspace::full(f, n);
        let coideal_target = ideal.tensor(&full).sum(&full.tensor(&ideal));
        for b in ideal.basis_vectors() {
            if !coideal_target.contains(&h.coproduct(b)) {
                return fail(Violation::NotCoideal, b.clone());
            }
        }
        for b in ideal.basis_vectors() {
            for i in 0..n {
                let e = h.basis_vector(i);
                let p = match side {
                    Side::Left => h.product(&e, b),
                    Side::Right => h.product(b, &e),
                };
                if !ideal.contains(&p) {
                    return fail(Violation::NotIdeal, p);
                }
            }
        }
        let q = quotient(n, &ideal)?;
        let (proj, section) = (q.projection, q.section);
        let d = proj.nrows();
        let comult = proj.kron(&proj).mul(h.comult()).mul(&section);
        let counit = h.counit().mul(&section);
        let coalgebra = Coalgebra::new(comult, counit).map_err(|e| CorrespondenceError::Internal(e.to_string()))?;
        let action_cols = (0..n * d)
            .map(|c| {
                let p = match side {
                    // column h·dim_C + c holds h·c
                    Side::Left => h.product(&h.basis_vector(c / d), &section.column(c % d)),
                    // column c·dim H + h holds c·h
                    Side::Right => h.product(&section.column(c / n), &h.basis_vector(c % n)),
                };
                proj.apply(&p)
            })
            .collect();
        let action = Matrix::from_columns(f, d, action_cols);
        let grouplike = proj.apply(&h.one());
        let c = FactorCoalgebra { ideal, side, proj, section, coalgebra, action, grouplike };
        if c.coalgebra.comult().mul(&c.proj) != c.proj.kron(&c.proj).mul(h.comult()) {
            return Err(CorrespondenceError::Internal("projection is not a coalgebra map".into()));
        }
        if !c.coalgebra.is_grouplike(&c.grouplike) {
            return Err(CorrespondenceError::Internal("image of 1 is not grouplike".into()));
        }
        Ok(c)
    }

    /// `C = H` (zero ideal).
    pub fn identity(h: &FiniteHopfAlgebra, side: Side) -> Self {
        Self::new(h, Subspace::zero(h.field(), h.dim()), side).expect("zero ideal")
    }

    /// `C = k` (ideal `H⁺`).
    pub fn trivial(h: &FiniteHopfAlgebra, side: Side) -> Self {
        Self::new(h, kernel(h.counit()), side).expect("augmentation ideal")
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.proj.nrows()
    }

    /// `π : H → C`.
    pub fn projection(&self) -> &Matrix {
        &self.proj
    }

    /// The canonical section `C → H` onto the non-pivot coordinate axes of `I`.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    /// `H⊗C → C` (left) or `C⊗H → C` (right).
    pub fn action(&self) -> &Matrix {
        &self.action
    }

    /// `1_C = π(1)`.
    pub fn grouplike(&self) -> &SparseVec {
        &self.grouplike
    }

    /// `(π⊗id)Δ : H → C⊗H`, the left `C`-coaction on `H`.
    pub fn left_coaction_on_h(&self, h: &FiniteHopfAlgebra) -> Matrix {
        self.proj.kron(&Matrix::identity(h.field(), h.dim())).mul(h.comult())
    }

    /// `(id⊗π)Δ : H → H⊗C`, the right `C`-coaction on `H`.
    pub fn right_coaction_on_h(&self, h: &FiniteHopfAlgebra) -> Matrix {
        Matrix::identity(h.field(), h.dim()).kron(&self.proj).mul(h.comult())
    }

    pub fn grouplike_column(&self, h: &FiniteHopfAlgebra) -> Matrix {
        Matrix::column_vector(h.field(), self.dim(), self.grouplike.clone())
    }

    /// `C^cop` as a factor coalgebra of `H^cop` (same ideal, same module side).
    pub fn co_opposite(&self, h: &FiniteHopfAlgebra) -> FactorCoalgebra {
        FactorCoalgebra::new(h.twisted(Twist::Cop), self.ideal.clone(), self.side)
            .expect("ideal and coideal conditions are unchanged by flipping Δ")
    }
}

/// `H·A⁺` (`side = Left`, a left module factor coalgebra) or `A⁺·H` (`side = Right`).
pub fn factor_by_subalgebra(
    h: &FiniteHopfAlgebra,
    a: &CoidealSubalgebra,
    side: Side,
) -> Result<FactorCoalgebra, CorrespondenceError> {
    let ideal = match side {
        Side::Left => left_ideal_generated(h, a.augmentation()),
        // A⁺H is H^op·A⁺ computed in H^op
        Side::Right => left_ideal_generated(h.twisted(Twist::Op), a.augmentation()),
    };
    FactorCoalgebra::new(h, ideal, side)
}

/// `H·U = span{eᵢ·u}`.
pub fn left_ideal_generated(h: &FiniteHopfAlgebra, u: &Subspace) -> Subspace {
    let n = h.dim();
    let products = (0..n).flat_map(|i| u.basis_vectors().iter().map(move |b| (i, b))).map(|(i, b)| h.product(&h.basis_vector(i), b));
    Subspace::span(h.field(), n, products)
}

/// `U·H = span{u·eᵢ}`.
pub fn right_ideal_generated(h: &FiniteHopfAlgebra, u: &Subspace) -> Subspace {
    left_ideal_generated(h.twisted(Twist::Op), u)
}

/// `side = Right`: `ᶜᵒCH = {h | (π⊗id)Δh = 1_C⊗h}`, a right coideal.
/// `side = Left`: `H^coC = {h | (id⊗π)Δh = h⊗1_C}`, computed as `ᶜᵒ(C^cop)(H^cop)`.
pub fn coinvariants(h: &FiniteHopfAlgebra, c: &FactorCoalgebra, side: Side) -> Subspace {
    match side {
        Side::Right => {
            let lambda = c.left_coaction_on_h(h);
            let one_tensor = c.grouplike_column(h).kron(&Matrix::identity(h.field(), h.dim()));
            kernel(&lambda.sub(&one_tensor))
        }
        Side::Left => {
            let hc = h.twisted(Twist::Cop);
            coinvariants(hc, &c.co_opposite(h), Side::Right)
        }
    }
}

/// Coinvariants as a verified coideal subalgebra. This is a subalgebra whenever `π` is
/// one-sided `H`-linear, which [`FactorCoalgebra`] guarantees.
pub fn coinvariant_subalgebra(
    h: &FiniteHopfAlgebra,
    c: &FactorCoalgebra,
    side: Side,
) -> Result<CoidealSubalgebra, CorrespondenceError> {
    check_coideal_subalgebra(h, coinvariants(h, c, side), side)
}
