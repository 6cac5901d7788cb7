//! Tensor products over `A` and cotensor products over `C`.

use correspondence::Side;
use exactla::{coequalizer, equalizer, Matrix, Quotient, Subspace};

use crate::comodule::ComoduleStr;
use crate::error::ModError;
use crate::module::ModuleStr;
use crate::util::{eye, kernel_basis};

/// `M⊗_A N` presented as a quotient of `M⊗N`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub left_dim: usize,
    pub right_dim: usize,
    pub quotient: Quotient,
    /// Columns spanning the relations `ma⊗n − m⊗an`.
    pub relations: Matrix,
}

impl TensorProduct {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn projection(&self) -> &Matrix {
        &self.quotient.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.quotient.section
    }
}

/// Coequalizer of `μ⊗id` and `id⊗ν` on `M⊗A⊗N`.
pub fn tensor_over(m: &ModuleStr, n: &ModuleStr) -> Result<TensorProduct, ModError> {
    if m.side() != Side::Right {
        return Err(ModError::SideMismatch { expected: Side::Right, found: m.side() });
    }
    if n.side() != Side::Left {
        return Err(ModError::SideMismatch { expected: Side::Left, found: n.side() });
    }
    if m.algebra_dim() != n.algebra_dim() {
        return Err(ModError::Shape(format!("algebras of dim {} and {}", m.algebra_dim(), n.algebra_dim())));
    }
    let f = m.field();
    let quotient = coequalizer(&m.action().kron(&eye(f, n.dim())), &eye(f, m.dim()).kron(n.action()))?;
    Ok(TensorProduct { left_dim: m.dim(), right_dim: n.dim(), relations: kernel_basis(&quotient), quotient })
}

/// Equalizer of `ρ⊗id` and `id⊗λ` inside `V⊗W`.
pub fn cotensor(v: &ComoduleStr, w: &ComoduleStr) -> Result<Subspace, ModError> {
    if v.side() != Side::Right {
        return Err(ModError::SideMismatch { expected: Side::Right, found: v.side() });
    }
    if w.side() != Side::Left {
        return Err(ModError::SideMismatch { expected: Side::Left, found: w.side() });
    }
    if v.coalgebra_dim() != w.coalgebra_dim() {
        return Err(ModError::Shape(format!("coalgebras of dim {} and {}", v.coalgebra_dim(), w.coalgebra_dim())));
    }
    let f = v.field();
    Ok(equalizer(&v.coaction().kron(&eye(f, w.dim())), &eye(f, v.dim()).kron(w.coaction()))?)
}
