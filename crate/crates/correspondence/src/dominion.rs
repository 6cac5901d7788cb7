//! Dominions of coideal subalgebras and the dual notion for factor coalgebras.

use exactla::{build_map, coequalizer, equalizer, kernel, ColumnMap, Matrix, Subspace};
use hopfcore::FiniteHopfAlgebra;

use crate::factor::FactorCoalgebra;
use crate::subalgebra::CoidealSubalgebra;

/// The canonical projection `H⊗H → H⊗_A H`, the coequalizer of `xa⊗y` and `x⊗ay` on `H⊗A⊗H`.
pub fn tensor_over_subalgebra(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> Matrix {
    let n = h.dim();
    let d = a.dim();
    let f = h.field();
    let emb = ColumnMap::new(&a.inclusion());
    let mult = h.mult_map();
    let left = build_map(f, &[n, d, n], n * n, |t| t.map(1, &emb).apply(0, 2, mult, &[n]));
    let right = build_map(f, &[n, d, n], n * n, |t| t.map(1, &emb).apply(1, 2, mult, &[n]));
    coequalizer(&left, &right).expect("same shapes").projection
}

/// `{h ∈ H | h⊗1 = 1⊗h in H⊗_A H}`.
pub fn dominion(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> Subspace {
    let q = tensor_over_subalgebra(h, a);
    let id = Matrix::identity(h.field(), h.dim());
    let h_one = id.kron(h.unit());
    let one_h = h.unit().kron(&id);
    kernel(&q.mul(&h_one.sub(&one_h)))
}

/// `H□_C H ⊆ H⊗H`, the equalizer of `ρ⊗id` and `id⊗λ` for the coactions induced by `π`.
pub fn cotensor_h_h(h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> Subspace {
    let id = Matrix::identity(h.field(), h.dim());
    let rho = c.right_coaction_on_h(h).kron(&id);
    let lambda = id.kron(&c.left_coaction_on_h(h));
    equalizer(&rho, &lambda).expect("same shapes")
}

/// Kernel of the coequalizer of `ε⊗id, id⊗ε : H□_C H ⇉ H`. `C` is a dominion factor
/// coalgebra exactly when this equals `Ker π`.
pub fn codominion_ideal(h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> Subspace {
    let id = Matrix::identity(h.field(), h.dim());
    let diff = h.counit().kron(&id).sub(&id.kron(h.counit()));
    cotensor_h_h(h, c).map(&diff)
}

pub fn is_dominion_factor_coalgebra(h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> bool {
    codominion_ideal(h, c) == *c.ideal()
}
