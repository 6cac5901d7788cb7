//! The coFrobenius property of a finite-dimensional coalgebra.

use exactla::{Field, Matrix, Scalar, SparseVec};
use hopfcore::Coalgebra;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Random candidates tried by [`cofrobenius_witness`] after the structured ones.
pub const FROBENIUS_ATTEMPTS: usize = 64;

/// The Gram matrix `(e^i e^j)(λ)` of the associative form on `C*` determined by `λ ∈ C`;
/// it is nondegenerate iff `f ↦ f ⇀ λ` is an isomorphism `C* → C` of `C*`-modules.
pub fn frobenius_form(coalg: &Coalgebra, lambda: &SparseVec) -> Matrix {
    let c = coalg.dim();
    let image = coalg.comult().apply(lambda);
    Matrix::from_fn(coalg.field(), c, c, |i, j| image.get(i * c + j).cloned().unwrap_or_else(|| coalg.field().zero()))
}

fn sample(field: Field, rng: &mut StdRng) -> Scalar {
    match field.size() {
        Some(q) => field.from_i64(rng.gen_range(0..q as i64)),
        None => field.from_i64(rng.gen_range(-50..=50)),
    }
}

/// An element `λ ∈ C` with nondegenerate form, searched among basis vectors, their sum
/// and seeded random combinations. A returned witness is a proof; `None` is a failed search.
pub fn cofrobenius_witness(coalg: &Coalgebra) -> Option<SparseVec> {
    let f = coalg.field();
    let c = coalg.dim();
    if c == 0 {
        return Some(SparseVec::new());
    }
    let nondegenerate = |l: &SparseVec| frobenius_form(coalg, l).inverse().is_some();
    let structured = (0..c).map(|i| SparseVec::unit(i, f.one())).chain([SparseVec::from_dense(&vec![f.one(); c])]);
    if let Some(l) = structured.into_iter().find(|l| nondegenerate(l)) {
        return Some(l);
    }
    let mut rng = StdRng::seed_from_u64(0xc0f0_b0e1);
    (0..FROBENIUS_ATTEMPTS)
        .map(|_| SparseVec::from_dense(&(0..c).map(|_| sample(f, &mut rng)).collect::<Vec<_>>()))
        .find(|l| nondegenerate(l))
}

/// `C*` is a Frobenius algebra, i.e. `C ≅ C*` as `C*`-modules.
pub fn cofrobenius_check(coalg: &Coalgebra) -> bool {
    cofrobenius_witness(coalg).is_some()
}
