//! Random and exhaustive production of coideal subalgebras.

use exactla::{Field, Scalar, SparseVec};
use hopfcore::FiniteHopfAlgebra;
use rand::Rng;

use crate::subalgebra::{generate_coideal_subalgebra, CoidealSubalgebra, Side};

/// Largest ambient dimension for which [`enumerate_coideal_subalgebras`] runs.
pub const EXHAUSTIVE_MAX_DIM: usize = 4;

/// Coefficient box: `{−2..2}` over ℚ, every residue over GF(p).
fn coefficient_box(field: Field) -> Vec<Scalar> {
    field.elements().unwrap_or_else(|| (-2..=2).map(|c| field.from_i64(c)).collect())
}

pub fn random_element<R: Rng + ?Sized>(h: &FiniteHopfAlgebra, rng: &mut R) -> SparseVec {
    let coeffs = coefficient_box(h.field());
    let dense: Vec<Scalar> = (0..h.dim()).map(|_| coeffs[rng.gen_range(0..coeffs.len())].clone()).collect();
    SparseVec::from_dense(&dense)
}

/// Closure of one or two random elements.
pub fn random_coideal_subalgebra<R: Rng + ?Sized>(h: &FiniteHopfAlgebra, rng: &mut R, side: Side) -> CoidealSubalgebra {
    let count = rng.gen_range(1..=2);
    let gens: Vec<SparseVec> = (0..count).map(|_| random_element(h, rng)).collect();
    generate_coideal_subalgebra(h, &gens, side)
}

/// All coideal subalgebras generated by one vector over the grid `{−1, 0, 1}` (every residue
/// over a finite field), closed under pairwise joins. Sorted by dimension, discovery order
/// within a dimension. `None` above [`EXHAUSTIVE_MAX_DIM`].
pub fn enumerate_coideal_subalgebras(h: &FiniteHopfAlgebra, side: Side) -> Option<Vec<CoidealSubalgebra>> {
    let n = h.dim();
    if n > EXHAUSTIVE_MAX_DIM {
        return None;
    }
    let f = h.field();
    let grid = f.elements().unwrap_or_else(|| (-1..=1).map(|c| f.from_i64(c)).collect());
    let mut found: Vec<CoidealSubalgebra> = Vec::new();
    let insert = |a: CoidealSubalgebra, found: &mut Vec<CoidealSubalgebra>| {
        if !found.iter().any(|b| b.space() == a.space()) {
            found.push(a);
        }
    };
    let total = grid.len().pow(n as u32);
    for code in 0..total {
        let mut rem = code;
        let dense: Vec<Scalar> = (0..n)
            .map(|_| {
                let c = grid[rem % grid.len()].clone();
                rem /= grid.len();
                c
            })
            .collect();
        insert(generate_coideal_subalgebra(h, &[SparseVec::from_dense(&dense)], side), &mut found);
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let gens: Vec<SparseVec> =
                found[i].space().basis_vectors().iter().chain(found[j].space().basis_vectors()).cloned().collect();
            let joined = generate_coideal_subalgebra(h, &gens, side);
            insert(joined, &mut found);
        }
        i += 1;
    }
    found.sort_by_key(|a| a.dim());
    Some(found)
}
