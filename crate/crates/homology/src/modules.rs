//! Projectivity, freeness, generators and semisimplicity for finite-dimensional modules.

use correspondence::Side;
use exactla::{permutation_matrix, Field, Matrix, MatrixSystem, Scalar, SparseVec, Subspace, Term};
use hopfcore::Algebra;
use hopfmod::{module_homs, HopfModule, ModuleStr, Setting};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::util::eye;

/// A free module `A^r` with an `A`-linear surjection onto `M` sending the `k`-th free
/// generator to `generators[k]`.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub free: ModuleStr,
    pub generators: Vec<SparseVec>,
    /// `dim M × r·dim A`.
    pub map: Matrix,
}

impl FreeCover {
    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}

/// The `A`-linear map `A^r → M` determined by the images of the free generators.
pub fn cover_map(alg: &Algebra, m: &ModuleStr, generators: &[SparseVec]) -> Matrix {
    let f = m.field();
    let (n, d, r) = (m.dim(), alg.dim(), generators.len());
    let g = Matrix::from_columns(f, n, generators.to_vec());
    match m.side() {
        Side::Right => m.action().mul(&g.kron(&eye(f, d))),
        // the free module is indexed copy-major, the action expects A⊗M
        Side::Left => m.action().mul(&eye(f, d).kron(&g)).mul(&permutation_matrix(f, &[r, d], &[1, 0])),
    }
}

/// Greedy generating set: basis vectors of `M` taken in order whenever they are not yet in
/// the submodule generated so far.
pub fn generating_set(m: &ModuleStr) -> Vec<SparseVec> {
    let f = m.field();
    let mut gens = Vec::new();
    let mut span = Subspace::zero(f, m.dim());
    for i in 0..m.dim() {
        if span.is_full() {
            break;
        }
        let e = SparseVec::unit(i, f.one());
        if !span.contains(&e) {
            gens.push(e);
            span = m.generated(&gens);
        }
    }
    gens
}

pub fn free_cover(alg: &Algebra, m: &ModuleStr) -> FreeCover {
    let generators = generating_set(m);
    let map = cover_map(alg, m, &generators);
    FreeCover { free: ModuleStr::free(alg, m.side(), generators.len()), generators, map }
}

fn module_pads(side: Side, d: usize) -> (usize, usize) {
    match side {
        Side::Left => (d, 1),
        Side::Right => (1, d),
    }
}

/// An `A`-linear section of `cover.map`, if one exists.
pub fn cover_splitting(m: &ModuleStr, cover: &FreeCover) -> Option<Matrix> {
    let f = m.field();
    let (pre, post) = module_pads(m.side(), m.algebra_dim());
    let mut sys = MatrixSystem::new(f, cover.free.dim(), m.dim());
    sys.equation(&[Term::right(m.action()), Term::left(cover.free.action()).tensored(pre, post).negated()], None);
    sys.equation(&[Term::left(&cover.map)], Some(&eye(f, m.dim())));
    sys.solve()
}

/// `M` is projective iff its free cover splits `A`-linearly.
pub fn is_projective(alg: &Algebra, m: &ModuleStr) -> bool {
    m.dim() == 0 || cover_splitting(m, &free_cover(alg, m)).is_some()
}

fn sample_scalar<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    match field.size() {
        Some(q) => field.from_i64(rng.gen_range(0..q as i64)),
        None => field.from_i64(rng.gen_range(-3..=3)),
    }
}

/// Attempts made by [`free_basis`] before giving up.
pub const FREENESS_ATTEMPTS: usize = 64;

/// Generators of `M` as a free `A`-module, found by a seeded random search over generator
/// tuples of the right size. A returned basis is verified; `None` certifies nothing when
/// `dim A` divides `dim M`.
pub fn free_basis(alg: &Algebra, m: &ModuleStr) -> Option<Vec<SparseVec>> {
    let (n, d) = (m.dim(), alg.dim());
    if n % d != 0 {
        return None;
    }
    let r = n / d;
    let f = m.field();
    let mut rng = StdRng::seed_from_u64(0x5eed_f4ee);
    for _ in 0..FREENESS_ATTEMPTS {
        let gens: Vec<SparseVec> =
            (0..r).map(|_| SparseVec::from_dense(&(0..n).map(|_| sample_scalar(f, &mut rng)).collect::<Vec<_>>())).collect();
        let map = cover_map(alg, m, &gens);
        if map.inverse().is_some() || n == 0 {
            return Some(gens);
        }
    }
    None
}

pub fn is_free(alg: &Algebra, m: &ModuleStr) -> bool {
    free_basis(alg, m).is_some()
}

/// The trace ideal `T_M`, with costability recorded when `A` sits in a Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceIdeal {
    /// In the coordinates of `A`.
    pub space: Subspace,
    pub costable: Option<bool>,
}

/// The image of the evaluation `Hom_A(M, A) ⊗ M → A`.
pub fn trace_ideal(alg: &Algebra, m: &ModuleStr) -> Subspace {
    let homs = module_homs(m, &ModuleStr::regular(alg, m.side()));
    Subspace::span(alg.field(), alg.dim(), homs.iter().flat_map(|f| f.columns()))
}

/// `M` generates its module category iff `T_M = A`.
pub fn is_generator(alg: &Algebra, m: &ModuleStr) -> (bool, TraceIdeal) {
    let space = trace_ideal(alg, m);
    (space.is_full(), TraceIdeal { space, costable: None })
}

/// [`is_generator`] for a Hopf module in `M_A^H`, recording whether `T_M` is stable under the
/// coaction `A → A⊗H`.
pub fn hopf_module_generator(s: &Setting, m: &HopfModule) -> (bool, TraceIdeal) {
    let (gen, mut trace) = is_generator(s.a_algebra(), m.module());
    let hd = s.h_dim();
    let f = s.field();
    let lifted = Subspace::span(
        f,
        s.a_dim() * hd,
        trace.space.basis_vectors().iter().flat_map(|t| (0..hd).map(move |j| t.remap_monotone(|i| i * hd + j))),
    );
    let coaction = s.a_coaction();
    trace.costable = Some(trace.space.basis_vectors().iter().all(|t| lifted.contains(&coaction.apply(t))));
    (gen, trace)
}

/// `A` is semisimple iff it is separable (both base fields are perfect): there is
/// `e ∈ A⊗A` with `(a⊗1)e = e(1⊗a)` and `μ(e) = 1`.
pub fn is_semisimple(alg: &Algebra) -> bool {
    let f = alg.field();
    let d = alg.dim();
    let mut sys = MatrixSystem::new(f, d * d, 1);
    let id = eye(f, d);
    for i in 0..d {
        let a = SparseVec::unit(i, f.one());
        let comm = alg.left_mult(&a).kron(&id).sub(&id.kron(&alg.right_mult(&a)));
        sys.equation(&[Term::left(&comm)], None);
    }
    sys.equation(&[Term::left(alg.mult())], Some(alg.unit()));
    sys.solve().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    /// `k[t]/(t²)` in the basis `1, t`.
    fn dual_numbers() -> Algebra {
        let mult = Matrix::from_i64(Q, &[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
        Algebra::new(mult, Matrix::from_i64(Q, &[&[1], &[0]])).unwrap()
    }

    fn residue(alg: &Algebra, side: Side) -> ModuleStr {
        ModuleStr::character(alg, side, &Matrix::from_i64(Q, &[&[1, 0]])).unwrap()
    }

    #[test]
    fn regular_and_residue_module() {
        let a = dual_numbers();
        for side in [Side::Left, Side::Right] {
            let reg = ModuleStr::regular(&a, side);
            assert!(is_projective(&a, &reg));
            assert!(is_free(&a, &reg));
            assert!(is_generator(&a, &reg).0);
            let k = residue(&a, side);
            assert!(!is_projective(&a, &k));
            assert!(!is_free(&a, &k));
            let (gen, trace) = is_generator(&a, &k);
            assert!(!gen);
            assert_eq!(trace.space, Subspace::span(Q, 2, [SparseVec::unit(1, Q.one())]));
        }
        assert!(!is_semisimple(&a));
    }

    #[test]
    fn greedy_generators_of_free_module() {
        let a = dual_numbers();
        let f = ModuleStr::free(&a, Side::Left, 3);
        let cover = free_cover(&a, &f);
        assert_eq!(cover.rank(), 3);
        assert_eq!(cover.map.rank(), 6);
    }

    #[test]
    fn group_algebra_is_semisimple() {
        // ℚC₂ in the basis 1, g
        let mult = Matrix::from_i64(Q, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        let a = Algebra::new(mult, Matrix::from_i64(Q, &[&[1], &[0]])).unwrap();
        assert!(is_semisimple(&a));
        let sign = ModuleStr::character(&a, Side::Right, &Matrix::from_i64(Q, &[&[1, -1]])).unwrap();
        assert!(is_projective(&a, &sign));
        assert!(!is_generator(&a, &sign).0);
    }
}
