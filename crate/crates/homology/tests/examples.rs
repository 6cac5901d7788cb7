use catalog::{build, AlgebraSpec};
use correspondence::{check_coideal_subalgebra, factor_by_subalgebra, CoidealSubalgebra, FactorCoalgebra, Side};
use exactla::{kernel, Field, Matrix, SparseVec, Subspace};
use hopfcore::{Algebra, FiniteHopfAlgebra};
use hopfmod::{
    comodule_homs, cotensor, is_comodule_map, is_module_map, module_homs, tensor_over, ComoduleStr, ModuleStr, Setting,
};
use homology::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rational;

// H₄ basis order: 1, g, x, gx
const ONE: &[i64] = &[1, 0, 0, 0];
const G: &[i64] = &[0, 1, 0, 0];
const X: &[i64] = &[0, 0, 1, 0];
const GX: &[i64] = &[0, 0, 0, 1];

fn h4() -> FiniteHopfAlgebra {
    build(&AlgebraSpec::sweedler(Q)).unwrap()
}

fn vq(entries: &[i64]) -> SparseVec {
    SparseVec::from_dense(&entries.iter().map(|&c| Q.from_i64(c)).collect::<Vec<_>>())
}

fn subalgebra(h: &FiniteHopfAlgebra, vs: &[&[i64]]) -> CoidealSubalgebra {
    check_coideal_subalgebra(h, Subspace::span(Q, h.dim(), vs.iter().map(|v| vq(v))), Side::Right).unwrap()
}

fn counit_character(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> Matrix {
    h.counit().mul(&a.inclusion())
}

/// Coordinates of `y = gx` in the algebra basis of `span{1, gx}`, found from the inclusion.
fn y_in(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> SparseVec {
    a.space().coordinates_of_columns(&Matrix::column_vector(Q, h.dim(), vq(GX))).unwrap().column(0)
}

/// Right annihilator `{a : a·y = 0}` of `y` in `A`.
fn annihilator(alg: &Algebra, y: &SparseVec) -> Subspace {
    kernel(&alg.right_mult(y))
}

/// Matrix of `(a₁, a₂) ↦ b₁a₁ + b₂a₂` (right) or `a₁b₁ + a₂b₂` (left) for `bᵢ ∈ H`, `aᵢ ∈ A`.
fn basis_map(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra, basis: &[&[i64]], side: Side) -> Matrix {
    let mut cols = Vec::new();
    for b in basis {
        for av in a.space().basis_vectors() {
            cols.push(match side {
                Side::Right => h.product(&vq(b), av),
                Side::Left => h.product(av, &vq(b)),
            });
        }
    }
    Matrix::from_columns(Q, h.dim(), cols)
}

#[test]
fn projectivity_examples() {
    let h = h4();
    for vs in [&[ONE, G][..], &[ONE, GX], &[ONE, G, X, GX]] {
        let a = subalgebra(&h, vs);
        let alg = a.algebra(&h);
        for side in [Side::Left, Side::Right] {
            assert!(is_projective(&alg, &ModuleStr::regular(&alg, side)));
        }
    }

    // A = span{1, gx} ≅ ℚ[y]/(y²): a splitting s of A → k has s(1)·y = 0, so s(1) lies in
    // the annihilator of y, on which the counit vanishes
    let a = subalgebra(&h, &[ONE, GX]);
    let alg = a.algebra(&h);
    let ann = annihilator(&alg, &y_in(&h, &a));
    let eps = counit_character(&h, &a);
    assert_eq!(ann.dim(), 1);
    assert!(ann.basis_vectors().iter().all(|v| eps.apply(v).is_zero()));
    let k = ModuleStr::character(&alg, Side::Right, &eps).unwrap();
    assert!(!is_projective(&alg, &k));
    assert!(!is_free(&alg, &k));

    // A = span{1, g}: {1, x} is a basis of H as a right A-module
    let a = subalgebra(&h, &[ONE, G]);
    let alg = a.algebra(&h);
    assert!(basis_map(&h, &a, &[ONE, X], Side::Right).inverse().is_some());
    let hm = h_over_subalgebra(&h, &a, Side::Right);
    assert!(is_projective(&alg, &hm));
    assert!(is_free(&alg, &hm));
    assert_eq!(free_basis(&alg, &hm).unwrap().len(), 2);
}

/// `C = A*` for `A = span{1, gx}`, with the grouplike `ε_A`.
fn divided_powers(h: &FiniteHopfAlgebra) -> (hopfcore::Coalgebra, SparseVec) {
    let a = subalgebra(h, &[ONE, GX]);
    let coalg = a.algebra(h).dual_coalgebra();
    let eps = counit_character(h, &a);
    (coalg, eps.row(0).clone())
}

#[test]
fn injectivity_examples() {
    let h = h4();
    let (coalg, unit) = divided_powers(&h);
    for side in [Side::Left, Side::Right] {
        assert!(is_injective_comodule(&coalg, &ComoduleStr::regular(&coalg, side)));
    }

    // the socle k·1* ⊆ C: a colinear f: C → k must kill 1*, so f∘ρ = f(1*) ≠ 1
    let socle = ComoduleStr::trivial(&coalg, Side::Right, &unit).unwrap();
    let cofree = ComoduleStr::cofree(&coalg, Side::Right, 1);
    // dual basis 1*, y*
    assert_eq!(unit, SparseVec::unit(0, Q.one()));
    let f_grouplike = Matrix::row_vector(Q, 2, unit.clone());
    let f_other = Matrix::row_vector(Q, 2, SparseVec::unit(1, Q.one()));
    assert!(!is_comodule_map(&f_grouplike, &cofree, &socle));
    assert!(is_comodule_map(&f_other, &cofree, &socle));
    assert!(!is_injective_comodule(&coalg, &socle));
    assert!(coaction_retraction(&coalg, &socle).is_none());

    let whole = FactorCoalgebra::identity(&h, Side::Left);
    for side in [Side::Left, Side::Right] {
        assert!(is_injective_comodule(whole.coalgebra(), &h_over_factor(&h, &whole, side)));
    }
}

#[test]
fn generator_examples() {
    let h = h4();
    let a = subalgebra(&h, &[ONE, GX]);
    let alg = a.algebra(&h);
    let (gen, trace) = is_generator(&alg, &ModuleStr::regular(&alg, Side::Right));
    assert!(gen);
    assert!(trace.space.is_full());

    // every A-map k → A lands in the annihilator of y, which is (y)
    let k = ModuleStr::character(&alg, Side::Right, &counit_character(&h, &a)).unwrap();
    let (gen, trace) = is_generator(&alg, &k);
    assert!(!gen);
    let y = y_in(&h, &a);
    assert_eq!(trace.space, annihilator(&alg, &y));
    assert_eq!(trace.space, Subspace::span(Q, 2, [y]));

    // A = span{1, g}: the coordinate projection H = 1·A ⊕ x·A → A is A-linear and hits 1
    let a = subalgebra(&h, &[ONE, G]);
    let alg = a.algebra(&h);
    let hm = h_over_subalgebra(&h, &a, Side::Right);
    let b = basis_map(&h, &a, &[ONE, X], Side::Right);
    let p = Matrix::identity(Q, 2).hstack(&Matrix::zeros(Q, 2, 2)).mul(&b.inverse().unwrap());
    assert!(is_module_map(&p, &hm, &ModuleStr::regular(&alg, Side::Right)));
    assert_eq!(p.apply(&h.one()), alg.unit_vector());
    let (gen, trace) = is_generator(&alg, &hm);
    assert!(gen);
    assert!(trace.space.is_full());
    let s = Setting::new(&h, &a).unwrap();
    let (gen, trace) = hopf_module_generator(&s, &s.h_right_hopf_module());
    assert!(gen);
    assert_eq!(trace.costable, Some(true));
}

/// A colinear σ: C → H with π∘σ = id, over the span of `Hom^C(C, H)`.
fn projection_splits(c: &FactorCoalgebra, hc: &ComoduleStr, side: Side) -> bool {
    let creg = ComoduleStr::regular(c.coalgebra(), side);
    let homs = comodule_homs(&creg, hc);
    let cd = c.dim();
    let flat = |m: &Matrix| {
        SparseVec::from_pairs(m.rows().iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(j, x)| (r * cd + j, x.clone()))))
    };
    let lhs = Matrix::from_columns(Q, cd * cd, homs.iter().map(|f| flat(&c.projection().mul(f))).collect());
    let rhs = Matrix::column_vector(Q, cd * cd, flat(&Matrix::identity(Q, cd)));
    lhs.solve(&rhs).is_some()
}

#[test]
fn cogenerator_examples() {
    let h = h4();
    let (coalg, _) = divided_powers(&h);
    for side in [Side::Left, Side::Right] {
        assert!(is_cogenerator(&coalg, &ComoduleStr::regular(&coalg, side)));
        assert!(!is_cogenerator(&coalg, &ComoduleStr::cofree(&coalg, side, 0)));
    }

    let a = subalgebra(&h, &[ONE, G]);
    let c = factor_by_subalgebra(&h, &a, Side::Left).unwrap();
    for side in [Side::Left, Side::Right] {
        let hc = h_over_factor(&h, &c, side);
        assert!(projection_splits(&c, &hc, side), "{side:?}");
        assert!(is_cogenerator(c.coalgebra(), &hc));
    }
}

/// `p(h) = Σ S(φ(π(h₁))) h₂` evaluated term by term.
fn doi_by_hand(h: &FiniteHopfAlgebra, c: &FactorCoalgebra, phi: &Matrix) -> Matrix {
    let n = h.dim();
    let cols = (0..n)
        .map(|i| {
            let mut acc = SparseVec::new();
            for (t, coeff) in h.coproduct(&h.basis_vector(i)).iter() {
                let (l, r) = (h.basis_vector(t / n), h.basis_vector(t % n));
                let left = h.antipode_of(&phi.apply(&c.projection().apply(&l)));
                acc = acc.add(&h.product(&left, &r).scale(coeff));
            }
            acc
        })
        .collect();
    Matrix::from_columns(h.field(), n, cols)
}

#[test]
fn total_integral_examples() {
    let h = h4();
    let trivial = FactorCoalgebra::trivial(&h, Side::Left);
    let phi = total_integral(&h, &trivial).unwrap().unwrap();
    assert_eq!(phi, *h.unit());
    let d = doi_splittings(&h, &trivial, &phi).unwrap();
    assert!(d.right.is_identity());
    assert!(d.holds());

    let whole = FactorCoalgebra::identity(&h, Side::Left);
    assert!(total_integral(&h, &whole).unwrap().is_some());
    let id = Matrix::identity(Q, 4);
    let d = doi_splittings(&h, &whole, &id).unwrap();
    assert_eq!(d.right, h.unit().mul(h.counit()));
    assert!(d.holds());

    // C = H/HA⁺ for A = span{1, g} has basis π(1), π(gx); φ sends them to 1 and gx
    let a = subalgebra(&h, &[ONE, G]);
    let c = factor_by_subalgebra(&h, &a, Side::Left).unwrap();
    let frozen = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 0], &[0, 1]]);
    assert_eq!(c.projection().apply(&vq(GX)), SparseVec::unit(1, Q.one()));
    let creg = ComoduleStr::regular(c.coalgebra(), Side::Right);
    assert!(is_comodule_map(&frozen, &creg, &h_over_factor(&h, &c, Side::Right)));
    let phi = total_integral(&h, &c).unwrap().unwrap();
    assert_eq!(phi, frozen);
    let d = doi_splittings(&h, &c, &phi).unwrap();
    assert!(d.holds());
    let p = doi_by_hand(&h, &c, &phi);
    assert_eq!(d.right, p);
    assert_eq!(p.rank(), 2);
    assert_eq!(p.mul(&p), p);
    assert_eq!(Subspace::image(&p), *a.space());

    let bad = Matrix::from_i64(Q, &[&[1, 0], &[0, 0], &[0, 1], &[0, 0]]);
    assert!(doi_splittings(&h, &c, &bad).is_err());
}

/// Periodic resolution `⋯ → A →y A →y A → k` of `k` over `ℚ[y]/(y²)`: exact, and `k⊗_A y = ε(y) = 0`.
fn periodic_tor_oracle(alg: &Algebra, eps: &Matrix, y: &SparseVec, degrees: usize) -> Vec<usize> {
    let d = alg.left_mult(y);
    assert_eq!(kernel(eps), Subspace::image(&d));
    assert_eq!(kernel(&d), Subspace::image(&d));
    assert!(eps.apply(y).is_zero());
    // the complex k ← k ← k ← ⋯ with zero maps has one-dimensional homology everywhere
    vec![1; degrees + 1]
}

#[test]
fn tor_examples() {
    let h = h4();
    let a = subalgebra(&h, &[ONE, G]);
    let alg = a.algebra(&h);
    let eps = counit_character(&h, &a);
    for v in [ModuleStr::regular(&alg, Side::Left), ModuleStr::character(&alg, Side::Left, &eps).unwrap()] {
        assert_eq!(tor(&alg, &ModuleStr::regular(&alg, Side::Right), &v, 0).unwrap(), v.dim());
    }

    let a = subalgebra(&h, &[ONE, GX]);
    let alg = a.algebra(&h);
    let eps = counit_character(&h, &a);
    let n = truncation_degree(alg.dim());
    let expected = periodic_tor_oracle(&alg, &eps, &y_in(&h, &a), n);
    let kr = ModuleStr::character(&alg, Side::Right, &eps).unwrap();
    let kl = ModuleStr::character(&alg, Side::Left, &eps).unwrap();
    assert_eq!(tor_dims(&alg, &kr, &kl, n).unwrap(), expected);
    assert_eq!(ext_dims(&alg, &kl, &kl, n).unwrap(), expected);

    // H is free over span{1, g}, so H⊗_A − is exact
    let a = subalgebra(&h, &[ONE, G]);
    let alg = a.algebra(&h);
    let hm = h_over_subalgebra(&h, &a, Side::Right);
    let k = ModuleStr::character(&alg, Side::Left, &counit_character(&h, &a)).unwrap();
    let dims = tor_dims(&alg, &hm, &k, n).unwrap();
    assert_eq!(dims[0], tensor_over(&hm, &k).unwrap().dim());
    assert_eq!(dims[0], 2);
    assert!(dims[1..].iter().all(|&d| d == 0), "{dims:?}");
}

#[test]
fn ext_and_cotor_examples() {
    let h = h4();
    let a = subalgebra(&h, &[ONE, G]);
    let alg = a.algebra(&h);
    let reg = ModuleStr::regular(&alg, Side::Left);
    for v in [reg.clone(), h_over_subalgebra(&h, &a, Side::Left)] {
        assert_eq!(ext(&alg, &reg, &v, 0).unwrap(), v.dim());
    }

    // H is a free left module over span{1, gx} on {1, g}, hence projective
    let a = subalgebra(&h, &[ONE, GX]);
    let alg = a.algebra(&h);
    assert!(basis_map(&h, &a, &[ONE, G], Side::Left).inverse().is_some());
    let hm = h_over_subalgebra(&h, &a, Side::Left);
    let dims = ext_dims(&alg, &hm, &hm, truncation_degree(alg.dim())).unwrap();
    assert_eq!(dims[0], module_homs(&hm, &hm).len());
    assert_eq!(dims[0], 8);
    assert!(dims[1..].iter().all(|&d| d == 0), "{dims:?}");

    let a = subalgebra(&h, &[ONE, G]);
    let c = factor_by_subalgebra(&h, &a, Side::Left).unwrap();
    let coalg = c.coalgebra();
    let creg = ComoduleStr::regular(coalg, Side::Right);
    let hl = h_over_factor(&h, &c, Side::Left);
    let k = ComoduleStr::trivial(coalg, Side::Left, c.grouplike()).unwrap();
    for w in [hl.clone(), k, ComoduleStr::regular(coalg, Side::Left)] {
        assert_eq!(cotor(coalg, &creg, &w, 0).unwrap(), w.dim());
    }
    let hr = h_over_factor(&h, &c, Side::Right);
    let dims = cotor_dims(coalg, &hr, &hl, 4).unwrap();
    assert_eq!(dims[0], cotensor(&hr, &hl).unwrap().dim());
}

#[test]
fn cofrobenius_examples() {
    let h = h4();
    assert!(cofrobenius_check(FactorCoalgebra::trivial(&h, Side::Left).coalgebra()));
    let c2 = build(&AlgebraSpec::group(&[2], Q)).unwrap();
    assert!(cofrobenius_check(c2.coalgebra()));

    // λ = π(gx): Δλ = π(1)⊗λ + λ⊗π(1), Gram matrix [[0, 1], [1, 0]]
    let a = subalgebra(&h, &[ONE, G]);
    let c = factor_by_subalgebra(&h, &a, Side::Left).unwrap();
    let lambda = SparseVec::unit(1, Q.one());
    let image = c.coalgebra().coproduct(&lambda);
    let entry = |i: usize, j: usize| image.get(i * 2 + j).cloned().unwrap_or_else(|| Q.zero());
    let det = &entry(0, 0) * &entry(1, 1) - &entry(0, 1) * &entry(1, 0);
    assert_eq!(det, Q.from_i64(-1));
    assert_eq!(frobenius_form(c.coalgebra(), &lambda), Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]));
    assert!(cofrobenius_check(c.coalgebra()));
}

#[test]
fn hom_comodule_examples() {
    let h = h4();
    let a = subalgebra(&h, &[ONE, G]);
    let s = Setting::new(&h, &a).unwrap();
    let am = s.a_hopf_module();
    let hm = s.h_right_hopf_module();

    // Hom_A(A, N) → N, f ↦ f(1) is a colinear isomorphism
    let unit = s.a_algebra().unit();
    for n in [&am, &hm] {
        let hom = hom_comodule(&s, &am, n).unwrap();
        assert!(hom.evaluation_colinear);
        let k = hom.homs.len();
        let at_one = hom.evaluation.mul(&Matrix::identity(Q, k).kron(unit));
        assert!(at_one.inverse().is_some());
        assert!(is_comodule_map(&at_one, &hom.comodule, n.comodule()));
    }
    // Hom_A(A, A) ≅ A; it is the one-dimensional trivial comodule exactly when A = k
    assert_eq!(hom_comodule(&s, &am, &am).unwrap().comodule.dim(), 2);
    let k = Setting::new(&h, &subalgebra(&h, &[ONE])).unwrap();
    let km = k.a_hopf_module();
    let hom = hom_comodule(&k, &km, &km).unwrap();
    assert_eq!(hom.comodule.dim(), 1);
    assert_eq!(*hom.comodule.coaction(), *h.unit());

    let hom = hom_comodule(&s, &hm, &hm).unwrap();
    assert_eq!(hom.comodule.dim(), 8);
    assert!(hom.evaluation_colinear);
}

#[test]
fn conditions_examples() {
    let h = h4();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for vs in [&[ONE][..], &[ONE, G, X, GX], &[ONE, G]] {
        let s = Setting::new(&h, &subalgebra(&h, vs)).unwrap();
        for sample in conditions_0x(&s, 6, &mut rng) {
            assert!(sample.passed(), "{vs:?}: {sample:?}");
        }
        assert_eq!(projective_generator_consequence(&s, 4, &mut rng), Some(true));
    }
    let s = Setting::new(&h, &subalgebra(&h, &[ONE, G])).unwrap();
    assert!(global_dimension_zero(&s).subalgebra_semisimple);
    // span{1, gx} is not semisimple, but H/H(gx) is spanned by the grouplikes π(1), π(g)
    let s = Setting::new(&h, &subalgebra(&h, &[ONE, GX])).unwrap();
    assert_eq!(global_dimension_zero(&s), GlobalDimensionZero { subalgebra_semisimple: false, factor_cosemisimple: true });
}
