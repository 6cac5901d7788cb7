use std::sync::OnceLock;

use catalog::{build, default_catalog};
use correspondence::{random_coideal_subalgebra, roundtrip_from_subalgebra, CoidealSubalgebra, Side};
use exactla::Matrix;
use hopfcore::FiniteHopfAlgebra;
use hopfmod::{
    comodule_homs, cotensor, module_homs, random_a_module, random_c_comodule, random_h_comodule, random_h_module,
    random_hopf_module, random_left_a_hopf_module, random_left_hopf_module, tensor_over, ComoduleStr, ModuleStr, Setting,
};
use homology::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Catalog algebras of dimension at most 4; resolutions over the larger ones are exercised
/// by the acceptance run.
fn catalog() -> &'static [(String, FiniteHopfAlgebra)] {
    static CELL: OnceLock<Vec<(String, FiniteHopfAlgebra)>> = OnceLock::new();
    CELL.get_or_init(|| {
        default_catalog().iter().map(|s| (s.name(), build(s).unwrap())).filter(|(_, h)| h.dim() <= 4).collect()
    })
}

fn instance(index: usize, seed: u64) -> (&'static str, &'static FiniteHopfAlgebra, CoidealSubalgebra, ChaCha8Rng) {
    let (name, h) = &catalog()[index % catalog().len()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_coideal_subalgebra(h, &mut rng, Side::Right);
    (name, h, a, rng)
}

/// `H` is free over `A` on both sides.
fn h_free(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> bool {
    let alg = a.algebra(h);
    [Side::Left, Side::Right].into_iter().all(|side| is_free(&alg, &h_over_subalgebra(h, a, side)))
}

/// Restriction of a random left `H`-module to `A`.
fn restricted_h_module(s: &Setting, a: &CoidealSubalgebra, rng: &mut ChaCha8Rng) -> ModuleStr {
    random_h_module(s, rng).restrict_scalars(&a.inclusion())
}

/// A right `C`-comodule whose coaction lifts to `H`.
fn lifted_c_comodule(s: &Setting, rng: &mut ChaCha8Rng) -> ComoduleStr {
    let c = s.factor();
    random_h_comodule(s, rng).pushforward(c.coalgebra(), c.projection()).unwrap()
}

/// `Tor_i` from the full fixed-length resolution, tensoring each free term with `tensor_over`.
fn tor_by_tensoring(s: &Setting, m: &ModuleStr, v: &ModuleStr, top: usize) -> Vec<usize> {
    let alg = s.a_algebra();
    let f = s.field();
    let res = free_resolution(alg, v, top + 1);
    let terms: Vec<_> = res.steps.iter().map(|st| tensor_over(m, &ModuleStr::free(alg, Side::Left, st.rank)).unwrap()).collect();
    let ranks: Vec<usize> = (1..res.steps.len())
        .map(|i| {
            let lifted = Matrix::identity(f, m.dim()).kron(&res.steps[i].differential);
            terms[i - 1].projection().mul(&lifted).mul(terms[i].section()).rank()
        })
        .collect();
    (0..=top).map(|i| terms[i].dim() - ranks[i] - if i == 0 { 0 } else { ranks[i - 1] }).collect()
}

/// `Cotor^i` from the full fixed-length cofree resolution, cotensoring each term with `cotensor`.
fn cotor_by_cotensoring(s: &Setting, x: &ComoduleStr, w: &ComoduleStr, top: usize) -> Vec<usize> {
    let coalg = s.factor().coalgebra();
    let f = s.field();
    let res = cofree_resolution(coalg, w, top + 1).unwrap();
    // the resolution's cofree terms are C⊗k^r
    let cofree = |r: usize| ComoduleStr::new(coalg, Side::Left, coalg.comult().kron(&Matrix::identity(f, r))).unwrap();
    let terms: Vec<_> = res.steps.iter().map(|st| cotensor(x, &cofree(st.rank)).unwrap()).collect();
    let ranks: Vec<usize> = (1..res.steps.len())
        .map(|i| {
            let lifted = Matrix::identity(f, x.dim()).kron(&res.steps[i].differential);
            lifted.mul(&terms[i - 1].embedding()).rank()
        })
        .collect();
    (0..=top).map(|i| terms[i].dim() - ranks[i] - if i == 0 { 0 } else { ranks[i - 1] }).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closing_resolutions_agree_with_fixed_length(index in 0usize..8, seed in any::<u64>()) {
        let (_, h, a, mut rng) = instance(index, seed);
        let s = Setting::new(h, &a).unwrap();
        let top = 3;
        let m = random_a_module(&s, &mut rng, Side::Right);
        let v = random_a_module(&s, &mut rng, Side::Left);
        prop_assert_eq!(tor_dims(s.a_algebra(), &m, &v, top).unwrap(), tor_by_tensoring(&s, &m, &v, top));
        let x = random_c_comodule(&s, &mut rng, Side::Right);
        let w = random_c_comodule(&s, &mut rng, Side::Left);
        prop_assert_eq!(cotor_dims(s.factor().coalgebra(), &x, &w, top).unwrap(), cotor_by_cotensoring(&s, &x, &w, top));
    }

    #[test]
    fn resolutions_are_exact(index in 0usize..8, seed in any::<u64>()) {
        let (_, h, a, mut rng) = instance(index, seed);
        let s = Setting::new(h, &a).unwrap();
        let alg = s.a_algebra();
        for side in [Side::Left, Side::Right] {
            let m = random_a_module(&s, &mut rng, side);
            let res = free_resolution(alg, &m, 4);
            prop_assert_eq!(res.validate(), Ok(()));
            prop_assert_eq!(res.length(), 4);
        }
        let coalg = s.factor().coalgebra();
        let w = random_c_comodule(&s, &mut rng, Side::Left);
        let res = cofree_resolution(coalg, &w, 4).unwrap();
        prop_assert_eq!(res.validate(), Ok(()));
    }

    #[test]
    fn degree_zero_agrees_with_direct_constructions(index in 0usize..8, seed in any::<u64>()) {
        let (_, h, a, mut rng) = instance(index, seed);
        let s = Setting::new(h, &a).unwrap();
        let alg = s.a_algebra();
        let m = random_a_module(&s, &mut rng, Side::Right);
        let v = random_a_module(&s, &mut rng, Side::Left);
        prop_assert_eq!(tor(alg, &m, &v, 0).unwrap(), tensor_over(&m, &v).unwrap().dim());
        let m = random_a_module(&s, &mut rng, Side::Left);
        prop_assert_eq!(ext(alg, &m, &v, 0).unwrap(), module_homs(&m, &v).len());
        let coalg = s.factor().coalgebra();
        let x = random_c_comodule(&s, &mut rng, Side::Right);
        let w = random_c_comodule(&s, &mut rng, Side::Left);
        prop_assert_eq!(cotor(coalg, &x, &w, 0).unwrap(), cotensor(&x, &w).unwrap().dim());
    }

    #[test]
    fn transfer_implications_hold(index in 0usize..8, seed in any::<u64>()) {
        let (name, h, a, _) = instance(index, seed);
        let r = roundtrip_from_subalgebra(h, &a, Some(&HomologyOracle), name);
        prop_assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        prop_assert!(r.module_flags.is_some());
    }

    #[test]
    fn projective_samples_force_projective_generators(index in 0usize..8, seed in any::<u64>()) {
        let (_, h, a, mut rng) = instance(index, seed);
        let s = Setting::new(h, &a).unwrap();
        prop_assert_ne!(projective_generator_consequence(&s, 6, &mut rng), Some(false));
    }

    #[test]
    fn generators_detected_by_nonzero_homs(index in 0usize..8, seed in any::<u64>()) {
        let (_, h, a, mut rng) = instance(index, seed);
        let s = Setting::new(h, &a).unwrap();
        let alg = s.a_algebra();
        prop_assume!(is_generator(alg, &s.h_as_left_a_module()).0);
        let m = random_hopf_module(&s, &mut rng);
        prop_assume!(m.dim() > 0);
        let homs = module_homs(m.module(), &ModuleStr::regular(alg, Side::Right)).len();
        let (gen, trace) = hopf_module_generator(&s, &m);
        prop_assert_eq!(gen, homs > 0);
        prop_assert_eq!(trace.costable, Some(true));
    }

    #[test]
    fn cotensor_with_h_is_nonzero(index in 0usize..8, seed in any::<u64>()) {
        let (_, h, a, mut rng) = instance(index, seed);
        let s = Setting::new(h, &a).unwrap();
        let v = random_c_comodule(&s, &mut rng, Side::Right);
        let u = lifted_c_comodule(&s, &mut rng);
        let hl = s.h_as_left_c_comodule();
        let coflat = is_injective_comodule(s.factor().coalgebra(), &hl);
        let into = !comodule_homs(&u, &v).is_empty();
        let out_of = coflat && !comodule_homs(&v, &u).is_empty();
        if into || out_of {
            prop_assert!(cotensor(&v, &hl).unwrap().dim() > 0);
        }
    }

    #[test]
    fn factor_coalgebras_are_cofrobenius(index in 0usize..8, seed in any::<u64>()) {
        let (_, h, a, _) = instance(index, seed);
        let s = Setting::new(h, &a).unwrap();
        prop_assert!(cofrobenius_check(s.factor().coalgebra()));
        let phi = total_integral(h, s.factor()).unwrap();
        if let Some(phi) = phi {
            prop_assert!(doi_splittings(h, s.factor(), &phi).unwrap().holds());
        }
    }

    #[test]
    fn hopf_modules_are_acyclic(index in 0usize..8, seed in any::<u64>()) {
        let (_, h, a, mut rng) = instance(index, seed);
        prop_assume!(h_free(h, &a));
        let s = Setting::new(h, &a).unwrap();
        let alg = s.a_algebra();
        let top = 3;
        let m = random_hopf_module(&s, &mut rng);
        let v = restricted_h_module(&s, &a, &mut rng);
        let dims = tor_dims(alg, m.module(), &v, top).unwrap();
        prop_assert!(dims[1..].iter().all(|&d| d == 0), "Tor {:?}", dims);
        let m = random_left_a_hopf_module(&s, &mut rng);
        let dims = ext_dims(alg, m.module(), &v, top).unwrap();
        prop_assert!(dims[1..].iter().all(|&d| d == 0), "Ext {:?}", dims);
        let w = lifted_c_comodule(&s, &mut rng);
        let m = random_left_hopf_module(&s, &mut rng);
        let dims = cotor_dims(s.factor().coalgebra(), &w, m.comodule(), top).unwrap();
        prop_assert!(dims[1..].iter().all(|&d| d == 0), "Cotor {:?}", dims);
    }

    #[test]
    fn hom_evaluation_is_colinear(index in 0usize..8, seed in any::<u64>()) {
        let (_, h, a, mut rng) = instance(index, seed);
        let s = Setting::new(h, &a).unwrap();
        let m = random_hopf_module(&s, &mut rng);
        let n = random_hopf_module(&s, &mut rng);
        let hom = hom_comodule(&s, &m, &n).unwrap();
        prop_assert!(hom.evaluation_colinear);
        prop_assert_eq!(hom.comodule.dim(), module_homs(m.module(), n.module()).len());
    }
}

#[test]
fn exhaustive_transfer_matrix() {
    for (name, h) in catalog() {
        let Some(all) = correspondence::enumerate_coideal_subalgebras(h, Side::Right) else { continue };
        for a in &all {
            let r = roundtrip_from_subalgebra(h, a, Some(&HomologyOracle), name.as_str());
            assert!(r.passed(), "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }
}

#[test]
fn taft_algebra_instances() {
    let spec = catalog::AlgebraSpec::taft(3, 2, exactla::Field::prime(7).unwrap());
    let h = build(&spec).unwrap();
    for seed in 0..4 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_coideal_subalgebra(&h, &mut rng, Side::Right);
        let r = roundtrip_from_subalgebra(&h, &a, Some(&HomologyOracle), "taft");
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        let s = Setting::new(&h, &a).unwrap();
        assert!(cofrobenius_check(s.factor().coalgebra()));
        if h_free(&h, &a) {
            let m = random_hopf_module(&s, &mut rng);
            let v = restricted_h_module(&s, &a, &mut rng);
            let dims = tor_dims(s.a_algebra(), m.module(), &v, truncation_degree(a.dim())).unwrap();
            assert!(dims[1..].iter().all(|&d| d == 0), "{dims:?}");
        }
    }
}
