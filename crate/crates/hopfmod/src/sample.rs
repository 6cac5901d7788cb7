//! Random objects of the module, comodule and Hopf-module categories of a [`Setting`].
//!
//! Every sample is built from free or cofree objects by at most one generated-subobject or
//! quotient step, so it has the structure by construction; generators are sparse vectors to
//! keep dimensions small.

use correspondence::Side;
use exactla::{Field, Scalar, SparseVec};
use rand::Rng;

use crate::comodule::ComoduleStr;
use crate::decorate::{hopf_tensor, left_free_hopf};
use crate::functors::{from_co_opposite, from_opposite, induction_functor, quotient_functor};
use crate::hopf_module::HopfModule;
use crate::module::ModuleStr;
use crate::setting::Setting;

fn coefficients(field: Field) -> Vec<Scalar> {
    let all = field.elements().unwrap_or_else(|| (-2..=2).map(|c| field.from_i64(c)).collect());
    all.into_iter().filter(|c| !c.is_zero()).collect()
}

/// A vector with one or two nonzero coordinates.
pub fn random_vector<R: Rng + ?Sized>(field: Field, dim: usize, rng: &mut R) -> SparseVec {
    let coeffs = coefficients(field);
    let count = rng.gen_range(1..=2.min(dim));
    SparseVec::from_pairs((0..count).map(|_| (rng.gen_range(0..dim), coeffs[rng.gen_range(0..coeffs.len())].clone())))
}

fn nonzero<R: Rng + ?Sized>(field: Field, dim: usize, rng: &mut R) -> SparseVec {
    loop {
        let v = random_vector(field, dim, rng);
        if !v.is_zero() {
            return v;
        }
    }
}

#[derive(Clone, Copy)]
enum Step {
    Keep,
    Sub,
    Quotient,
}

fn step<R: Rng + ?Sized>(rng: &mut R) -> Step {
    match rng.gen_range(0..3) {
        0 => Step::Keep,
        1 => Step::Sub,
        _ => Step::Quotient,
    }
}

/// A right `H`-comodule: the subcomodule of `H` generated by a sparse vector, or `k`.
pub fn random_h_comodule<R: Rng + ?Sized>(s: &Setting, rng: &mut R) -> ComoduleStr {
    if rng.gen_range(0..5) == 0 {
        return s.trivial_h_comodule(Side::Right);
    }
    let h = s.h_regular_comodule(Side::Right);
    let u = h.generated(&[nonzero(s.field(), s.h_dim(), rng)]);
    h.subcomodule(&u).expect("generated subcomodule")
}

/// A left `H`-module: `H`, `k`, a cyclic left ideal or a cyclic quotient of `H`.
pub fn random_h_module<R: Rng + ?Sized>(s: &Setting, rng: &mut R) -> ModuleStr {
    let h = s.h_regular_module(Side::Left);
    match rng.gen_range(0..4) {
        0 => h,
        1 => s.trivial_h_module(Side::Left),
        2 => h.submodule(&h.generated(&[nonzero(s.field(), s.h_dim(), rng)])).expect("generated submodule"),
        _ => {
            let u = h.generated(&[nonzero(s.field(), s.h_dim(), rng)]);
            if u.is_full() {
                h
            } else {
                h.quotient(&u).expect("generated submodule").0
            }
        }
    }
}

/// An `A`-module on the given side: `A`, `k`, `H` restricted, or a cyclic quotient of `A`.
pub fn random_a_module<R: Rng + ?Sized>(s: &Setting, rng: &mut R, side: Side) -> ModuleStr {
    let a = ModuleStr::regular(s.a_algebra(), side);
    match rng.gen_range(0..4) {
        0 => a,
        1 => s.trivial_a_module(side),
        2 => match side {
            Side::Left => s.h_as_left_a_module(),
            Side::Right => s.h_as_right_a_module(),
        },
        _ => {
            let u = a.generated(&[nonzero(s.field(), s.a_dim(), rng)]);
            if u.is_full() {
                a
            } else {
                a.quotient(&u).expect("generated submodule").0
            }
        }
    }
}

/// A `C`-comodule on the given side, from `C`, `k1_C`, `H` or `Φ` of a Hopf module, with one
/// subobject or quotient step.
pub fn random_c_comodule<R: Rng + ?Sized>(s: &Setting, rng: &mut R, side: Side) -> ComoduleStr {
    let base = match (side, rng.gen_range(0..4)) {
        (_, 0) => return s.trivial_c_comodule(side),
        (_, 1) => s.c_regular_comodule(side),
        (Side::Right, 2) => s.h_as_right_c_comodule(),
        (Side::Left, 2) => s.h_as_left_c_comodule(),
        (Side::Right, _) => quotient_functor(s, &random_hopf_module(s, rng)).expect("Φ of a Hopf module").0,
        (Side::Left, _) => s.c_regular_comodule(side).direct_sum(&s.trivial_c_comodule(side)),
    };
    let u = base.generated(&[nonzero(s.field(), base.dim(), rng)]);
    match step(rng) {
        Step::Keep => base,
        Step::Sub => base.subcomodule(&u).expect("generated subcomodule"),
        Step::Quotient if u.is_full() => base,
        Step::Quotient => base.quotient(&u).expect("generated subcomodule").0,
    }
}

fn refine<R: Rng + ?Sized>(m: HopfModule, s: &Setting, rng: &mut R) -> HopfModule {
    let u = m.generated(&[nonzero(s.field(), m.dim(), rng)]);
    match step(rng) {
        Step::Keep => m,
        Step::Sub => m.sub(&u).expect("generated subobject"),
        Step::Quotient if u.is_full() => m,
        Step::Quotient => m.quotient(&u).expect("generated subobject").0,
    }
}

/// An object of `M_A^H`: `U⊗A` for a random right coideal `U`, or `H`, refined once.
pub fn random_hopf_module<R: Rng + ?Sized>(s: &Setting, rng: &mut R) -> HopfModule {
    let base = if rng.gen_range(0..4) == 0 {
        s.h_right_hopf_module()
    } else {
        hopf_tensor(s, &random_h_comodule(s, rng), &s.a_hopf_module()).expect("U⊗A is a relative Hopf module")
    };
    refine(base, s, rng)
}

/// An object of `_H^C M`: `H⊗V` for a random left `C`-comodule, or `H⊗_A V`, refined once.
pub fn random_left_hopf_module<R: Rng + ?Sized>(s: &Setting, rng: &mut R) -> HopfModule {
    let base = if rng.gen_range(0..3) == 0 {
        induction_functor(s, &random_a_module(s, rng, Side::Left)).expect("H⊗_A V").0
    } else {
        left_free_hopf(s, &random_c_comodule(s, rng, Side::Left)).expect("H⊗V is a relative Hopf module")
    };
    refine(base, s, rng)
}

/// An object of `_A M^H`, sampled in `M_{A^op}^{H^op}`.
pub fn random_left_a_hopf_module<R: Rng + ?Sized>(s: &Setting, rng: &mut R) -> HopfModule {
    from_opposite(&random_hopf_module(s.opposite(), rng))
}

/// An object of `_H M^C`, sampled in `_{H^cop}^{C^cop} M`.
pub fn random_left_h_right_c<R: Rng + ?Sized>(s: &Setting, rng: &mut R) -> HopfModule {
    from_co_opposite(&random_left_hopf_module(s.co_opposite(), rng))
}
