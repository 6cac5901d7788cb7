//! Projectivity, generator, injectivity and cogenerator flags of `H` itself.

use correspondence::{CoidealSubalgebra, ComoduleFlags, FactorCoalgebra, FlatnessOracle, ModuleFlags, Side};
use exactla::Matrix;
use hopfcore::FiniteHopfAlgebra;
use hopfmod::{ComoduleStr, ModuleStr};

use crate::comodules::{is_cogenerator, is_injective_comodule};
use crate::modules::{is_generator, is_projective};

/// `H` as a left or right `A`-module by multiplication.
pub fn h_over_subalgebra(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra, side: Side) -> ModuleStr {
    let alg = a.algebra(h);
    let id = Matrix::identity(h.field(), h.dim());
    let action = match side {
        Side::Left => h.mult().mul(&a.inclusion().kron(&id)),
        Side::Right => h.mult().mul(&id.kron(&a.inclusion())),
    };
    ModuleStr::new(&alg, side, action).expect("H is a module over its subalgebras")
}

/// `H` as a left comodule via `(π⊗id)Δ` or a right one via `(id⊗π)Δ`.
pub fn h_over_factor(h: &FiniteHopfAlgebra, c: &FactorCoalgebra, side: Side) -> ComoduleStr {
    let coaction = match side {
        Side::Left => c.left_coaction_on_h(h),
        Side::Right => c.right_coaction_on_h(h),
    };
    ComoduleStr::new(c.coalgebra(), side, coaction).expect("H is a comodule over its factor coalgebras")
}

pub fn module_flags(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> ModuleFlags {
    let alg = a.algebra(h);
    let left = h_over_subalgebra(h, a, Side::Left);
    let right = h_over_subalgebra(h, a, Side::Right);
    ModuleFlags {
        left_projective: is_projective(&alg, &left),
        left_generator: is_generator(&alg, &left).0,
        right_projective: is_projective(&alg, &right),
        right_generator: is_generator(&alg, &right).0,
    }
}

pub fn comodule_flags(h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> ComoduleFlags {
    let coalg = c.coalgebra();
    let left = h_over_factor(h, c, Side::Left);
    let right = h_over_factor(h, c, Side::Right);
    ComoduleFlags {
        left_injective: is_injective_comodule(coalg, &left),
        left_cogenerator: is_cogenerator(coalg, &left),
        right_injective: is_injective_comodule(coalg, &right),
        right_cogenerator: is_cogenerator(coalg, &right),
    }
}

/// Exact finite-dimensional flags: flat as projective, faithfully flat as projective
/// generator, and dually for comodules.
#[derive(Clone, Copy, Debug, Default)]
pub struct HomologyOracle;

impl FlatnessOracle for HomologyOracle {
    fn module_flags(&self, h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> ModuleFlags {
        module_flags(h, a)
    }

    fn comodule_flags(&self, h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> ComoduleFlags {
        comodule_flags(h, c)
    }
}
