//! Morphisms as matrices, with their commutation conditions and Hom-spaces.

use correspondence::Side;
use exactla::{Matrix, MatrixSystem, Term};

use crate::comodule::ComoduleStr;
use crate::hopf_module::HopfModule;
use crate::module::ModuleStr;
use crate::util::padded;

pub fn is_module_map(f: &Matrix, src: &ModuleStr, dst: &ModuleStr) -> bool {
    let d = src.algebra_dim();
    let lifted = match src.side() {
        Side::Left => padded(f, d, 1),
        Side::Right => padded(f, 1, d),
    };
    f.mul(src.action()) == dst.action().mul(&lifted)
}

pub fn is_comodule_map(f: &Matrix, src: &ComoduleStr, dst: &ComoduleStr) -> bool {
    let c = src.coalgebra_dim();
    let lifted = match src.side() {
        Side::Right => padded(f, 1, c),
        Side::Left => padded(f, c, 1),
    };
    dst.coaction().mul(f) == lifted.mul(src.coaction())
}

pub fn is_hopf_map(f: &Matrix, src: &HopfModule, dst: &HopfModule) -> bool {
    src.category() == dst.category() && is_module_map(f, src.module(), dst.module()) && is_comodule_map(f, src.comodule(), dst.comodule())
}

fn module_equations(sys: &mut MatrixSystem, src: &ModuleStr, dst: &ModuleStr) {
    let d = src.algebra_dim();
    let (pre, post) = match src.side() {
        Side::Left => (d, 1),
        Side::Right => (1, d),
    };
    sys.equation(&[Term::right(src.action()), Term::left(dst.action()).tensored(pre, post).negated()], None);
}

fn comodule_equations(sys: &mut MatrixSystem, src: &ComoduleStr, dst: &ComoduleStr) {
    let c = src.coalgebra_dim();
    let (pre, post) = match src.side() {
        Side::Right => (1, c),
        Side::Left => (c, 1),
    };
    sys.equation(&[Term::left(dst.coaction()), Term::right(src.coaction()).tensored(pre, post).negated()], None);
}

/// A basis of `Hom_A(src, dst)`.
pub fn module_homs(src: &ModuleStr, dst: &ModuleStr) -> Vec<Matrix> {
    let mut sys = MatrixSystem::new(src.field(), dst.dim(), src.dim());
    module_equations(&mut sys, src, dst);
    sys.solution_space()
}

/// A basis of `Hom^C(src, dst)`.
pub fn comodule_homs(src: &ComoduleStr, dst: &ComoduleStr) -> Vec<Matrix> {
    let mut sys = MatrixSystem::new(src.field(), dst.dim(), src.dim());
    comodule_equations(&mut sys, src, dst);
    sys.solution_space()
}

/// A basis of the morphisms of relative Hopf modules.
pub fn hopf_homs(src: &HopfModule, dst: &HopfModule) -> Vec<Matrix> {
    let mut sys = MatrixSystem::new(src.module().field(), dst.dim(), src.dim());
    module_equations(&mut sys, src.module(), dst.module());
    comodule_equations(&mut sys, src.comodule(), dst.comodule());
    sys.solution_space()
}
