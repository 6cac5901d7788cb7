//! The data `(H, A, C)` that every Hopf-module category and functor here is built from.

use std::sync::OnceLock;

use correspondence::{
    check_coideal_subalgebra, coinvariant_subalgebra, coinvariants, factor_by_subalgebra, CoidealSubalgebra,
    FactorCoalgebra, Side,
};
use exactla::{Field, Matrix};
use hopfcore::{Algebra, FiniteHopfAlgebra, Twist};

use crate::comodule::ComoduleStr;
use crate::error::ModError;
use crate::hopf_module::{Category, HopfModule};
use crate::module::ModuleStr;
use crate::util::eye;

/// A right coideal subalgebra `A` and a left module factor coalgebra `C` with `A ⊆ ᶜᵒCH`.
#[derive(Clone, Debug)]
pub struct Setting<'h> {
    h: &'h FiniteHopfAlgebra,
    a: CoidealSubalgebra,
    c: FactorCoalgebra,
    a_alg: Algebra,
    a_coaction: Matrix,
    a_counit: Matrix,
    op: OnceLock<Box<Setting<'h>>>,
    cop: OnceLock<Box<Setting<'h>>>,
}

impl<'h> Setting<'h> {
    /// `C = H/HA⁺`.
    pub fn new(h: &'h FiniteHopfAlgebra, a: &CoidealSubalgebra) -> Result<Self, ModError> {
        let c = factor_by_subalgebra(h, a, Side::Left)?;
        Setting::with_coalgebra(h, a, c)
    }

    /// `A = ᶜᵒCH`.
    pub fn from_coalgebra(h: &'h FiniteHopfAlgebra, c: FactorCoalgebra) -> Result<Self, ModError> {
        let a = coinvariant_subalgebra(h, &c, Side::Right)?;
        Setting::with_coalgebra(h, &a, c)
    }

    pub fn with_coalgebra(h: &'h FiniteHopfAlgebra, a: &CoidealSubalgebra, c: FactorCoalgebra) -> Result<Self, ModError> {
        if a.side() != Side::Right {
            return Err(ModError::SideMismatch { expected: Side::Right, found: a.side() });
        }
        if c.side() != Side::Left {
            return Err(ModError::SideMismatch { expected: Side::Left, found: c.side() });
        }
        if !a.space().is_subspace_of(&coinvariants(h, &c, Side::Right)) {
            return Err(ModError::NotContained);
        }
        Ok(Setting {
            h,
            a_alg: a.algebra(h),
            a_coaction: a.coaction(h),
            a_counit: h.counit().mul(&a.inclusion()),
            a: a.clone(),
            c,
            op: OnceLock::new(),
            cop: OnceLock::new(),
        })
    }

    pub fn hopf(&self) -> &'h FiniteHopfAlgebra {
        self.h
    }

    pub fn field(&self) -> Field {
        self.h.field()
    }

    pub fn subalgebra(&self) -> &CoidealSubalgebra {
        &self.a
    }

    pub fn factor(&self) -> &FactorCoalgebra {
        &self.c
    }

    pub fn h_dim(&self) -> usize {
        self.h.dim()
    }

    pub fn a_dim(&self) -> usize {
        self.a.dim()
    }

    pub fn c_dim(&self) -> usize {
        self.c.dim()
    }

    /// Structure constants of `A` in the canonical basis of the subspace.
    pub fn a_algebra(&self) -> &Algebra {
        &self.a_alg
    }

    /// `A → A⊗H`.
    pub fn a_coaction(&self) -> &Matrix {
        &self.a_coaction
    }

    /// `ε` restricted to `A`, `1 × dim A`.
    pub fn a_counit(&self) -> &Matrix {
        &self.a_counit
    }

    /// The same `A` inside `H^op`, with `H^op/H^op A⁺ = H/A⁺H`.
    pub fn opposite(&self) -> &Setting<'h> {
        self.op.get_or_init(|| {
            let h_op = self.h.twisted(Twist::Op);
            let a = check_coideal_subalgebra(h_op, self.a.space().clone(), Side::Right)
                .expect("a right coideal subalgebra of H is one of H^op");
            Box::new(Setting::new(h_op, &a).expect("H^op/H^op A⁺ contains A in its coinvariants"))
        })
    }

    /// `B = H^coC` as a right coideal subalgebra of `H^cop`, with `C^cop`.
    pub fn co_opposite(&self) -> &Setting<'h> {
        self.cop.get_or_init(|| {
            let h_cop = self.h.twisted(Twist::Cop);
            let b = coinvariants(self.h, &self.c, Side::Left);
            let b = check_coideal_subalgebra(h_cop, b, Side::Right).expect("H^coC is a right coideal subalgebra of H^cop");
            Box::new(Setting::with_coalgebra(h_cop, &b, self.c.co_opposite(self.h)).expect("B ⊆ H^coC"))
        })
    }

    /// `D = H/A⁺H`, the right module factor coalgebra.
    pub fn right_factor(&self) -> &FactorCoalgebra {
        self.opposite().factor()
    }

    /// `H⊗A → H`, `h⊗a ↦ ha`.
    pub fn h_right_a_action(&self) -> Matrix {
        self.h.mult().mul(&eye(self.field(), self.h_dim()).kron(&self.a.inclusion()))
    }

    /// `A⊗H → H`, `a⊗h ↦ ah`.
    pub fn h_left_a_action(&self) -> Matrix {
        self.h.mult().mul(&self.a.inclusion().kron(&eye(self.field(), self.h_dim())))
    }

    pub fn h_as_right_a_module(&self) -> ModuleStr {
        ModuleStr::from_parts(Side::Right, self.a_dim(), self.h_right_a_action())
    }

    pub fn h_as_left_a_module(&self) -> ModuleStr {
        ModuleStr::from_parts(Side::Left, self.a_dim(), self.h_left_a_action())
    }

    /// `(π⊗id)Δ`.
    pub fn h_as_left_c_comodule(&self) -> ComoduleStr {
        ComoduleStr::from_parts(Side::Left, self.c_dim(), self.c.left_coaction_on_h(self.h))
    }

    /// `(id⊗π)Δ`.
    pub fn h_as_right_c_comodule(&self) -> ComoduleStr {
        ComoduleStr::from_parts(Side::Right, self.c_dim(), self.c.right_coaction_on_h(self.h))
    }

    pub fn h_regular_module(&self, side: Side) -> ModuleStr {
        ModuleStr::regular(self.h.algebra(), side)
    }

    pub fn h_regular_comodule(&self, side: Side) -> ComoduleStr {
        ComoduleStr::regular(self.h.coalgebra(), side)
    }

    pub fn c_regular_comodule(&self, side: Side) -> ComoduleStr {
        ComoduleStr::regular(self.c.coalgebra(), side)
    }

    /// `k` with `a` acting by `ε(a)`.
    pub fn trivial_a_module(&self, side: Side) -> ModuleStr {
        ModuleStr::from_parts(side, self.a_dim(), self.a_counit.clone())
    }

    /// `k` with coaction `1 ↦ 1⊗π(1)`.
    pub fn trivial_c_comodule(&self, side: Side) -> ComoduleStr {
        let g = crate::util::column(self.field(), self.c_dim(), self.c.grouplike());
        ComoduleStr::from_parts(side, self.c_dim(), g)
    }

    /// `k` with coaction `1 ↦ 1⊗1`.
    pub fn trivial_h_comodule(&self, side: Side) -> ComoduleStr {
        ComoduleStr::from_parts(side, self.h_dim(), self.h.unit().clone())
    }

    /// `k` with `h` acting by `ε(h)`.
    pub fn trivial_h_module(&self, side: Side) -> ModuleStr {
        ModuleStr::from_parts(side, self.h_dim(), self.h.counit().clone())
    }

    /// `A` itself in `M_A^H`.
    pub fn a_hopf_module(&self) -> HopfModule {
        HopfModule::from_parts(
            Category::RightARightH,
            ModuleStr::regular(&self.a_alg, Side::Right),
            ComoduleStr::from_parts(Side::Right, self.h_dim(), self.a_coaction.clone()),
        )
    }

    /// `H` in `M_A^H` (right multiplication by `A`, coaction `Δ`).
    pub fn h_right_hopf_module(&self) -> HopfModule {
        HopfModule::from_parts(Category::RightARightH, self.h_as_right_a_module(), self.h_regular_comodule(Side::Right))
    }

    /// `H` in `_A M^H`.
    pub fn h_left_a_hopf_module(&self) -> HopfModule {
        HopfModule::from_parts(Category::LeftARightH, self.h_as_left_a_module(), self.h_regular_comodule(Side::Right))
    }

    /// `H` in `_H^C M` (left multiplication, coaction `(π⊗id)Δ`).
    pub fn h_left_hopf_module(&self) -> HopfModule {
        HopfModule::from_parts(Category::LeftHLeftC, self.h_regular_module(Side::Left), self.h_as_left_c_comodule())
    }

    /// `H` in `_H M^C` (left multiplication, coaction `(id⊗π)Δ`).
    pub fn h_left_right_c_hopf_module(&self) -> HopfModule {
        HopfModule::from_parts(Category::LeftHRightC, self.h_regular_module(Side::Left), self.h_as_right_c_comodule())
    }
}
