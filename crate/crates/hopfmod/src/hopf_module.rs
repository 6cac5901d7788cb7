//! Relative Hopf modules: a module and a comodule on one space, tied by a compatibility law.

use std::fmt;

use correspondence::Side;
use exactla::{build_map, ColumnMap, Matrix, Quotient, SparseVec, Subspace};

use crate::comodule::ComoduleStr;
use crate::error::ModError;
use crate::module::ModuleStr;
use crate::setting::Setting;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Category {
    /// `M_A^H`: `ρ(ma) = m₀a₀⊗m₁a₁`.
    RightARightH,
    /// `_A M^H`: `ρ(am) = a₀m₀⊗a₁m₁`.
    LeftARightH,
    /// `_H^C M`: `λ(hm) = h₁·m₋₁⊗h₂m₀`.
    LeftHLeftC,
    /// `_H M^C`: `ρ(hm) = h₁m₀⊗h₂·m₁`.
    LeftHRightC,
}

impl Category {
    pub fn module_side(self) -> Side {
        match self {
            Category::RightARightH => Side::Right,
            _ => Side::Left,
        }
    }

    pub fn comodule_side(self) -> Side {
        match self {
            Category::LeftHLeftC => Side::Left,
            _ => Side::Right,
        }
    }

    /// Whether the acting algebra is `H` (otherwise `A`).
    pub fn acted_on_by_h(self) -> bool {
        matches!(self, Category::LeftHLeftC | Category::LeftHRightC)
    }

    /// Whether the coacting coalgebra is `H` (otherwise `C`).
    pub fn coacted_on_by_h(self) -> bool {
        matches!(self, Category::RightARightH | Category::LeftARightH)
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::RightARightH => "M_A^H",
            Category::LeftARightH => "_A M^H",
            Category::LeftHLeftC => "_H^C M",
            Category::LeftHRightC => "_H M^C",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModule {
    category: Category,
    module: ModuleStr,
    comodule: ComoduleStr,
}

impl HopfModule {
    pub fn new(setting: &Setting, category: Category, module: ModuleStr, comodule: ComoduleStr) -> Result<Self, ModError> {
        let m = HopfModule { category, module, comodule };
        m.check(setting)?;
        Ok(m)
    }

    pub(crate) fn from_parts(category: Category, module: ModuleStr, comodule: ComoduleStr) -> Self {
        HopfModule { category, module, comodule }
    }

    /// Both structures satisfy their axioms and the compatibility law holds.
    pub fn check(&self, s: &Setting) -> Result<(), ModError> {
        let cat = self.category;
        if self.module.dim() != self.comodule.dim() {
            return Err(ModError::Shape(format!("module dim {} vs comodule dim {}", self.module.dim(), self.comodule.dim())));
        }
        for (expected, found) in [(cat.module_side(), self.module.side()), (cat.comodule_side(), self.comodule.side())] {
            if expected != found {
                return Err(ModError::SideMismatch { expected, found });
            }
        }
        let h = s.hopf();
        let alg = if cat.acted_on_by_h() { h.algebra() } else { s.a_algebra() };
        let coalg = if cat.coacted_on_by_h() { h.coalgebra() } else { s.factor().coalgebra() };
        ModuleStr::new(alg, self.module.side(), self.module.action().clone())?;
        ComoduleStr::new(coalg, self.comodule.side(), self.comodule.coaction().clone())?;
        let (lhs, rhs) = compatibility(s, cat, self.module.action(), self.comodule.coaction());
        if lhs != rhs {
            return Err(ModError::Incompatible(cat));
        }
        Ok(())
    }

    pub fn category(&self) -> Category {
        self.category
    }

    pub fn module(&self) -> &ModuleStr {
        &self.module
    }

    pub fn comodule(&self) -> &ComoduleStr {
        &self.comodule
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn expect_category(&self, category: Category) -> Result<(), ModError> {
        if self.category == category {
            Ok(())
        } else {
            Err(ModError::CategoryMismatch { expected: category, found: self.category })
        }
    }

    pub fn sub(&self, u: &Subspace) -> Result<HopfModule, ModError> {
        Ok(HopfModule::from_parts(self.category, self.module.submodule(u)?, self.comodule.subcomodule(u)?))
    }

    pub fn quotient(&self, u: &Subspace) -> Result<(HopfModule, Quotient), ModError> {
        let (module, q) = self.module.quotient(u)?;
        let (comodule, _) = self.comodule.quotient(u)?;
        Ok((HopfModule::from_parts(self.category, module, comodule), q))
    }

    /// The smallest sub-object containing `vectors`.
    pub fn generated(&self, vectors: &[SparseVec]) -> Subspace {
        let mut u = Subspace::span(self.module.field(), self.dim(), vectors.iter().cloned());
        loop {
            let next = self.comodule.generated(self.module.generated(u.basis_vectors()).basis_vectors());
            if next.dim() == u.dim() {
                return u;
            }
            u = next;
        }
    }

    pub fn direct_sum(&self, other: &HopfModule) -> HopfModule {
        assert_eq!(self.category, other.category, "direct sum across categories");
        HopfModule::from_parts(self.category, self.module.direct_sum(&other.module), self.comodule.direct_sum(&other.comodule))
    }
}

/// Both sides of the compatibility law as maps out of `M⊗A`, `A⊗M` or `H⊗M`.
fn compatibility(s: &Setting, cat: Category, action: &Matrix, coaction: &Matrix) -> (Matrix, Matrix) {
    let h = s.hopf();
    let f = s.field();
    let (n, hd, d, cd) = (action.nrows(), s.h_dim(), s.a_dim(), s.c_dim());
    let act = ColumnMap::new(action);
    let co = ColumnMap::new(coaction);
    let mult = h.mult_map();
    let lhs = coaction.mul(action);
    let rhs = match cat {
        Category::RightARightH => {
            let rho_a = ColumnMap::new(s.a_coaction());
            build_map(f, &[n, d], n * hd, |t| {
                t.apply(0, 1, &co, &[n, hd])
                    .apply(2, 1, &rho_a, &[d, hd])
                    .permute(&[0, 2, 1, 3])
                    .apply(0, 2, &act, &[n])
                    .apply(1, 2, mult, &[hd])
            })
        }
        Category::LeftARightH => {
            let rho_a = ColumnMap::new(s.a_coaction());
            build_map(f, &[d, n], n * hd, |t| {
                t.apply(0, 1, &rho_a, &[d, hd])
                    .apply(2, 1, &co, &[n, hd])
                    .permute(&[0, 2, 1, 3])
                    .apply(0, 2, &act, &[n])
                    .apply(1, 2, mult, &[hd])
            })
        }
        Category::LeftHLeftC => {
            let cact = ColumnMap::new(s.factor().action());
            build_map(f, &[hd, n], cd * n, |t| {
                t.apply(0, 1, h.comult_map(), &[hd, hd])
                    .apply(2, 1, &co, &[cd, n])
                    .permute(&[0, 2, 1, 3])
                    .apply(0, 2, &cact, &[cd])
                    .apply(1, 2, &act, &[n])
            })
        }
        Category::LeftHRightC => {
            let cact = ColumnMap::new(s.factor().action());
            build_map(f, &[hd, n], n * cd, |t| {
                t.apply(0, 1, h.comult_map(), &[hd, hd])
                    .apply(2, 1, &co, &[n, cd])
                    .permute(&[0, 2, 1, 3])
                    .apply(0, 2, &act, &[n])
                    .apply(1, 2, &cact, &[cd])
            })
        }
    };
    (lhs, rhs)
}
