//! Module and comodule structures on tensor products built from the Hopf structure of `H`.

use correspondence::Side;
use exactla::{build_map, ColumnMap};

use crate::comodule::ComoduleStr;
use crate::error::ModError;
use crate::hopf_module::{Category, HopfModule};
use crate::module::ModuleStr;
use crate::setting::Setting;

fn expect(expected: Side, found: Side) -> Result<(), ModError> {
    if expected == found {
        Ok(())
    } else {
        Err(ModError::SideMismatch { expected, found })
    }
}

fn expect_dim(what: &str, expected: usize, found: usize) -> Result<(), ModError> {
    if expected == found {
        Ok(())
    } else {
        Err(ModError::Shape(format!("{what}: expected structure over dim {expected}, found {found}")))
    }
}

/// `U⊗V → U⊗V⊗C`, `u⊗v ↦ u₀⊗v₀⊗u₁·v₁` for `U ∈ M^H`, `V ∈ M^C`.
pub fn comodule_tensor(s: &Setting, u: &ComoduleStr, v: &ComoduleStr) -> Result<ComoduleStr, ModError> {
    expect(Side::Right, u.side())?;
    expect(Side::Right, v.side())?;
    expect_dim("U", s.h_dim(), u.coalgebra_dim())?;
    expect_dim("V", s.c_dim(), v.coalgebra_dim())?;
    let (nu, nv, hd, cd) = (u.dim(), v.dim(), s.h_dim(), s.c_dim());
    let (ru, rv, act) = (ColumnMap::new(u.coaction()), ColumnMap::new(v.coaction()), ColumnMap::new(s.factor().action()));
    let coaction = build_map(s.field(), &[nu, nv], nu * nv * cd, |t| {
        t.apply(0, 1, &ru, &[nu, hd]).apply(2, 1, &rv, &[nv, cd]).permute(&[0, 2, 1, 3]).apply(2, 2, &act, &[cd])
    });
    ComoduleStr::new(s.factor().coalgebra(), Side::Right, coaction)
}

/// `U⊗M ∈ M_A^H` for `U ∈ M^H`, `M ∈ M_A^H`: `A` acts on `M`, coaction `u₀⊗m₀⊗u₁m₁`.
pub fn hopf_tensor(s: &Setting, u: &ComoduleStr, m: &HopfModule) -> Result<HopfModule, ModError> {
    m.expect_category(Category::RightARightH)?;
    expect(Side::Right, u.side())?;
    expect_dim("U", s.h_dim(), u.coalgebra_dim())?;
    let h = s.hopf();
    let (nu, nm, hd) = (u.dim(), m.dim(), s.h_dim());
    let f = s.field();
    let action = crate::util::eye(f, nu).kron(m.module().action());
    let (ru, rm) = (ColumnMap::new(u.coaction()), ColumnMap::new(m.comodule().coaction()));
    let coaction = build_map(f, &[nu, nm], nu * nm * hd, |t| {
        t.apply(0, 1, &ru, &[nu, hd]).apply(2, 1, &rm, &[nm, hd]).permute(&[0, 2, 1, 3]).apply(2, 2, h.mult_map(), &[hd])
    });
    let out = HopfModule::from_parts(
        Category::RightARightH,
        ModuleStr::from_parts(Side::Right, s.a_dim(), action),
        ComoduleStr::from_parts(Side::Right, hd, coaction),
    );
    out.check(s)?;
    Ok(out)
}

/// `W⊗U → C⊗W⊗U`, `w⊗u ↦ S(u₁)·w₋₁⊗w₀⊗u₀` for `W ∈ ᶜM`, `U ∈ M^H`.
pub fn twisted_left_coaction(s: &Setting, w: &ComoduleStr, u: &ComoduleStr) -> Result<ComoduleStr, ModError> {
    expect(Side::Left, w.side())?;
    expect(Side::Right, u.side())?;
    expect_dim("W", s.c_dim(), w.coalgebra_dim())?;
    expect_dim("U", s.h_dim(), u.coalgebra_dim())?;
    let h = s.hopf();
    let (nw, nu, hd, cd) = (w.dim(), u.dim(), s.h_dim(), s.c_dim());
    let (lw, ru, act) = (ColumnMap::new(w.coaction()), ColumnMap::new(u.coaction()), ColumnMap::new(s.factor().action()));
    let coaction = build_map(s.field(), &[nw, nu], cd * nw * nu, |t| {
        t.apply(0, 1, &lw, &[cd, nw])
            .apply(2, 1, &ru, &[nu, hd])
            .apply(3, 1, h.antipode_map(), &[hd])
            .permute(&[3, 0, 1, 2])
            .apply(0, 2, &act, &[cd])
    });
    ComoduleStr::new(s.factor().coalgebra(), Side::Left, coaction)
}

/// `a·(v⊗u) = a₀v⊗a₁u` for `V ∈ _A M`, `U ∈ _H M`.
pub fn diagonal_action(s: &Setting, v: &ModuleStr, u: &ModuleStr) -> Result<ModuleStr, ModError> {
    expect(Side::Left, v.side())?;
    expect(Side::Left, u.side())?;
    expect_dim("V", s.a_dim(), v.algebra_dim())?;
    expect_dim("U", s.h_dim(), u.algebra_dim())?;
    let (d, nv, nu, hd) = (s.a_dim(), v.dim(), u.dim(), s.h_dim());
    let (rho, av, au) = (ColumnMap::new(s.a_coaction()), ColumnMap::new(v.action()), ColumnMap::new(u.action()));
    let action = build_map(s.field(), &[d, nv, nu], nv * nu, |t| {
        t.apply(0, 1, &rho, &[d, hd]).permute(&[0, 2, 1, 3]).apply(0, 2, &av, &[nv]).apply(1, 2, &au, &[nu])
    });
    ModuleStr::new(s.a_algebra(), Side::Left, action)
}

/// `(u⊗w)·a = S(a₁)u⊗wa₀` for `U ∈ _H M`, `W ∈ M_A`.
pub fn twisted_right_action(s: &Setting, u: &ModuleStr, w: &ModuleStr) -> Result<ModuleStr, ModError> {
    expect(Side::Left, u.side())?;
    expect(Side::Right, w.side())?;
    expect_dim("U", s.h_dim(), u.algebra_dim())?;
    expect_dim("W", s.a_dim(), w.algebra_dim())?;
    let h = s.hopf();
    let (d, nu, nw, hd) = (s.a_dim(), u.dim(), w.dim(), s.h_dim());
    let (rho, au, aw) = (ColumnMap::new(s.a_coaction()), ColumnMap::new(u.action()), ColumnMap::new(w.action()));
    let action = build_map(s.field(), &[nu, nw, d], nu * nw, |t| {
        t.apply(2, 1, &rho, &[d, hd])
            .apply(3, 1, h.antipode_map(), &[hd])
            .permute(&[3, 0, 1, 2])
            .apply(0, 2, &au, &[nu])
            .apply(1, 2, &aw, &[nw])
    });
    ModuleStr::new(s.a_algebra(), Side::Right, action)
}

/// `H⊗V ∈ _H^C M` for `V ∈ ᶜM`: `h·(h′⊗v) = hh′⊗v`, `λ(h⊗v) = h₁·v₋₁⊗h₂⊗v₀`.
pub fn left_free_hopf(s: &Setting, v: &ComoduleStr) -> Result<HopfModule, ModError> {
    expect(Side::Left, v.side())?;
    expect_dim("V", s.c_dim(), v.coalgebra_dim())?;
    let h = s.hopf();
    let (nv, hd, cd) = (v.dim(), s.h_dim(), s.c_dim());
    let f = s.field();
    let action = h.mult().kron(&crate::util::eye(f, nv));
    let (lv, act) = (ColumnMap::new(v.coaction()), ColumnMap::new(s.factor().action()));
    let coaction = build_map(f, &[hd, nv], cd * hd * nv, |t| {
        t.apply(0, 1, h.comult_map(), &[hd, hd]).apply(2, 1, &lv, &[cd, nv]).permute(&[0, 2, 1, 3]).apply(0, 2, &act, &[cd])
    });
    let out = HopfModule::from_parts(
        Category::LeftHLeftC,
        ModuleStr::from_parts(Side::Left, hd, action),
        ComoduleStr::from_parts(Side::Left, cd, coaction),
    );
    out.check(s)?;
    Ok(out)
}
