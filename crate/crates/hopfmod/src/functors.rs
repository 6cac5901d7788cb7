//! The four Takeuchi functor pairs, their effect on morphisms, and their adjunction maps.
//!
//! The pairs on the left-hand categories are obtained from the first two by passing to
//! `H^op` (for `_A M^H ⇄ M^D`) and to `H^cop` with `B = H^coC` (for `_B M ⇄ _H M^C`).

use correspondence::Side;
use exactla::{kernel, quotient, Matrix, Quotient, Subspace};

use crate::comodule::ComoduleStr;
use crate::error::ModError;
use crate::hopf_module::{Category, HopfModule};
use crate::module::ModuleStr;
use crate::morphism::{is_comodule_map, is_hopf_map, is_module_map};
use crate::products::{cotensor, tensor_over, TensorProduct};
use crate::setting::Setting;
use crate::util::{descend_map, eye, is_invertible, kernel_basis, padded, restrict_map};

/// `Φ(M) = M/MA⁺` with coaction `(id⊗π)ρ`, for `M ∈ M_A^H`.
pub fn quotient_functor(s: &Setting, m: &HopfModule) -> Result<(ComoduleStr, Quotient), ModError> {
    m.expect_category(Category::RightARightH)?;
    let f = s.field();
    let n = m.dim();
    let aug = kernel(s.a_counit()).embedding();
    let relations = Subspace::image(&m.module().action().mul(&eye(f, n).kron(&aug)));
    let q = quotient(n, &relations)?;
    let full = eye(f, n).kron(s.factor().projection()).mul(m.comodule().coaction());
    let coaction = descend_map(&full, &q.section, &kernel_basis(&q), &q, 1, s.c_dim()).ok_or(ModError::NotStable("coaction"))?;
    Ok((ComoduleStr::new(s.factor().coalgebra(), Side::Right, coaction)?, q))
}

/// `Ψ(V) = V□_C H` with `A` acting on the second leg and coaction `id⊗Δ`.
pub fn cotensor_functor(s: &Setting, v: &ComoduleStr) -> Result<(HopfModule, Subspace), ModError> {
    let f = s.field();
    let (n, hd, d) = (v.dim(), s.h_dim(), s.a_dim());
    let x = cotensor(v, &s.h_as_left_c_comodule())?;
    let emb = x.embedding();
    let action = restrict_map(&eye(f, n).kron(&s.h_right_a_action()), &emb.kron(&eye(f, d)), &x, 1, 1)
        .ok_or(ModError::NotStable("action"))?;
    let coaction =
        restrict_map(&eye(f, n).kron(s.hopf().comult()), &emb, &x, 1, hd).ok_or(ModError::NotStable("coaction"))?;
    let m = HopfModule::from_parts(
        Category::RightARightH,
        ModuleStr::from_parts(Side::Right, d, action),
        ComoduleStr::from_parts(Side::Right, hd, coaction),
    );
    m.check(s)?;
    Ok((m, x))
}

/// `Φ(V) = H⊗_A V` with `H` acting on the first leg and coaction `(π⊗id)Δ⊗id`.
pub fn induction_functor(s: &Setting, v: &ModuleStr) -> Result<(HopfModule, TensorProduct), ModError> {
    let f = s.field();
    let (hd, cd) = (s.h_dim(), s.c_dim());
    let tp = tensor_over(&s.h_as_right_a_module(), v)?;
    let nv = eye(f, v.dim());
    let action = descend_map(
        &s.hopf().mult().kron(&nv),
        &padded(tp.section(), hd, 1),
        &padded(&tp.relations, hd, 1),
        &tp.quotient,
        1,
        1,
    )
    .ok_or(ModError::NotStable("action"))?;
    let coaction = descend_map(&s.factor().left_coaction_on_h(s.hopf()).kron(&nv), tp.section(), &tp.relations, &tp.quotient, cd, 1)
        .ok_or(ModError::NotStable("coaction"))?;
    let m = HopfModule::from_parts(
        Category::LeftHLeftC,
        ModuleStr::from_parts(Side::Left, hd, action),
        ComoduleStr::from_parts(Side::Left, cd, coaction),
    );
    m.check(s)?;
    Ok((m, tp))
}

/// `Ψ(M) = ᶜᵒCM` with the restricted `A`-action.
pub fn coinvariant_functor(s: &Setting, m: &HopfModule) -> Result<(ModuleStr, Subspace), ModError> {
    m.expect_category(Category::LeftHLeftC)?;
    let f = s.field();
    let j = m.comodule().coinvariants(s.factor().grouplike());
    let full = m.module().action().mul(&s.subalgebra().inclusion().kron(&eye(f, m.dim())));
    let action = restrict_map(&full, &eye(f, s.a_dim()).kron(&j.embedding()), &j, 1, 1).ok_or(ModError::NotStable("action"))?;
    Ok((ModuleStr::new(s.a_algebra(), Side::Left, action)?, j))
}

/// `_A M^H → M^D`, `M ↦ M/A⁺M`.
pub fn left_quotient_functor(s: &Setting, m: &HopfModule) -> Result<(ComoduleStr, Quotient), ModError> {
    m.expect_category(Category::LeftARightH)?;
    quotient_functor(s.opposite(), &to_opposite(m))
}

/// `M^D → _A M^H`, `V ↦ V□_D H`.
pub fn left_cotensor_functor(s: &Setting, v: &ComoduleStr) -> Result<(HopfModule, Subspace), ModError> {
    let (m, x) = cotensor_functor(s.opposite(), v)?;
    let m = from_opposite(&m);
    m.check(s)?;
    Ok((m, x))
}

/// `_B M → _H M^C`, `V ↦ H⊗_B V` for `B = H^coC`.
pub fn right_induction_functor(s: &Setting, v: &ModuleStr) -> Result<(HopfModule, TensorProduct), ModError> {
    let (m, tp) = induction_functor(s.co_opposite(), v)?;
    let m = from_co_opposite(&m);
    m.check(s)?;
    Ok((m, tp))
}

/// `_H M^C → _B M`, `M ↦ M^coC`.
pub fn right_coinvariant_functor(s: &Setting, m: &HopfModule) -> Result<(ModuleStr, Subspace), ModError> {
    m.expect_category(Category::LeftHRightC)?;
    coinvariant_functor(s.co_opposite(), &to_co_opposite(m))
}

/// `_A M^H` read as `M_{A^op}^{H^op}`.
pub(crate) fn to_opposite(m: &HopfModule) -> HopfModule {
    HopfModule::from_parts(Category::RightARightH, m.module().opposite(), m.comodule().clone())
}

pub(crate) fn from_opposite(m: &HopfModule) -> HopfModule {
    HopfModule::from_parts(Category::LeftARightH, m.module().opposite(), m.comodule().clone())
}

/// `_H M^C` read as `_{H^cop}^{C^cop} M`.
pub(crate) fn to_co_opposite(m: &HopfModule) -> HopfModule {
    HopfModule::from_parts(Category::LeftHLeftC, m.module().clone(), m.comodule().opposite())
}

pub(crate) fn from_co_opposite(m: &HopfModule) -> HopfModule {
    HopfModule::from_parts(Category::LeftHRightC, m.module().clone(), m.comodule().opposite())
}

/// `Φ(f)` for the quotient functor: the map induced on `M/MA⁺`.
pub fn quotient_functor_on(f: &Matrix, src: &Quotient, dst: &Quotient) -> Option<Matrix> {
    descend_map(f, &src.section, &kernel_basis(src), dst, 1, 1)
}

/// `Ψ(f) = (f⊗id)|` for the cotensor functor.
pub fn cotensor_functor_on(s: &Setting, f: &Matrix, src: &Subspace, dst: &Subspace) -> Option<Matrix> {
    restrict_map(&f.kron(&eye(s.field(), s.h_dim())), &src.embedding(), dst, 1, 1)
}

/// `Φ(f) = id⊗f` for the induction functor.
pub fn induction_functor_on(s: &Setting, f: &Matrix, src: &TensorProduct, dst: &TensorProduct) -> Option<Matrix> {
    descend_map(&eye(s.field(), s.h_dim()).kron(f), src.section(), &src.relations, &dst.quotient, 1, 1)
}

/// `Ψ(f) = f|` for the coinvariant functor.
pub fn coinvariant_functor_on(f: &Matrix, src: &Subspace, dst: &Subspace) -> Option<Matrix> {
    restrict_map(f, &src.embedding(), dst, 1, 1)
}

/// A unit or counit of one of the adjunctions, with its exact checks.
#[derive(Clone, Debug)]
pub struct AdjunctionMap {
    pub map: Matrix,
    pub is_morphism: bool,
    pub is_iso: bool,
}

impl AdjunctionMap {
    fn new(map: Matrix, is_morphism: bool) -> Self {
        let is_iso = is_invertible(&map);
        AdjunctionMap { map, is_morphism, is_iso }
    }
}

/// `M → (M/MA⁺)□_C H`, `m ↦ [m₀]⊗m₁`.
pub fn quotient_unit(s: &Setting, m: &HopfModule) -> Result<AdjunctionMap, ModError> {
    let (phi, q) = quotient_functor(s, m)?;
    let (psi, x) = cotensor_functor(s, &phi)?;
    let f = s.field();
    let full = q.projection.kron(&eye(f, s.h_dim())).mul(m.comodule().coaction());
    let map = restrict_map(&full, &eye(f, m.dim()), &x, 1, 1).ok_or(ModError::NotStable("cotensor"))?;
    let ok = is_hopf_map(&map, m, &psi);
    Ok(AdjunctionMap::new(map, ok))
}

/// `(V□_C H)/(V□_C H)A⁺ → V`, `[v⊗h] ↦ vε(h)`.
pub fn quotient_counit(s: &Setting, v: &ComoduleStr) -> Result<AdjunctionMap, ModError> {
    let (psi, x) = cotensor_functor(s, v)?;
    let (phi, q) = quotient_functor(s, &psi)?;
    let f = s.field();
    let full = eye(f, v.dim()).kron(s.hopf().counit()).mul(&x.embedding());
    if !full.mul(&kernel_basis(&q)).is_zero() {
        return Err(ModError::NotStable("counit"));
    }
    let map = full.mul(&q.section);
    let ok = is_comodule_map(&map, &phi, v);
    Ok(AdjunctionMap::new(map, ok))
}

/// `V → ᶜᵒC(H⊗_A V)`, `v ↦ [1⊗v]`.
pub fn induction_unit(s: &Setting, v: &ModuleStr) -> Result<AdjunctionMap, ModError> {
    let (phi, tp) = induction_functor(s, v)?;
    let (psi, j) = coinvariant_functor(s, &phi)?;
    let f = s.field();
    let full = tp.projection().mul(&s.hopf().unit().kron(&eye(f, v.dim())));
    let map = restrict_map(&full, &eye(f, v.dim()), &j, 1, 1).ok_or(ModError::NotStable("coinvariants"))?;
    let ok = is_module_map(&map, v, &psi);
    Ok(AdjunctionMap::new(map, ok))
}

/// `H⊗_A ᶜᵒCM → M`, `[h⊗m] ↦ hm`.
pub fn induction_counit(s: &Setting, m: &HopfModule) -> Result<AdjunctionMap, ModError> {
    let (psi, j) = coinvariant_functor(s, m)?;
    let (phi, tp) = induction_functor(s, &psi)?;
    let full = m.module().action().mul(&eye(s.field(), s.h_dim()).kron(&j.embedding()));
    if !full.mul(&tp.relations).is_zero() {
        return Err(ModError::NotStable("counit"));
    }
    let map = full.mul(tp.section());
    let ok = is_hopf_map(&map, &phi, m);
    Ok(AdjunctionMap::new(map, ok))
}

pub fn left_quotient_unit(s: &Setting, m: &HopfModule) -> Result<AdjunctionMap, ModError> {
    m.expect_category(Category::LeftARightH)?;
    quotient_unit(s.opposite(), &to_opposite(m))
}

pub fn left_quotient_counit(s: &Setting, v: &ComoduleStr) -> Result<AdjunctionMap, ModError> {
    quotient_counit(s.opposite(), v)
}

pub fn right_induction_unit(s: &Setting, v: &ModuleStr) -> Result<AdjunctionMap, ModError> {
    induction_unit(s.co_opposite(), v)
}

pub fn right_induction_counit(s: &Setting, m: &HopfModule) -> Result<AdjunctionMap, ModError> {
    m.expect_category(Category::LeftHRightC)?;
    induction_counit(s.co_opposite(), &to_co_opposite(m))
}
