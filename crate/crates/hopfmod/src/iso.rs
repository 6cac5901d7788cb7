//! The canonical isomorphisms between decorated tensor and cotensor products, each built from
//! its explicit formula and checked for exact bijectivity and equivariance.

use correspondence::{Side, Verdict};
use exactla::{build_map, ColumnMap, Matrix, SparseVec, Subspace};

use crate::comodule::ComoduleStr;
use crate::decorate::{comodule_tensor, diagonal_action, hopf_tensor, twisted_left_coaction, twisted_right_action};
use crate::error::ModError;
use crate::functors::{
    coinvariant_functor, cotensor_functor, induction_functor, left_quotient_functor, quotient_functor,
    right_coinvariant_functor,
};
use crate::hopf_module::{Category, HopfModule};
use crate::module::ModuleStr;
use crate::morphism::{is_comodule_map, is_hopf_map, is_module_map};
use crate::products::{cotensor, tensor_over, TensorProduct};
use crate::setting::Setting;
use crate::util::{descend_map, eye, is_invertible, padded, restrict_map};

/// Outcome of one canonical isomorphism. `map` is `None` when the hypotheses do not hold.
#[derive(Clone, Debug)]
pub struct IsoCheck {
    pub name: &'static str,
    pub map: Option<Matrix>,
    pub source_dim: usize,
    pub target_dim: usize,
    pub bijective: bool,
    pub equivariant: bool,
    pub note: Option<String>,
}

impl IsoCheck {
    fn checked(name: &'static str, map: Matrix, bijective: bool, equivariant: bool) -> Self {
        IsoCheck { name, source_dim: map.ncols(), target_dim: map.nrows(), map: Some(map), bijective, equivariant, note: None }
    }

    fn square(name: &'static str, map: Matrix, equivariant: bool) -> Self {
        let bijective = is_invertible(&map);
        IsoCheck::checked(name, map, bijective, equivariant)
    }

    fn ill_defined(name: &'static str, source_dim: usize, target_dim: usize, why: &str) -> Self {
        IsoCheck { name, map: None, source_dim, target_dim, bijective: false, equivariant: false, note: Some(why.into()) }
    }

    fn not_applicable(name: &'static str, why: &str) -> Self {
        IsoCheck { name, map: None, source_dim: 0, target_dim: 0, bijective: false, equivariant: false, note: Some(why.into()) }
    }

    pub fn is_applicable(&self) -> bool {
        self.map.is_some() || self.note.as_deref().is_some_and(|n| n.starts_with("ill-defined"))
    }

    pub fn is_iso(&self) -> bool {
        self.map.is_some() && self.bijective && self.equivariant
    }

    pub fn verdict(&self) -> Verdict {
        if !self.is_applicable() {
            return Verdict::not_applicable(self.name, self.note.clone().unwrap_or_default());
        }
        let v = Verdict::from_bool(self.name, self.is_iso(), || {
            self.note.clone().unwrap_or_else(|| {
                format!("{}→{}: bijective {}, equivariant {}", self.source_dim, self.target_dim, self.bijective, self.equivariant)
            })
        });
        v.with_note(format!("dims {} → {}", self.source_dim, self.target_dim))
    }
}

fn basis(s: &Setting, i: usize) -> Matrix {
    Matrix::column_vector(s.field(), s.h_dim(), SparseVec::unit(i, s.field().one()))
}

/// `M⊗_A H ≅ (M/MA⁺)⊗H`, `m⊗h ↦ [m₀]⊗m₁h`, for `M ∈ M_A^H`; right `H`-linear and colinear.
pub fn hopf_module_trivialization(s: &Setting, m: &HopfModule) -> Result<IsoCheck, ModError> {
    let name = "hopf_module_trivialization";
    let (_, q) = quotient_functor(s, m)?;
    let tp = tensor_over(m.module(), &s.h_as_left_a_module())?;
    let h = s.hopf();
    let f = s.field();
    let (n, hd, nq) = (m.dim(), s.h_dim(), q.dim());
    let rho = ColumnMap::new(m.comodule().coaction());
    let proj = ColumnMap::new(&q.projection);
    let full = build_map(f, &[n, hd], nq * hd, |t| t.apply(0, 1, &rho, &[n, hd]).map(0, &proj).apply(1, 2, h.mult_map(), &[hd]));
    if !full.mul(&tp.relations).is_zero() {
        return Ok(IsoCheck::ill_defined(name, tp.dim(), nq * hd, "ill-defined on M⊗_A H"));
    }
    let map = full.mul(tp.section());
    let mut equivariant = true;
    for i in 0..hd {
        let r = h.mult().mul(&eye(f, hd).kron(&basis(s, i)));
        let src = descend_map(&eye(f, n).kron(&r), tp.section(), &tp.relations, &tp.quotient, 1, 1);
        equivariant &= src.is_some_and(|src| map.mul(&src) == eye(f, nq).kron(&r).mul(&map));
    }
    let co_full = build_map(f, &[n, hd], n * hd * hd, |t| {
        t.apply(0, 1, &rho, &[n, hd]).apply(2, 1, h.comult_map(), &[hd, hd]).permute(&[0, 2, 1, 3]).apply(2, 2, h.mult_map(), &[hd])
    });
    let src_co = descend_map(&co_full, tp.section(), &tp.relations, &tp.quotient, 1, hd);
    equivariant &= src_co.is_some_and(|c| map.kron(&eye(f, hd)).mul(&c) == eye(f, nq).kron(h.comult()).mul(&map));
    Ok(IsoCheck::square(name, map, equivariant))
}

/// `H⊗ᶜᵒCM ≅ H□_C M`, `h⊗m ↦ h₁⊗h₂m`, for `M ∈ _H^C M`; left `H`-colinear.
pub fn cotensor_trivialization(s: &Setting, m: &HopfModule) -> Result<IsoCheck, ModError> {
    let name = "cotensor_trivialization";
    let (_, j) = coinvariant_functor(s, m)?;
    let x = cotensor(&s.h_as_right_c_comodule(), m.comodule())?;
    let h = s.hopf();
    let f = s.field();
    let (n, hd) = (m.dim(), s.h_dim());
    let (emb, act) = (ColumnMap::new(&j.embedding()), ColumnMap::new(m.module().action()));
    let full = build_map(f, &[hd, j.dim()], hd * n, |t| t.map(1, &emb).apply(0, 1, h.comult_map(), &[hd, hd]).apply(1, 2, &act, &[n]));
    let Some(map) = restrict_map(&full, &eye(f, hd * j.dim()), &x, 1, 1) else {
        return Ok(IsoCheck::ill_defined(name, hd * j.dim(), x.dim(), "ill-defined: image leaves H□_C M"));
    };
    let tgt = restrict_map(&h.comult().kron(&eye(f, n)), &x.embedding(), &x, hd, 1);
    let src = h.comult().kron(&eye(f, j.dim()));
    let equivariant = tgt.is_some_and(|tgt| eye(f, hd).kron(&map).mul(&src) == tgt.mul(&map));
    Ok(IsoCheck::square(name, map, equivariant))
}

fn mutually_inverse(name: &'static str, fwd: Matrix, back: &Matrix, equivariant: bool) -> IsoCheck {
    let bijective = fwd.mul(back).is_identity() && back.mul(&fwd).is_identity();
    IsoCheck::checked(name, fwd, bijective, equivariant)
}

/// `U⊗V → U_triv⊗V`, `u⊗v ↦ u₀⊗u₁v`, inverse `u₀⊗S(u₁)v`, for `U ∈ M^H`, `V ∈ _H M^C`;
/// right `C`-colinear from the coaction `u₀⊗v₀⊗u₁·v₁`.
pub fn comodule_untwisting(s: &Setting, u: &ComoduleStr, v: &HopfModule) -> Result<IsoCheck, ModError> {
    v.expect_category(Category::LeftHRightC)?;
    let h = s.hopf();
    let f = s.field();
    let (nu, nv, hd, cd) = (u.dim(), v.dim(), s.h_dim(), s.c_dim());
    let (ru, av) = (ColumnMap::new(u.coaction()), ColumnMap::new(v.module().action()));
    let fwd = build_map(f, &[nu, nv], nu * nv, |t| t.apply(0, 1, &ru, &[nu, hd]).apply(1, 2, &av, &[nv]));
    let back = build_map(f, &[nu, nv], nu * nv, |t| t.apply(0, 1, &ru, &[nu, hd]).map(1, h.antipode_map()).apply(1, 2, &av, &[nv]));
    let src = comodule_tensor(s, u, v.comodule())?;
    let tgt = eye(f, nu).kron(v.comodule().coaction());
    let equivariant = fwd.kron(&eye(f, cd)).mul(src.coaction()) == tgt.mul(&fwd);
    Ok(mutually_inverse("comodule_untwisting", fwd, &back, equivariant))
}

/// `W⊗U_triv → W⊗U`, `w⊗u ↦ u₁w⊗u₀`, inverse `S(u₁)w⊗u₀`, for `W ∈ _H^C M`, `U ∈ M^H`;
/// left `C`-colinear into the coaction `S(u₁)·w₋₁⊗w₀⊗u₀`.
pub fn comodule_untwisting_left(s: &Setting, w: &HopfModule, u: &ComoduleStr) -> Result<IsoCheck, ModError> {
    w.expect_category(Category::LeftHLeftC)?;
    let h = s.hopf();
    let f = s.field();
    let (nw, nu, hd, cd) = (w.dim(), u.dim(), s.h_dim(), s.c_dim());
    let (ru, aw) = (ColumnMap::new(u.coaction()), ColumnMap::new(w.module().action()));
    let fwd = build_map(f, &[nw, nu], nw * nu, |t| t.apply(1, 1, &ru, &[nu, hd]).permute(&[2, 0, 1]).apply(0, 2, &aw, &[nw]));
    let back = build_map(f, &[nw, nu], nw * nu, |t| {
        t.apply(1, 1, &ru, &[nu, hd]).map(2, h.antipode_map()).permute(&[2, 0, 1]).apply(0, 2, &aw, &[nw])
    });
    let tgt = twisted_left_coaction(s, w.comodule(), u)?;
    let src = w.comodule().coaction().kron(&eye(f, nu));
    let equivariant = eye(f, cd).kron(&fwd).mul(&src) == tgt.coaction().mul(&fwd);
    Ok(mutually_inverse("comodule_untwisting_left", fwd, &back, equivariant))
}

/// `V⊗U_triv → V⊗U`, `v⊗u ↦ v₀⊗v₁u`, inverse `v₀⊗S(v₁)u`, for `V ∈ _A M^H`, `U ∈ _H M`;
/// left `A`-linear into the action `a₀v⊗a₁u`.
pub fn module_untwisting(s: &Setting, v: &HopfModule, u: &ModuleStr) -> Result<IsoCheck, ModError> {
    v.expect_category(Category::LeftARightH)?;
    let h = s.hopf();
    let f = s.field();
    let (nv, nu, hd, d) = (v.dim(), u.dim(), s.h_dim(), s.a_dim());
    let (rv, au) = (ColumnMap::new(v.comodule().coaction()), ColumnMap::new(u.action()));
    let fwd = build_map(f, &[nv, nu], nv * nu, |t| t.apply(0, 1, &rv, &[nv, hd]).apply(1, 2, &au, &[nu]));
    let back = build_map(f, &[nv, nu], nv * nu, |t| t.apply(0, 1, &rv, &[nv, hd]).map(1, h.antipode_map()).apply(1, 2, &au, &[nu]));
    let tgt = diagonal_action(s, v.module(), u)?;
    let src = v.module().action().kron(&eye(f, nu));
    let equivariant = fwd.mul(&src) == tgt.action().mul(&eye(f, d).kron(&fwd));
    Ok(mutually_inverse("module_untwisting", fwd, &back, equivariant))
}

/// `U⊗W → U_triv⊗W`, `u⊗w ↦ w₁u⊗w₀`, inverse `S(w₁)u⊗w₀`, for `U ∈ _H M`, `W ∈ M_A^H`;
/// right `A`-linear from the action `S(a₁)u⊗wa₀`.
pub fn module_untwisting_right(s: &Setting, u: &ModuleStr, w: &HopfModule) -> Result<IsoCheck, ModError> {
    w.expect_category(Category::RightARightH)?;
    let h = s.hopf();
    let f = s.field();
    let (nu, nw, hd, d) = (u.dim(), w.dim(), s.h_dim(), s.a_dim());
    let (rw, au) = (ColumnMap::new(w.comodule().coaction()), ColumnMap::new(u.action()));
    let fwd = build_map(f, &[nu, nw], nu * nw, |t| t.apply(1, 1, &rw, &[nw, hd]).permute(&[2, 0, 1]).apply(0, 2, &au, &[nu]));
    let back = build_map(f, &[nu, nw], nu * nw, |t| {
        t.apply(1, 1, &rw, &[nw, hd]).map(2, h.antipode_map()).permute(&[2, 0, 1]).apply(0, 2, &au, &[nu])
    });
    let src = twisted_right_action(s, u, w.module())?;
    let tgt = eye(f, nu).kron(w.module().action());
    let equivariant = fwd.mul(src.action()) == tgt.mul(&fwd.kron(&eye(f, d)));
    Ok(mutually_inverse("module_untwisting_right", fwd, &back, equivariant))
}

/// `U⊗(V□_C H) ≅ (U⊗V)□_C H`, `u⊗v⊗h ↦ u₀⊗v⊗u₁h`, as objects of `M_A^H`.
pub fn tensor_identity(s: &Setting, u: &ComoduleStr, v: &ComoduleStr) -> Result<IsoCheck, ModError> {
    let name = "tensor_identity";
    let h = s.hopf();
    let f = s.field();
    let (psi_v, x) = cotensor_functor(s, v)?;
    let uv = comodule_tensor(s, u, v)?;
    let (psi_uv, y) = cotensor_functor(s, &uv)?;
    let src = hopf_tensor(s, u, &psi_v)?;
    let (nu, nv, hd) = (u.dim(), v.dim(), s.h_dim());
    let ru = ColumnMap::new(u.coaction());
    let full = build_map(f, &[nu, nv, hd], nu * nv * hd, |t| {
        t.apply(0, 1, &ru, &[nu, hd]).permute(&[0, 2, 1, 3]).apply(2, 2, h.mult_map(), &[hd])
    });
    let Some(map) = restrict_map(&full, &eye(f, nu).kron(&x.embedding()), &y, 1, 1) else {
        return Ok(IsoCheck::ill_defined(name, nu * x.dim(), y.dim(), "ill-defined: image leaves (U⊗V)□_C H"));
    };
    let equivariant = is_hopf_map(&map, &src, &psi_uv);
    Ok(IsoCheck::square(name, map, equivariant))
}

/// `V□_C(W⊗U) ≅ (U⊗V)□_C W` by the cyclic permutation `v⊗w⊗u ↦ u⊗v⊗w`.
pub fn cotensor_exchange(s: &Setting, v: &ComoduleStr, w: &ComoduleStr, u: &ComoduleStr) -> Result<IsoCheck, ModError> {
    let name = "cotensor_exchange";
    let wu = twisted_left_coaction(s, w, u)?;
    let src = cotensor(v, &wu)?;
    let tgt = cotensor(&comodule_tensor(s, u, v)?, w)?;
    let perm = exactla::permutation_matrix(s.field(), &[v.dim(), w.dim(), u.dim()], &[2, 0, 1]);
    let Some(map) = restrict_map(&perm, &src.embedding(), &tgt, 1, 1) else {
        return Ok(IsoCheck::ill_defined(name, src.dim(), tgt.dim(), "ill-defined: permutation leaves (U⊗V)□_C W"));
    };
    Ok(IsoCheck::square(name, map, true))
}

/// The extra structure that makes [`cotensor_exchange_untwisted`] or
/// [`tensor_exchange_untwisted`] applicable.
pub enum Decoration<'a> {
    /// The right-hand factor is a relative Hopf module.
    Right(&'a HopfModule),
    /// The middle factor is a relative Hopf module.
    Middle(&'a HopfModule),
    None,
}

/// `U⊗(V□_C W) ≅ (U⊗V)□_C W` for `W ∈ _H^C M` (`u⊗v⊗w ↦ u₀⊗v⊗u₁w`) or `V ∈ _H M^C`
/// (`u⊗v⊗w ↦ u₀⊗S(u₁)v⊗w`).
pub fn cotensor_exchange_untwisted(
    s: &Setting,
    u: &ComoduleStr,
    v: &ComoduleStr,
    w: &ComoduleStr,
    decoration: Decoration,
) -> Result<IsoCheck, ModError> {
    let name = "cotensor_exchange_untwisted";
    let h = s.hopf();
    let f = s.field();
    let (nu, nv, nw, hd) = (u.dim(), v.dim(), w.dim(), s.h_dim());
    let ru = ColumnMap::new(u.coaction());
    let full = match decoration {
        Decoration::Right(wm) => {
            wm.expect_category(Category::LeftHLeftC)?;
            if wm.comodule() != w {
                return Err(ModError::Shape("decoration does not carry W's coaction".into()));
            }
            let aw = ColumnMap::new(wm.module().action());
            build_map(f, &[nu, nv, nw], nu * nv * nw, |t| {
                t.apply(0, 1, &ru, &[nu, hd]).permute(&[0, 2, 1, 3]).apply(2, 2, &aw, &[nw])
            })
        }
        Decoration::Middle(vm) => {
            vm.expect_category(Category::LeftHRightC)?;
            if vm.comodule() != v {
                return Err(ModError::Shape("decoration does not carry V's coaction".into()));
            }
            let av = ColumnMap::new(vm.module().action());
            build_map(f, &[nu, nv, nw], nu * nv * nw, |t| {
                t.apply(0, 1, &ru, &[nu, hd]).map(1, h.antipode_map()).apply(1, 2, &av, &[nv])
            })
        }
        Decoration::None => return Ok(IsoCheck::not_applicable(name, "needs an H-action on V or W")),
    };
    let src = cotensor(v, w)?;
    let tgt = cotensor(&comodule_tensor(s, u, v)?, w)?;
    let Some(map) = restrict_map(&full, &eye(f, nu).kron(&src.embedding()), &tgt, 1, 1) else {
        return Ok(IsoCheck::ill_defined(name, nu * src.dim(), tgt.dim(), "ill-defined: image leaves (U⊗V)□_C W"));
    };
    Ok(IsoCheck::square(name, map, true))
}

fn descend_or_none(full: &Matrix, src: &TensorProduct, dst: &TensorProduct, post: usize) -> Option<Matrix> {
    descend_map(full, src.section(), &src.relations, &dst.quotient, 1, post)
}

/// `(U⊗W)⊗_A V ≅ W⊗_A(V⊗U)`, `(u⊗w)⊗v ↦ w⊗(v⊗u)`, for `U ∈ _H M`, `V ∈ _A M`, `W ∈ M_A`.
pub fn tensor_exchange(s: &Setting, u: &ModuleStr, v: &ModuleStr, w: &ModuleStr) -> Result<IsoCheck, ModError> {
    let name = "tensor_exchange";
    let src = tensor_over(&twisted_right_action(s, u, w)?, v)?;
    let dst = tensor_over(w, &diagonal_action(s, v, u)?)?;
    let perm = exactla::permutation_matrix(s.field(), &[u.dim(), w.dim(), v.dim()], &[1, 2, 0]);
    match descend_or_none(&perm, &src, &dst, 1) {
        Some(map) => Ok(IsoCheck::square(name, map, true)),
        None => Ok(IsoCheck::ill_defined(name, src.dim(), dst.dim(), "ill-defined on (U⊗W)⊗_A V")),
    }
}

/// `(U⊗W)⊗_A V ≅ (W⊗_A V)⊗U` for `W ∈ M_A^H` (`(u⊗w)⊗v ↦ (w₀⊗v)⊗w₁u`), or
/// `W⊗_A(V⊗U) ≅ (W⊗_A V)⊗U` for `V ∈ _A M^H` (`w⊗v⊗u ↦ (w⊗v₀)⊗S(v₁)u`).
pub fn tensor_exchange_untwisted(
    s: &Setting,
    u: &ModuleStr,
    v: &ModuleStr,
    w: &ModuleStr,
    decoration: Decoration,
) -> Result<IsoCheck, ModError> {
    let name = "tensor_exchange_untwisted";
    let h = s.hopf();
    let f = s.field();
    let (nu, nv, nw, hd) = (u.dim(), v.dim(), w.dim(), s.h_dim());
    let plain = tensor_over(w, v)?;
    let au = ColumnMap::new(u.action());
    let (src, full) = match decoration {
        Decoration::Right(wm) => {
            wm.expect_category(Category::RightARightH)?;
            if wm.module() != w {
                return Err(ModError::Shape("decoration does not carry W's action".into()));
            }
            let rw = ColumnMap::new(wm.comodule().coaction());
            let full = build_map(f, &[nu, nw, nv], nw * nv * nu, |t| {
                t.apply(1, 1, &rw, &[nw, hd]).permute(&[2, 0, 1, 3]).apply(0, 2, &au, &[nu]).permute(&[1, 2, 0])
            });
            (tensor_over(&twisted_right_action(s, u, w)?, v)?, full)
        }
        Decoration::Middle(vm) => {
            vm.expect_category(Category::LeftARightH)?;
            if vm.module() != v {
                return Err(ModError::Shape("decoration does not carry V's action".into()));
            }
            let rv = ColumnMap::new(vm.comodule().coaction());
            let full = build_map(f, &[nw, nv, nu], nw * nv * nu, |t| {
                t.apply(1, 1, &rv, &[nv, hd]).map(2, h.antipode_map()).apply(2, 2, &au, &[nu])
            });
            (tensor_over(w, &diagonal_action(s, v, u)?)?, full)
        }
        Decoration::None => return Ok(IsoCheck::not_applicable(name, "needs an H-coaction on V or W")),
    };
    match descend_or_none(&full, &src, &plain, nu) {
        Some(map) => Ok(IsoCheck::square(name, map, true)),
        None => Ok(IsoCheck::ill_defined(name, src.dim(), plain.dim() * nu, "ill-defined on the source tensor product")),
    }
}

/// `(V□_C H)⊗_A W → V□_C(H⊗_A W)` induced by the inclusion. `hypothesis` records whether the
/// flatness condition under which it is an isomorphism is known to hold; without it the
/// comparison is not applicable.
pub fn cotensor_tensor_interchange(s: &Setting, v: &ComoduleStr, w: &ModuleStr, hypothesis: bool) -> Result<IsoCheck, ModError> {
    let name = "cotensor_tensor_interchange";
    if !hypothesis {
        return Ok(IsoCheck::not_applicable(name, "H is not known to be flat over A"));
    }
    let f = s.field();
    let (psi, x) = cotensor_functor(s, v)?;
    let src = tensor_over(psi.module(), w)?;
    let (phi, t) = induction_functor(s, w)?;
    let y = cotensor(v, phi.comodule())?;
    let full = eye(f, v.dim()).kron(t.projection()).mul(&x.embedding().kron(&eye(f, w.dim())));
    if !full.mul(&src.relations).is_zero() {
        return Ok(IsoCheck::ill_defined(name, src.dim(), y.dim(), "ill-defined on (V□_C H)⊗_A W"));
    }
    let Some(map) = restrict_map(&full, src.section(), &y, 1, 1) else {
        return Ok(IsoCheck::ill_defined(name, src.dim(), y.dim(), "ill-defined: image leaves V□_C(H⊗_A W)"));
    };
    Ok(IsoCheck::square(name, map, true))
}

/// `(V⊗H)/A⁺(V⊗H) ≅ H⊗_A V`, `[v⊗h] ↦ [S⁻¹h⊗v]`, for `V ∈ _A M`; right `D`-colinear when
/// `H⊗_A V` coacts by `h⊗v ↦ h₂⊗v⊗π′(Sh₁)`.
pub fn induced_side_switch(s: &Setting, v: &ModuleStr) -> Result<IsoCheck, ModError> {
    let name = "induced_side_switch";
    let h = s.hopf();
    let f = s.field();
    let (nv, hd) = (v.dim(), s.h_dim());
    let m = HopfModule::new(
        s,
        Category::LeftARightH,
        diagonal_action(s, v, &s.h_regular_module(Side::Left))?,
        ComoduleStr::from_parts(Side::Right, hd, eye(f, nv).kron(h.comult())),
    )?;
    let (phi, q) = left_quotient_functor(s, &m)?;
    let tp = tensor_over(&s.h_as_right_a_module(), v)?;
    let d = s.right_factor();
    let dd = d.dim();
    let xi = build_map(f, &[nv, hd], hd * nv, |t| t.map(1, h.antipode_inv_map()).permute(&[1, 0]));
    let full = tp.projection().mul(&xi);
    if !full.mul(&crate::util::kernel_basis(&q)).is_zero() {
        return Ok(IsoCheck::ill_defined(name, q.dim(), tp.dim(), "ill-defined on (V⊗H)/A⁺(V⊗H)"));
    }
    let map = full.mul(&q.section);
    let proj_d = ColumnMap::new(d.projection());
    let co_full = build_map(f, &[hd, nv], hd * nv * dd, |t| {
        t.apply(0, 1, h.comult_map(), &[hd, hd]).map(0, h.antipode_map()).map(0, &proj_d).permute(&[1, 2, 0])
    });
    let equivariant = match descend_map(&co_full, tp.section(), &tp.relations, &tp.quotient, 1, dd) {
        Some(co) => is_comodule_map(&map, &phi, &ComoduleStr::from_parts(Side::Right, dd, co)),
        None => false,
    };
    Ok(IsoCheck::square(name, map, equivariant))
}

/// `(H⊗V)^coC ≅ V□_C H`, `h⊗v ↦ v⊗Sh`, for `V ∈ M^C`; left `B`-linear when `V□_C H` is acted
/// on by `b·(v⊗h) = v⊗hS(b)`.
pub fn coinduced_side_switch(s: &Setting, v: &ComoduleStr) -> Result<IsoCheck, ModError> {
    let name = "coinduced_side_switch";
    let h = s.hopf();
    let f = s.field();
    let (nv, hd) = (v.dim(), s.h_dim());
    let n = HopfModule::new(
        s,
        Category::LeftHRightC,
        ModuleStr::from_parts(Side::Left, hd, h.mult().kron(&eye(f, nv))),
        comodule_tensor(s, &s.h_regular_comodule(Side::Right), v)?,
    )?;
    let (src_module, j) = right_coinvariant_functor(s, &n)?;
    let y = cotensor(v, &s.h_as_left_c_comodule())?;
    let full = build_map(f, &[hd, nv], nv * hd, |t| t.map(0, h.antipode_map()).permute(&[1, 0]));
    let Some(map) = restrict_map(&full, &j.embedding(), &y, 1, 1) else {
        return Ok(IsoCheck::ill_defined(name, j.dim(), y.dim(), "ill-defined: image leaves V□_C H"));
    };
    let b = s.co_opposite().subalgebra();
    let incl = ColumnMap::new(&b.inclusion());
    let act_full = build_map(f, &[b.dim(), nv, hd], nv * hd, |t| {
        t.map(0, &incl).map(0, h.antipode_map()).permute(&[1, 2, 0]).apply(1, 2, h.mult_map(), &[hd])
    });
    let equivariant = match restrict_map(&act_full, &eye(f, b.dim()).kron(&y.embedding()), &y, 1, 1) {
        Some(act) => is_module_map(&map, &src_module, &ModuleStr::from_parts(Side::Left, b.dim(), act)),
        None => false,
    };
    Ok(IsoCheck::square(name, map, equivariant))
}

/// `T = H⊗_A H` as a right `H`-Hopf module: `T^coH` has dimension `dim C` and `T ≅ T^coH⊗H`.
pub fn fundamental_theorem_instance(s: &Setting) -> Result<IsoCheck, ModError> {
    let name = "fundamental_theorem_instance";
    let h = s.hopf();
    let f = s.field();
    let hd = s.h_dim();
    let tp = tensor_over(&s.h_as_right_a_module(), &s.h_as_left_a_module())?;
    // the coaction is the tensor product of the coactions on the two legs
    let diagonal = build_map(f, &[hd, hd], hd * hd * hd, |t| {
        t.apply(0, 1, h.comult_map(), &[hd, hd]).apply(2, 1, h.comult_map(), &[hd, hd]).permute(&[0, 2, 1, 3]).apply(2, 2, h.mult_map(), &[hd])
    });
    let coaction = descend_map(&diagonal, tp.section(), &tp.relations, &tp.quotient, 1, hd)
        .ok_or(ModError::NotStable("coaction"))?;
    let t = ComoduleStr::new(h.coalgebra(), Side::Right, coaction)?;
    let coinv: Subspace = t.coinvariants(&h.one());
    // T^coH⊗H → T, x⊗h ↦ x·h with H acting on the right leg
    let right = descend_map(&eye(f, hd).kron(h.mult()), &padded(tp.section(), 1, hd), &padded(&tp.relations, 1, hd), &tp.quotient, 1, 1)
        .ok_or(ModError::NotStable("action"))?;
    let map = right.mul(&coinv.embedding().kron(&eye(f, hd)));
    let mut check = IsoCheck::square(name, map, coinv.dim() == s.c_dim() && tp.dim() == s.c_dim() * hd);
    check.note = Some(format!("dim T^coH = {}, dim C = {}", coinv.dim(), s.c_dim()));
    Ok(check)
}
