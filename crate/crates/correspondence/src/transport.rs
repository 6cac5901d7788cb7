//! Identities relating the two sides of the correspondence through the antipode.

use exactla::{kernel, permutation_matrix};
use hopfcore::FiniteHopfAlgebra;

use crate::factor::{coinvariants, left_ideal_generated, right_ideal_generated, FactorCoalgebra};
use crate::report::{subspace_equality, Verdict};
use crate::subalgebra::{check_coideal_subalgebra, CoidealSubalgebra, Side};

/// `A ⊆ ᶜᵒCH ⇔ A⁺ ⊆ Ker π` and `B ⊆ H^coC ⇔ B⁺ ⊆ Ker π` for a right coideal subalgebra `A`,
/// the left coideal subalgebra `B = S(A)` and a left module factor coalgebra `C`. Both
/// directions are evaluated independently.
pub fn membership_criterion(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra, c: &FactorCoalgebra) -> Verdict {
    let check = "membership_criterion";
    let b = a.space().map(h.antipode());
    let b_aug = b.intersection(&kernel(h.counit()));
    let cases = [
        ("right", a.space(), a.augmentation(), coinvariants(h, c, Side::Right)),
        ("left", &b, &b_aug, coinvariants(h, c, Side::Left)),
    ];
    let mut held = Vec::new();
    for (side, space, aug, coinv) in cases {
        let inside = space.is_subspace_of(&coinv);
        let killed = aug.is_subspace_of(c.ideal());
        if inside != killed {
            return Verdict::fail(check, format!("{side}: inclusion in coinvariants {inside}, augmentation in kernel {killed}"));
        }
        held.push(format!("{side}={inside}"));
    }
    Verdict::pass(check).with_note(held.join(", "))
}

/// `S(A)` is a left coideal subalgebra and `A⁺H = S(A)⁺H`; mirrored for `B = S(A)`:
/// `S(B)` is a right coideal subalgebra and `HB⁺ = HS(B)⁺`.
pub fn antipode_augmentation(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> Verdict {
    let check = "antipode_augmentation";
    let b = match check_coideal_subalgebra(h, a.space().map(h.antipode()), Side::Left) {
        Ok(b) => b,
        Err(e) => return Verdict::fail(check, format!("S(A): {e}")),
    };
    let sb = match check_coideal_subalgebra(h, b.space().map(h.antipode()), Side::Right) {
        Ok(sb) => sb,
        Err(e) => return Verdict::fail(check, format!("S(B): {e}")),
    };
    let right = subspace_equality(check, h, &right_ideal_generated(h, a.augmentation()), &right_ideal_generated(h, b.augmentation()));
    if right.is_fail() {
        return right;
    }
    subspace_equality(check, h, &left_ideal_generated(h, b.augmentation()), &left_ideal_generated(h, sb.augmentation()))
}

/// `A⁺H = S(HA⁺)` and, for `B = S(A)`, `HB⁺ = S(B⁺H)`.
pub fn antipode_transport_ideal(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> Verdict {
    let check = "antipode_transport_ideal";
    let s = h.antipode();
    let lhs = right_ideal_generated(h, a.augmentation());
    let rhs = left_ideal_generated(h, a.augmentation()).map(s);
    let v = subspace_equality(check, h, &lhs, &rhs);
    if v.is_fail() {
        return v;
    }
    let b_aug = a.augmentation().map(s);
    subspace_equality(check, h, &left_ideal_generated(h, &b_aug), &right_ideal_generated(h, &b_aug).map(s))
}

/// For a one-sided ideal coideal `I`, the preimage `S⁻¹(I)` is an ideal coideal of the other
/// side with the same coinvariants on the side where `I` is regarded.
pub fn antipode_preimage(h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> Verdict {
    let check = "antipode_preimage";
    let pre = c.ideal().preimage(h.antipode());
    let other = match FactorCoalgebra::new(h, pre, c.side().flip()) {
        Ok(d) => d,
        Err(e) => return Verdict::fail(check, format!("S⁻¹(I): {e}")),
    };
    // left ideal: compare H^co(H/I); right ideal: compare ᶜᵒ(H/J)H
    let side = c.side();
    subspace_equality(check, h, &coinvariants(h, c, side), &coinvariants(h, &other, side))
}

/// `ᶜᵒCH = S(H^coC)` for a left module factor coalgebra, `H^coD = S(ᶜᵒDH)` for a right one.
pub fn antipode_transport_coinvariants(h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> Verdict {
    let check = "antipode_transport_coinvariants";
    let (target, source) = match c.side() {
        Side::Left => (Side::Right, Side::Left),
        Side::Right => (Side::Left, Side::Right),
    };
    let image = coinvariants(h, c, source).map(h.antipode());
    subspace_equality(check, h, &coinvariants(h, c, target), &image)
}

/// `S̄ = π_D S σ_C : C → D` for `C = H/HA⁺`, `D = H/A⁺H` is well defined, bijective, counital
/// and anti-comultiplicative: `Δ_D S̄ = (S̄⊗S̄)τΔ_C`.
pub fn side_switch_coalgebra(h: &FiniteHopfAlgebra, c: &FactorCoalgebra, d: &FactorCoalgebra) -> Verdict {
    let check = "side_switch_coalgebra";
    let s = h.antipode();
    if let Some(v) = c.ideal().map(s).first_outside(d.ideal()) {
        return Verdict::fail(check, format!("S maps {} outside A⁺H", h.format_vector(&v)));
    }
    let bar = d.projection().mul(s).mul(c.section());
    if bar.nrows() != bar.ncols() || bar.inverse().is_none() {
        return Verdict::fail(check, format!("induced map {}x{} is not invertible", bar.nrows(), bar.ncols()));
    }
    let dc = c.dim();
    let tau = permutation_matrix(h.field(), &[dc, dc], &[1, 0]);
    let lhs = d.coalgebra().comult().mul(&bar);
    let rhs = bar.kron(&bar).mul(&tau).mul(c.coalgebra().comult());
    if let Some((i, j)) = lhs.first_difference(&rhs) {
        return Verdict::fail(check, format!("comultiplication differs at ({i}, {j})"));
    }
    if d.coalgebra().counit().mul(&bar) != *c.coalgebra().counit() {
        return Verdict::fail(check, "counit not preserved");
    }
    Verdict::pass(check)
}

/// `S` maps `B = H^coC` onto `A = ᶜᵒCH` and reverses products of basis elements.
pub fn side_switch_algebra(h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> Verdict {
    let check = "side_switch_algebra";
    let s = h.antipode();
    let b = coinvariants(h, c, Side::Left);
    let a = coinvariants(h, c, Side::Right);
    let sb = b.map(s);
    if sb.dim() != b.dim() {
        return Verdict::fail(check, "S is not injective on B");
    }
    let onto = subspace_equality(check, h, &sb, &a);
    if onto.is_fail() {
        return onto;
    }
    for x in b.basis_vectors() {
        for y in b.basis_vectors() {
            let lhs = s.apply(&h.product(x, y));
            let rhs = h.product(&s.apply(y), &s.apply(x));
            if lhs != rhs {
                return Verdict::fail(check, format!("S({}·{}) is not reversed", h.format_vector(x), h.format_vector(y)));
            }
        }
    }
    Verdict::pass(check)
}
