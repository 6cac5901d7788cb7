//! Both directions of the correspondence on one instance, with every identity and
//! homological implication that applies to it.

use hopfcore::FiniteHopfAlgebra;

use crate::dominion::{dominion, is_dominion_factor_coalgebra};
use crate::factor::{coinvariant_subalgebra, coinvariants, factor_by_subalgebra, FactorCoalgebra};
use crate::report::{subspace_equality, CorrespondenceReport, FlatnessOracle, Verdict};
use crate::subalgebra::{check_coideal_subalgebra, CoidealSubalgebra, Side};
use crate::transport::{
    antipode_augmentation, antipode_preimage, antipode_transport_coinvariants, antipode_transport_ideal,
    membership_criterion, side_switch_algebra, side_switch_coalgebra,
};

fn renamed(mut v: Verdict, check: &str) -> Verdict {
    v.check = check.into();
    v
}

/// Start from a right coideal subalgebra `A`: `C = H/HA⁺`, `A′ = ᶜᵒCH`, `C′ = H/HA′⁺`.
pub fn roundtrip_from_subalgebra(
    h: &FiniteHopfAlgebra,
    a: &CoidealSubalgebra,
    oracle: Option<&dyn FlatnessOracle>,
    instance: impl Into<String>,
) -> CorrespondenceReport {
    let mut r = CorrespondenceReport::new(instance);
    if a.side() != Side::Right {
        r.push(Verdict::fail("coideal_subalgebra", "expected a right coideal subalgebra"));
        return r;
    }
    match check_coideal_subalgebra(h, a.space().clone(), Side::Right) {
        Ok(_) => r.push(Verdict::pass("coideal_subalgebra")),
        Err(e) => {
            r.push(Verdict::fail("coideal_subalgebra", e.to_string()));
            return r;
        }
    }
    let (c, d) = match (factor_by_subalgebra(h, a, Side::Left), factor_by_subalgebra(h, a, Side::Right)) {
        (Ok(c), Ok(d)) => (c, d),
        (Err(e), _) | (_, Err(e)) => {
            r.push(Verdict::fail("factor_coalgebra", e.to_string()));
            return r;
        }
    };
    r.push(Verdict::pass("factor_coalgebra").with_note(format!("dim C = {}", c.dim())));
    let a2 = match coinvariant_subalgebra(h, &c, Side::Right) {
        Ok(a2) => a2,
        Err(e) => {
            r.push(Verdict::fail("coinvariants_coideal_subalgebra", e.to_string()));
            return r;
        }
    };
    r.push(Verdict::pass("coinvariants_coideal_subalgebra"));

    let dom = dominion(h, a);
    r.push(Verdict::from_bool("dominion_contains_subalgebra", a.space().is_subspace_of(&dom), || {
        let v = a.space().first_outside(&dom).expect("not contained");
        format!("{} not in dominion", h.format_vector(&v))
    }));
    r.push(subspace_equality("dominion_equals_coinvariants", h, &dom, a2.space()));

    r.push(membership_criterion(h, a, &c));
    r.push(renamed(membership_criterion(h, a, &FactorCoalgebra::trivial(h, Side::Left)), "membership_criterion_trivial"));
    r.push(renamed(membership_criterion(h, a, &FactorCoalgebra::identity(h, Side::Left)), "membership_criterion_identity"));
    r.push(antipode_augmentation(h, a));
    r.push(antipode_transport_ideal(h, a));
    r.push(antipode_preimage(h, &c));
    r.push(renamed(antipode_preimage(h, &d), "antipode_preimage_right"));
    r.push(antipode_transport_coinvariants(h, &c));
    r.push(renamed(antipode_transport_coinvariants(h, &d), "antipode_transport_coinvariants_right"));
    r.push(side_switch_coalgebra(h, &c, &d));
    r.push(side_switch_algebra(h, &c));

    let same_a = a2.space() == a.space();
    let c2 = factor_by_subalgebra(h, &a2, Side::Left);
    let same_c = matches!(&c2, Ok(c2) if c2.ideal() == c.ideal());
    r.push(Verdict::from_bool("coalgebra_roundtrip", same_c, || "H/HA′⁺ differs from H/HA⁺".into()));
    let dom_factor = is_dominion_factor_coalgebra(h, &c);
    r.push(Verdict::from_bool("dominion_factor_coalgebra", dom_factor, || "H/HA⁺ is not a dominion factor coalgebra".into()));

    let Some(oracle) = oracle else {
        r.push(if same_a {
            Verdict::pass("subalgebra_roundtrip")
        } else {
            Verdict::not_applicable("subalgebra_roundtrip", "A is not a dominion subalgebra; no flatness data")
        });
        return r;
    };
    let mf = oracle.module_flags(h, a);
    let cf = oracle.comodule_flags(h, &c);
    let mf2 = if same_a { mf } else { oracle.module_flags(h, &a2) };
    let df = oracle.comodule_flags(h, &d);
    r.module_flags = Some(mf);
    r.comodule_flags = Some(cf);

    let hypothesis = mf.left_generator || mf.right_generator;
    r.push(match (same_a, hypothesis) {
        (true, _) => Verdict::pass("subalgebra_roundtrip"),
        (false, true) => Verdict::fail("subalgebra_roundtrip", "H is a generator over A but A′ ≠ A"),
        (false, false) => Verdict::not_applicable("subalgebra_roundtrip", "A is not a dominion subalgebra"),
    });
    r.push(Verdict::implication("generator_forces_dominion", hypothesis, same_a));

    r.push(Verdict::implication("projective_to_cogenerator_left", mf.left_projective, cf.left_cogenerator));
    r.push(Verdict::implication("generator_to_injective_left", mf.left_generator, cf.left_injective));
    r.push(Verdict::implication("projective_to_cogenerator_right", mf.right_projective, cf.right_cogenerator));
    r.push(Verdict::implication("generator_to_injective_right", mf.right_generator, cf.right_injective));
    push_comodule_to_module(&mut r, &cf, &mf2);

    r.push(Verdict::implication("faithfully_flat_left", mf.left_faithfully_flat(), same_a && cf.left_faithfully_coflat()));
    r.push(Verdict::implication("faithfully_flat_right", mf.right_faithfully_flat(), same_a && cf.right_faithfully_coflat()));
    let a_from_d = coinvariants(h, &d, Side::Right) == *a.space();
    r.push(Verdict::implication(
        "faithfully_flat_right_side_switch",
        mf.right_faithfully_flat(),
        a_from_d && df.left_faithfully_coflat(),
    ));
    r.push(Verdict::implication("flat_dominion_embedding_left", same_a && mf.left_projective, cf.left_cogenerator));
    r.push(Verdict::implication("flat_dominion_embedding_right", same_a && mf.right_projective, cf.right_cogenerator));
    r.push(Verdict::implication("generator_dominion_coflat_left", mf.left_generator, dom_factor && cf.left_injective));
    r.push(Verdict::implication("generator_dominion_coflat_right", mf.right_generator, dom_factor && cf.right_injective));
    r
}

fn push_comodule_to_module(r: &mut CorrespondenceReport, cf: &crate::ComoduleFlags, mf: &crate::ModuleFlags) {
    r.push(Verdict::implication("injective_to_generator_right", cf.right_injective, mf.right_generator));
    r.push(Verdict::implication("cogenerator_to_projective_right", cf.right_cogenerator, mf.right_projective));
    r.push(Verdict::implication("injective_to_generator_left", cf.left_injective, mf.left_generator));
    r.push(Verdict::implication("cogenerator_to_projective_left", cf.left_cogenerator, mf.left_projective));
}

/// Start from a left module factor coalgebra `C`: `A = ᶜᵒCH`, `C′ = H/HA⁺`.
pub fn roundtrip_from_coalgebra(
    h: &FiniteHopfAlgebra,
    c: &FactorCoalgebra,
    oracle: Option<&dyn FlatnessOracle>,
    instance: impl Into<String>,
) -> CorrespondenceReport {
    let mut r = CorrespondenceReport::new(instance);
    if c.side() != Side::Left {
        r.push(Verdict::fail("factor_coalgebra", "expected a left module factor coalgebra"));
        return r;
    }
    match FactorCoalgebra::new(h, c.ideal().clone(), Side::Left) {
        Ok(_) => r.push(Verdict::pass("factor_coalgebra").with_note(format!("dim C = {}", c.dim()))),
        Err(e) => {
            r.push(Verdict::fail("factor_coalgebra", e.to_string()));
            return r;
        }
    }
    let a = match coinvariant_subalgebra(h, c, Side::Right) {
        Ok(a) => a,
        Err(e) => {
            r.push(Verdict::fail("coinvariants_coideal_subalgebra", e.to_string()));
            return r;
        }
    };
    r.push(Verdict::pass("coinvariants_coideal_subalgebra"));
    r.push(membership_criterion(h, &a, c));
    r.push(antipode_preimage(h, c));
    r.push(antipode_transport_coinvariants(h, c));
    r.push(side_switch_algebra(h, c));
    r.push(subspace_equality("coinvariants_are_dominion", h, &dominion(h, &a), a.space()));

    let c2 = factor_by_subalgebra(h, &a, Side::Left);
    let same_c = matches!(&c2, Ok(c2) if c2.ideal() == c.ideal());
    let dom_factor = is_dominion_factor_coalgebra(h, c);
    r.push(Verdict::from_bool("dominion_factor_characterization", dom_factor == same_c, || {
        format!("dominion factor coalgebra {dom_factor}, C = H/HA⁺ {same_c}")
    }));

    let Some(oracle) = oracle else {
        r.push(if same_c {
            Verdict::pass("coalgebra_roundtrip")
        } else {
            Verdict::not_applicable("coalgebra_roundtrip", "C is not a dominion factor coalgebra; no coflatness data")
        });
        return r;
    };
    let cf = oracle.comodule_flags(h, c);
    let mf = oracle.module_flags(h, &a);
    r.module_flags = Some(mf);
    r.comodule_flags = Some(cf);

    let hypothesis = cf.left_cogenerator || cf.right_cogenerator;
    r.push(match (same_c, hypothesis) {
        (true, _) => Verdict::pass("coalgebra_roundtrip"),
        (false, true) => Verdict::fail("coalgebra_roundtrip", "H is a cogenerator over C but H/HA⁺ ≠ C"),
        (false, false) => Verdict::not_applicable("coalgebra_roundtrip", "C is not a dominion factor coalgebra"),
    });
    push_comodule_to_module(&mut r, &cf, &mf);
    r.push(Verdict::implication("faithfully_coflat_right", cf.right_faithfully_coflat(), same_c && mf.right_faithfully_flat()));
    r.push(Verdict::implication("faithfully_coflat_left", cf.left_faithfully_coflat(), same_c && mf.left_faithfully_flat()));
    r.push(Verdict::implication("embedding_gives_flat_right", cf.right_cogenerator, same_c && mf.right_projective));
    r.push(Verdict::implication("embedding_gives_flat_left", cf.left_cogenerator, same_c && mf.left_projective));
    r.push(Verdict::implication("dominion_coflat_generator_left", dom_factor && cf.left_injective, mf.left_generator));
    r.push(Verdict::implication("dominion_coflat_generator_right", dom_factor && cf.right_injective, mf.right_generator));
    r
}
