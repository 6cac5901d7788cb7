//! Injectivity, cogenerators and cosemisimplicity for finite-dimensional comodules.

use correspondence::Side;
use exactla::{kernel, Matrix, MatrixSystem, Term};
use hopfcore::Coalgebra;
use hopfmod::{comodule_homs, ComoduleStr};

use crate::modules::is_semisimple;
use crate::util::eye;

/// `V⊗C` (right) or `C⊗V` (left) with the coaction of the `C` factor; the structure map of
/// `V` lands in it.
pub fn cofree_envelope(coalg: &Coalgebra, v: &ComoduleStr) -> ComoduleStr {
    let id = eye(coalg.field(), v.dim());
    let coaction = match v.side() {
        Side::Right => id.kron(coalg.comult()),
        Side::Left => coalg.comult().kron(&id),
    };
    ComoduleStr::new(coalg, v.side(), coaction).expect("cofree comodule")
}

fn comodule_pads(side: Side, c: usize) -> (usize, usize) {
    match side {
        Side::Right => (1, c),
        Side::Left => (c, 1),
    }
}

/// A colinear retraction of the structure map `V → V⊗C`, if one exists.
pub fn coaction_retraction(coalg: &Coalgebra, v: &ComoduleStr) -> Option<Matrix> {
    let f = coalg.field();
    let env = cofree_envelope(coalg, v);
    let (pre, post) = comodule_pads(v.side(), coalg.dim());
    let mut sys = MatrixSystem::new(f, v.dim(), env.dim());
    sys.equation(&[Term::left(v.coaction()), Term::right(env.coaction()).tensored(pre, post).negated()], None);
    sys.equation(&[Term::right(v.coaction())], Some(&eye(f, v.dim())));
    sys.solve()
}

/// `V` is injective iff it is a direct summand of a cofree comodule, iff its structure map
/// has a colinear retraction.
pub fn is_injective_comodule(coalg: &Coalgebra, v: &ComoduleStr) -> bool {
    v.dim() == 0 || coaction_retraction(coalg, v).is_some()
}

/// `V` cogenerates iff `C` embeds in some `V^r`; such an embedding splits because `C` is
/// injective, and it exists iff the colinear maps `C → V` have no common kernel.
pub fn is_cogenerator(coalg: &Coalgebra, v: &ComoduleStr) -> bool {
    let homs = comodule_homs(&ComoduleStr::regular(coalg, v.side()), v);
    let Some(first) = homs.first() else { return false };
    let stacked = homs[1..].iter().fold(first.clone(), |acc, m| acc.vstack(m));
    kernel(&stacked).is_zero()
}

/// `C` is cosemisimple iff `C*` is semisimple.
pub fn is_cosemisimple(coalg: &Coalgebra) -> bool {
    is_semisimple(&coalg.dual_algebra())
}
