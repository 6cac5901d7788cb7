//! Tri-state verdicts and the per-instance correspondence report.

use exactla::{SparseVec, Subspace};
use hopfcore::FiniteHopfAlgebra;
use serde::Serialize;

use crate::factor::FactorCoalgebra;
use crate::subalgebra::CoidealSubalgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    pub fn pass(check: impl Into<String>) -> Self {
        Verdict { check: check.into(), status: Status::Pass, witness: None, note: None }
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Verdict { check: check.into(), status: Status::Fail, witness: Some(witness.into()), note: None }
    }

    pub fn not_applicable(check: impl Into<String>, note: impl Into<String>) -> Self {
        Verdict { check: check.into(), status: Status::NotApplicable, witness: None, note: Some(note.into()) }
    }

    pub fn from_bool(check: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::pass(check)
        } else {
            Verdict::fail(check, witness())
        }
    }

    /// `premise ⇒ conclusion` on one instance; a false premise is not applicable.
    pub fn implication(check: impl Into<String>, premise: bool, conclusion: bool) -> Self {
        match (premise, conclusion) {
            (false, _) => Verdict::not_applicable(check, "premise does not hold"),
            (true, true) => Verdict::pass(check),
            (true, false) => Verdict::fail(check, "premise holds, conclusion does not"),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Exact subspace equality, with a basis vector of one side missing from the other as witness.
pub fn subspace_equality(check: &str, h: &FiniteHopfAlgebra, lhs: &Subspace, rhs: &Subspace) -> Verdict {
    let missing = |v: SparseVec, from: &str| format!("{} not in {from}", h.format_vector(&v));
    match (lhs.first_outside(rhs), rhs.first_outside(lhs)) {
        (None, None) => Verdict::pass(check),
        (Some(v), _) => Verdict::fail(check, missing(v, "right-hand side")),
        (None, Some(v)) => Verdict::fail(check, missing(v, "left-hand side")),
    }
}

/// Projectivity and generator property of `H` as a left and as a right `A`-module.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ModuleFlags {
    pub left_projective: bool,
    pub left_generator: bool,
    pub right_projective: bool,
    pub right_generator: bool,
}

impl ModuleFlags {
    /// Faithful flatness at finite dimension: projective generator.
    pub fn left_faithfully_flat(&self) -> bool {
        self.left_projective && self.left_generator
    }

    pub fn right_faithfully_flat(&self) -> bool {
        self.right_projective && self.right_generator
    }
}

/// Injectivity and cogenerator property of `H` as a left and as a right `C`-comodule.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ComoduleFlags {
    pub left_injective: bool,
    pub left_cogenerator: bool,
    pub right_injective: bool,
    pub right_cogenerator: bool,
}

impl ComoduleFlags {
    pub fn left_faithfully_coflat(&self) -> bool {
        self.left_injective && self.left_cogenerator
    }

    pub fn right_faithfully_coflat(&self) -> bool {
        self.right_injective && self.right_cogenerator
    }
}

/// Homological properties of `H` over its coideal subalgebras and factor coalgebras.
pub trait FlatnessOracle: Sync {
    fn module_flags(&self, h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> ModuleFlags;
    fn comodule_flags(&self, h: &FiniteHopfAlgebra, c: &FactorCoalgebra) -> ComoduleFlags;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module_flags: Option<ModuleFlags>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comodule_flags: Option<ComoduleFlags>,
    pub verdicts: Vec<Verdict>,
}

impl CorrespondenceReport {
    pub fn new(instance: impl Into<String>) -> Self {
        CorrespondenceReport { instance: instance.into(), module_flags: None, comodule_flags: None, verdicts: Vec::new() }
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn verdict(&self, check: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.check == check)
    }

    pub fn count(&self, status: Status) -> usize {
        self.verdicts.iter().filter(|v| v.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.is_fail())
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }
}
