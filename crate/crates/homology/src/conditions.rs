//! Sampled checks that every Hopf module of a category is projective or injective over the
//! relevant side.

use std::fmt;

use correspondence::Side;
use hopfmod::{
    random_hopf_module, random_left_a_hopf_module, random_left_h_right_c, random_left_hopf_module, HopfModule, Setting,
};
use rand::Rng;

use crate::comodules::{is_cogenerator, is_cosemisimple, is_injective_comodule};
use crate::modules::{is_generator, is_projective, is_semisimple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// Objects of `M_A^H` are projective in `M_A`.
    RightModulesProjective,
    /// Objects of `_H^C M` are injective in `^C M`.
    LeftComodulesInjective,
    /// Objects of `_A M^H` are projective in `_A M`.
    LeftModulesProjective,
    /// Objects of `_H M^C` are injective in `M^C`.
    RightComodulesInjective,
}

impl Condition {
    pub const ALL: [Condition; 4] = [
        Condition::RightModulesProjective,
        Condition::LeftComodulesInjective,
        Condition::LeftModulesProjective,
        Condition::RightComodulesInjective,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::RightModulesProjective => "hopf_modules_projective_right",
            Condition::LeftComodulesInjective => "hopf_modules_injective_left",
            Condition::LeftModulesProjective => "hopf_modules_projective_left",
            Condition::RightComodulesInjective => "hopf_modules_injective_right",
        }
    }

    fn sample<R: Rng + ?Sized>(self, s: &Setting, rng: &mut R) -> HopfModule {
        match self {
            Condition::RightModulesProjective => random_hopf_module(s, rng),
            Condition::LeftComodulesInjective => random_left_hopf_module(s, rng),
            Condition::LeftModulesProjective => random_left_a_hopf_module(s, rng),
            Condition::RightComodulesInjective => random_left_h_right_c(s, rng),
        }
    }

    /// Whether the underlying module or comodule of `m` has the required property.
    pub fn holds_for(self, s: &Setting, m: &HopfModule) -> bool {
        match self {
            Condition::RightModulesProjective | Condition::LeftModulesProjective => is_projective(s.a_algebra(), m.module()),
            Condition::LeftComodulesInjective | Condition::RightComodulesInjective => {
                is_injective_comodule(s.factor().coalgebra(), m.comodule())
            }
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of sampling one condition: a sampled property, never a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionSample {
    pub condition: Condition,
    pub samples: usize,
    pub failures: usize,
    /// Dimensions of the first failing sample.
    pub witness: Option<String>,
}

impl ConditionSample {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn sample_condition<R: Rng + ?Sized>(s: &Setting, condition: Condition, sample_size: usize, rng: &mut R) -> ConditionSample {
    let mut failures = 0;
    let mut witness = None;
    for i in 0..sample_size {
        let m = condition.sample(s, rng);
        if !condition.holds_for(s, &m) {
            failures += 1;
            witness.get_or_insert_with(|| format!("sample {i}: {} of dim {}", m.category(), m.dim()));
        }
    }
    ConditionSample { condition, samples: sample_size, failures, witness }
}

/// All four conditions, `sample_size` random Hopf modules each, in [`Condition::ALL`] order.
pub fn conditions_0x<R: Rng + ?Sized>(s: &Setting, sample_size: usize, rng: &mut R) -> [ConditionSample; 4] {
    Condition::ALL.map(|c| sample_condition(s, c, sample_size, rng))
}

/// Nonempty samples of `M_A^H` that are all projective force every sampled nonzero object
/// to be a projective generator, and `H` to be a projective generator over `A` on both
/// sides. Returns `None` when the premise does not hold.
pub fn projective_generator_consequence<R: Rng + ?Sized>(s: &Setting, sample_size: usize, rng: &mut R) -> Option<bool> {
    let alg = s.a_algebra();
    let samples: Vec<HopfModule> = (0..sample_size).map(|_| random_hopf_module(s, rng)).collect();
    if !samples.iter().all(|m| is_projective(alg, m.module())) {
        return None;
    }
    let sampled = samples.iter().filter(|m| m.dim() > 0).all(|m| is_generator(alg, m.module()).0);
    let h_sides = [s.h_as_left_a_module(), s.h_as_right_a_module()]
        .iter()
        .all(|m| is_projective(alg, m) && is_generator(alg, m).0);
    Some(sampled && h_sides)
}

/// The dimension-zero cases of the global-dimension hypotheses: `A` semisimple, `C`
/// cosemisimple. Higher finite dimensions are not certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlobalDimensionZero {
    pub subalgebra_semisimple: bool,
    pub factor_cosemisimple: bool,
}

impl GlobalDimensionZero {
    pub fn either(&self) -> bool {
        self.subalgebra_semisimple || self.factor_cosemisimple
    }
}

pub fn global_dimension_zero(s: &Setting) -> GlobalDimensionZero {
    GlobalDimensionZero {
        subalgebra_semisimple: is_semisimple(s.a_algebra()),
        factor_cosemisimple: is_cosemisimple(s.factor().coalgebra()),
    }
}

/// `H` a cogenerator over `C` on the given side.
pub fn h_cogenerates(s: &Setting, side: Side) -> bool {
    let h = match side {
        Side::Left => s.h_as_left_c_comodule(),
        Side::Right => s.h_as_right_c_comodule(),
    };
    is_cogenerator(s.factor().coalgebra(), &h)
}
