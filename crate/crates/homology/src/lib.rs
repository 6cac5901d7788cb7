//! Homological properties of modules and comodules over coideal subalgebras and factor
//! coalgebras: projectivity, injectivity, (co)generators, trace ideals, total integrals,
//! coFrobenius checks, and Tor, Ext and Cotor from explicit resolutions.

mod comodules;
mod conditions;
mod error;
mod frobenius;
mod hom;
mod integral;
mod modules;
mod oracle;
mod resolution;
mod util;

pub use comodules::{coaction_retraction, cofree_envelope, is_cogenerator, is_cosemisimple, is_injective_comodule};
pub use conditions::{
    conditions_0x, global_dimension_zero, h_cogenerates, projective_generator_consequence, sample_condition, Condition,
    ConditionSample, GlobalDimensionZero,
};
pub use error::HomologyError;
pub use frobenius::{cofrobenius_check, cofrobenius_witness, frobenius_form, FROBENIUS_ATTEMPTS};
pub use hom::{hom_comodule, HomComodule};
pub use integral::{doi_splittings, total_integral, DoiSplittings};
pub use modules::{
    cover_map, cover_splitting, free_basis, free_cover, generating_set, hopf_module_generator, is_free, is_generator, is_projective, is_semisimple,
    trace_ideal, FreeCover, TraceIdeal, FREENESS_ATTEMPTS,
};
pub use oracle::{comodule_flags, h_over_factor, h_over_subalgebra, module_flags, HomologyOracle};
pub use resolution::{
    cofree_resolution, cotor, cotor_dims, ext, ext_dims, free_resolution, tor, tor_dims, truncation_degree, CofreeResolution,
    FreeResolution, ResolutionStep,
};
