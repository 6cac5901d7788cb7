//! Modules, comodules and relative Hopf modules over a finite-dimensional Hopf algebra `H`,
//! a right coideal subalgebra `A` and a left module factor coalgebra `C`; tensor and
//! cotensor products, the Takeuchi functors between them, and the canonical isomorphisms
//! relating the decorated tensor products.

mod comodule;
mod decorate;
mod error;
mod functors;
mod hopf_module;
mod iso;
mod module;
mod morphism;
mod products;
mod sample;
mod setting;
mod util;

pub use comodule::{trivial_coaction, ComoduleStr};
pub use decorate::{comodule_tensor, diagonal_action, hopf_tensor, left_free_hopf, twisted_left_coaction, twisted_right_action};
pub use error::ModError;
pub use functors::*;
pub use hopf_module::{Category, HopfModule};
pub use iso::*;
pub use module::ModuleStr;
pub use morphism::{comodule_homs, hopf_homs, is_comodule_map, is_hopf_map, is_module_map, module_homs};
pub use products::{cotensor, tensor_over, TensorProduct};
pub use sample::*;
pub use setting::Setting;
