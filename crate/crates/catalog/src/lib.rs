//! Concrete finite-dimensional Hopf algebras and their JSON interchange format.

mod builders;
mod error;
mod format;

pub use builders::{build, default_catalog, AlgebraSpec, Family};
pub use error::CatalogError;
pub use format::{load, save, save_tables, HopfFile, Num};
