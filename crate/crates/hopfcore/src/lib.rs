//! Algebras, coalgebras and Hopf algebras presented by structure constants, with exact
//! axiom verification, duals and opposite/co-opposite twists.

mod axioms;
mod error;
mod hopf;
mod structures;

pub use axioms::{verify_axioms, AxiomCheck, AxiomFamily, AxiomReport, Witness};
pub use error::HopfError;
pub use hopf::{FiniteHopfAlgebra, HopfTables, Table3, Twist};
pub use structures::{Algebra, Coalgebra};
