//! Batch verification: build or load Hopf algebras, generate their right coideal subalgebras,
//! run the correspondence, isomorphism, homology and condition checks on every instance, and
//! report the verdicts as JSON or markdown.

mod config;
mod error;
mod report;
mod suite;

pub use config::{AlgebraSource, CheckKind, ExhaustiveSmall, Format, SubalgebraMode, SuiteConfig};
pub use error::CliError;
pub use report::{summarize, Candidate, Counts, Failure, Metadata, Summary, SuiteReport, SCHEMA_VERSION};
pub use suite::{
    axiom_verdicts, condition_checks, correspondence_checks, generate_subalgebras, h_free, homology_tallies,
    isomorphism_tallies, load_algebra, open_question_checks, run_suite, search_open_question, subalgebra_label,
    LoadedAlgebra, SampleTally,
};

/// Process exit status for usage, parse and I/O errors.
pub const USAGE_ERROR: i32 = 2;
