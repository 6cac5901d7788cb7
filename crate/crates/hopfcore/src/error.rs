use thiserror::Error;

use crate::axioms::AxiomReport;

#[derive(Debug, Clone, Error)]
pub enum HopfError {
    #[error("inconsistent table dimensions: {0}")]
    Shape(String),
    #[error("not an algebra: {0}")]
    NotAnAlgebra(String),
    #[error("not a coalgebra: {0}")]
    NotACoalgebra(String),
    #[error("Hopf axioms fail: {}", .0.failed_families().join(", "))]
    Axioms(Box<AxiomReport>),
    #[error(transparent)]
    LinAlg(#[from] exactla::LinAlgError),
}
