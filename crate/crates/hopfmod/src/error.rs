use correspondence::Side;
use thiserror::Error;

use crate::hopf_module::Category;

#[derive(Debug, Error)]
pub enum ModError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{structure}: {law} fails")]
    Law { structure: &'static str, law: &'static str },
    #[error("compatibility law of {0} fails")]
    Incompatible(Category),
    #[error("category mismatch: expected {expected}, found {found}")]
    CategoryMismatch { expected: Category, found: Category },
    #[error("side mismatch: expected {expected:?}, found {found:?}")]
    SideMismatch { expected: Side, found: Side },
    #[error("the subalgebra is not contained in the coinvariants of the factor coalgebra")]
    NotContained,
    #[error("subspace is not stable under the {0}")]
    NotStable(&'static str),
    #[error(transparent)]
    LinAlg(#[from] exactla::LinAlgError),
    #[error(transparent)]
    Correspondence(#[from] correspondence::CorrespondenceError),
}
