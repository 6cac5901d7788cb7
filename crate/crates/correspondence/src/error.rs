use exactla::SparseVec;
use thiserror::Error;

/// Which defining condition of a coideal subalgebra or module factor coalgebra fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    Ambient,
    MissingUnit,
    NotMultiplicative,
    NotCoideal,
    CounitNonzero,
    NotIdeal,
}

#[derive(Debug, Error)]
pub enum CorrespondenceError {
    #[error("not a coideal subalgebra ({reason:?}) at {witness:?}")]
    NotCoidealSubalgebra { reason: Violation, witness: SparseVec },
    #[error("not a module factor coalgebra ({reason:?}) at {witness:?}")]
    NotFactorCoalgebra { reason: Violation, witness: SparseVec },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    LinAlg(#[from] exactla::LinAlgError),
    #[error(transparent)]
    Hopf(#[from] hopfcore::HopfError),
}
