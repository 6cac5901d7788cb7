use hopfmod::ModError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("not a total integral: {0}")]
    NotTotalIntegral(&'static str),
    #[error("expected a {0} module factor coalgebra")]
    FactorSide(&'static str),
    #[error("the Hom space is not stable under the induced coaction")]
    HomNotStable,
    #[error(transparent)]
    Mod(#[from] ModError),
}
