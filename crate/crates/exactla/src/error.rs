use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("unknown field descriptor {0:?} (expected \"Q\" or \"p=<prime>\")")]
    BadFieldDescriptor(String),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
}
