use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("invalid algebra spec: {0}")]
    Spec(String),
    #[error("{q} is not a primitive {n}-th root of unity in {field}")]
    NotPrimitiveRoot { q: String, n: usize, field: String },
    #[error("{field} has no primitive {n}-th root of unity")]
    FieldTooSmall { n: usize, field: String },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed tables: {0}")]
    Format(String),
    #[error(transparent)]
    Hopf(#[from] hopfcore::HopfError),
    #[error(transparent)]
    LinAlg(#[from] exactla::LinAlgError),
}
