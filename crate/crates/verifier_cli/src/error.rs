use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("cannot parse {}: {source}", path.display())]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("invalid algebra {name}: {source}")]
    Algebra { name: String, source: catalog::CatalogError },
    #[error("invalid config: {0}")]
    Config(String),
    #[error("internal invariant violated on {instance}: {message}")]
    Internal { instance: String, message: String },
}
