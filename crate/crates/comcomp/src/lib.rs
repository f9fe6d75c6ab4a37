//! Comment completion study pipeline: corpus ingestion, filtering,
//! dataset generation, n-gram baseline, external-model exchange, and
//! evaluation.

pub mod adapter;
pub mod corpus;
pub mod datasetgen;
pub mod error;
pub mod metrics;
pub mod ngram;
pub mod preprocess;
pub mod token;

use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// Hex SHA-256 of a file's bytes. Artifacts derived from a corpus embed
/// this so downstream stages can refuse mismatched inputs.
pub fn file_fingerprint(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(format!("{:x}", hasher.finalize()))
}
