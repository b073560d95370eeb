//! File formats, bundled examples and pipeline reports for the
//! `corner-forge` command-line tool.

pub mod examples;
pub mod format;
pub mod report;

use thiserror::Error;

use corner_forge::catalog::UnknownKind;
use corner_forge::complex::ComplexError;
use corner_forge::construct::ConstructError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error(transparent)]
    Kind(#[from] UnknownKind),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("{0}")]
    Format(String),
    #[error("unknown example {0:?}; try whitehead, borromean, m128 or dodecahedral16")]
    UnknownExample(String),
}

impl CliError {
    /// Exit status: 2 for unusable input, 1 for failed checks or constructions.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Complex(_) | CliError::Construct(_) => 1,
            _ => 2,
        }
    }
}
