//! Canonical text serialization of every domain kind, feature matrices and
//! lifting pipelines.
//!
//! A data file starts with a header line `kind n [dim] [feature_dim]` and
//! lists one element per line with space-separated fields, in canonical
//! order. Node feature rows follow a `features` sentinel line (and, for
//! graphs, edge feature rows follow `edge_features`). Blank lines and lines
//! starting with `#` are ignored. The full grammar is in the README.
//!
//! Reals are written with the shortest representation that parses back to
//! the same `f64`, so `write` is byte-stable and `read ∘ write` is the
//! identity.

mod config;
mod format;
mod parse;

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::domains::{Domain, DomainKind, ValidationReport};
use crate::features::FeatureMatrix;
use crate::liftings::LiftError;

pub use config::{parse_config, read_config, Pipeline};
pub use format::{format_domain, format_feature_matrix};
pub use parse::{parse_domain, parse_feature_matrix};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{location}: {message}")]
    Parse { location: String, message: String },
    #[error("expected a {expected} file, found {found}")]
    KindMismatch {
        expected: DomainKind,
        found: DomainKind,
    },
    #[error("invalid {kind} ({} violation(s)):\n{report}", report.len())]
    Invalid {
        kind: DomainKind,
        report: ValidationReport,
    },
    #[error("missing required field `{0}`")]
    MissingField(&'static str),
    #[error(transparent)]
    Lift(#[from] LiftError),
}

impl IoError {
    fn at_path(self, path: &Path) -> Self {
        match self {
            IoError::Parse { location, message } => IoError::Parse {
                location: format!("{}:{location}", path.display()),
                message,
            },
            other => other,
        }
    }
}

fn read_text(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses a file without checking invariants (element order is still
/// canonicalized). Used to report violations of malformed inputs.
pub fn read_domain_unchecked(
    path: impl AsRef<Path>,
    kind: Option<DomainKind>,
) -> Result<Domain, IoError> {
    let path = path.as_ref();
    parse_domain(&read_text(path)?, kind).map_err(|e| e.at_path(path))
}

/// Reads and validates a domain file of the given kind.
pub fn read_domain(path: impl AsRef<Path>, kind: DomainKind) -> Result<Domain, IoError> {
    let domain = read_domain_unchecked(path, Some(kind))?;
    let report = domain.validate();
    if report.is_empty() {
        Ok(domain)
    } else {
        Err(IoError::Invalid { kind, report })
    }
}

pub fn write_domain(domain: &Domain, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_text(path.as_ref(), &format_domain(domain))
}

pub fn write_feature_matrix(fm: &FeatureMatrix, path: impl AsRef<Path>) -> Result<(), IoError> {
    write_text(path.as_ref(), &format_feature_matrix(fm))
}

pub fn read_feature_matrix(path: impl AsRef<Path>) -> Result<FeatureMatrix, IoError> {
    let path = path.as_ref();
    parse_feature_matrix(&read_text(path)?).map_err(|e| e.at_path(path))
}
