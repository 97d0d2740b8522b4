use std::path::{Path, PathBuf};

use super::{read_text, IoError};
use crate::domains::DomainKind;
use crate::features::Aggregation;
use crate::liftings::{registry, LiftError, Params};

/// A lifting run described by a config file.
///
/// ```text
/// pipeline
/// input graph data/karate.txt
/// lifting clique
/// param max_dim 3
/// features mean
/// output karate_sc.txt
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct Pipeline {
    pub input: Option<(DomainKind, PathBuf)>,
    pub lifting: String,
    pub params: Params,
    pub features: Option<Aggregation>,
    pub output: Option<PathBuf>,
}

fn parse_error(no: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        location: format!("line {no}"),
        message: message.into(),
    }
}

/// Parses and checks a pipeline. Relative paths are joined onto `base`.
pub fn parse_config(text: &str, base: &Path) -> Result<Pipeline, IoError> {
    let mut seen_header = false;
    let mut input = None;
    let mut lifting = None;
    let mut params = Params::new();
    let mut features = None;
    let mut output = None;

    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !seen_header {
            if tokens != ["pipeline"] {
                return Err(parse_error(no, "expected `pipeline` header"));
            }
            seen_header = true;
            continue;
        }
        let once = |slot: bool, name: &str| {
            if slot {
                Err(parse_error(no, format!("duplicate `{name}` record")))
            } else {
                Ok(())
            }
        };
        match tokens.as_slice() {
            ["input", kind, path] => {
                once(input.is_some(), "input")?;
                let kind: DomainKind = kind
                    .parse()
                    .map_err(|_| parse_error(no, format!("unknown domain kind `{kind}`")))?;
                input = Some((kind, base.join(path)));
            }
            ["lifting", id] => {
                once(lifting.is_some(), "lifting")?;
                lifting = Some(id.to_string());
            }
            ["param", name, value] => params.set_text(name, value),
            ["features", agg] => {
                once(features.is_some(), "features")?;
                features = Some(agg.parse().map_err(|e| parse_error(no, format!("{e}")))?);
            }
            ["output", path] => {
                once(output.is_some(), "output")?;
                output = Some(base.join(path));
            }
            _ => return Err(parse_error(no, format!("unrecognized record `{line}`"))),
        }
    }
    if !seen_header {
        return Err(IoError::Parse {
            location: "end of input".into(),
            message: "empty input, expected `pipeline` header".into(),
        });
    }

    let lifting = lifting.ok_or(IoError::MissingField("lifting"))?;
    let descriptor = registry().get(&lifting)?;
    params
        .resolve(&descriptor.params)
        .map_err(LiftError::from)?;
    if let Some((kind, _)) = &input {
        if *kind != descriptor.source {
            return Err(LiftError::KindMismatch {
                lifting,
                expected: descriptor.source,
                found: *kind,
            }
            .into());
        }
    }
    Ok(Pipeline {
        input,
        lifting,
        params,
        features,
        output,
    })
}

/// Reads a pipeline file. Relative paths inside it resolve against the
/// directory holding the file.
pub fn read_config(path: impl AsRef<Path>) -> Result<Pipeline, IoError> {
    let path = path.as_ref();
    let base = path.parent().unwrap_or(Path::new(""));
    parse_config(&read_text(path)?, base).map_err(|e| e.at_path(path))
}
