use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq)]
pub enum ParamKind {
    Int,
    Real,
    Choice(Vec<String>),
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamKind::Int => f.write_str("int"),
            ParamKind::Real => f.write_str("real"),
            ParamKind::Choice(options) => write!(f, "{{{}}}", options.join("|")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    Int(i64),
    Real(f64),
    Choice(String),
}

impl ParamValue {
    /// Parses `text` as a value of `kind`.
    pub fn parse(kind: &ParamKind, text: &str) -> Option<ParamValue> {
        match kind {
            ParamKind::Int => text.parse().ok().map(ParamValue::Int),
            ParamKind::Real => text
                .parse::<f64>()
                .ok()
                .filter(|x| !x.is_nan())
                .map(ParamValue::Real),
            ParamKind::Choice(options) => options
                .iter()
                .find(|o| o.as_str() == text)
                .map(|o| ParamValue::Choice(o.clone())),
        }
    }

    fn coerce(self, kind: &ParamKind) -> Option<ParamValue> {
        match (kind, self) {
            (ParamKind::Int, v @ ParamValue::Int(_)) => Some(v),
            (ParamKind::Real, ParamValue::Real(x)) if !x.is_nan() => Some(ParamValue::Real(x)),
            (ParamKind::Real, ParamValue::Int(i)) => Some(ParamValue::Real(i as f64)),
            (ParamKind::Choice(_), ParamValue::Choice(s)) => ParamValue::parse(kind, &s),
            _ => None,
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(i) => write!(f, "{i}"),
            ParamValue::Real(x) => write!(f, "{x:?}"),
            ParamValue::Choice(s) => f.write_str(s),
        }
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Real(v)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Choice(v.to_string())
    }
}

/// Input-independent constraint on a parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Constraint {
    None,
    /// Integer at least this large.
    AtLeast(i64),
    /// Real strictly greater than zero.
    Positive,
}

impl Constraint {
    fn admits(self, value: &ParamValue) -> bool {
        match (self, value) {
            (Constraint::None, _) => true,
            (Constraint::AtLeast(min), ParamValue::Int(i)) => *i >= min,
            (Constraint::Positive, ParamValue::Real(x)) => *x > 0.0,
            _ => false,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::None => Ok(()),
            Constraint::AtLeast(min) => write!(f, ">= {min}"),
            Constraint::Positive => f.write_str("> 0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParamSpec {
    pub name: String,
    pub kind: ParamKind,
    pub default: ParamValue,
    pub constraint: Constraint,
}

impl ParamSpec {
    pub fn int(name: &str, default: i64, min: i64) -> Self {
        Self {
            name: name.to_string(),
            kind: ParamKind::Int,
            default: ParamValue::Int(default),
            constraint: Constraint::AtLeast(min),
        }
    }

    pub fn positive_real(name: &str, default: f64) -> Self {
        Self {
            name: name.to_string(),
            kind: ParamKind::Real,
            default: ParamValue::Real(default),
            constraint: Constraint::Positive,
        }
    }

    pub fn real(name: &str, default: f64) -> Self {
        Self {
            name: name.to_string(),
            kind: ParamKind::Real,
            default: ParamValue::Real(default),
            constraint: Constraint::None,
        }
    }

    pub fn choice(name: &str, options: &[&str], default: &str) -> Self {
        Self {
            name: name.to_string(),
            kind: ParamKind::Choice(options.iter().map(|s| s.to_string()).collect()),
            default: ParamValue::Choice(default.to_string()),
            constraint: Constraint::None,
        }
    }
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}={}", self.name, self.kind, self.default)?;
        if self.constraint != Constraint::None {
            write!(f, " ({})", self.constraint)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("unknown parameter `{name}`")]
    Unknown { name: String },
    #[error("parameter `{name}` expects {expected}, got `{value}`")]
    Type {
        name: String,
        expected: String,
        value: String,
    },
    #[error("parameter `{name}` = {value} violates constraint {constraint}")]
    Constraint {
        name: String,
        value: String,
        constraint: String,
    },
    #[error("parameter `{name}` is not set")]
    Missing { name: String },
    #[error("malformed parameter `{0}`, expected NAME=VALUE")]
    Malformed(String),
}

/// Named parameter values. Before resolution these are user overrides;
/// after [`Params::resolve`] every parameter of the schema is present.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params {
    values: BTreeMap<String, Raw>,
}

/// Override value; text is typed later against the schema.
#[derive(Debug, Clone, PartialEq)]
enum Raw {
    Value(ParamValue),
    Text(String),
}

impl fmt::Display for Raw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Raw::Value(v) => v.fmt(f),
            Raw::Text(t) => f.write_str(t),
        }
    }
}

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: impl Into<ParamValue>) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: impl Into<ParamValue>) {
        self.values
            .insert(name.to_string(), Raw::Value(value.into()));
    }

    /// Stores an untyped textual value; [`Params::resolve`] parses it against
    /// the schema.
    pub fn set_text(&mut self, name: &str, text: &str) {
        self.values
            .insert(name.to_string(), Raw::Text(text.to_string()));
    }

    /// Parses a `NAME=VALUE` override.
    pub fn set_assignment(&mut self, assignment: &str) -> Result<(), ParamError> {
        match assignment.split_once('=') {
            Some((name, value)) if !name.trim().is_empty() => {
                self.set_text(name.trim(), value.trim());
                Ok(())
            }
            _ => Err(ParamError::Malformed(assignment.to_string())),
        }
    }

    /// Overlays `other` onto `self`.
    pub fn merge(&mut self, other: &Params) {
        for (k, v) in &other.values {
            self.values.insert(k.clone(), v.clone());
        }
    }

    /// Names and values, rendered as text.
    pub fn iter(&self) -> impl Iterator<Item = (&str, String)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v.to_string()))
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Fills defaults from `schema`, type-checks and constraint-checks every
    /// value, and rejects names the schema does not declare.
    pub fn resolve(&self, schema: &[ParamSpec]) -> Result<Params, ParamError> {
        for name in self.values.keys() {
            if !schema.iter().any(|s| &s.name == name) {
                return Err(ParamError::Unknown { name: name.clone() });
            }
        }
        let mut out = Params::new();
        for spec in schema {
            let value = match self.values.get(&spec.name).cloned() {
                None => spec.default.clone(),
                Some(raw) => {
                    let shown = raw.to_string();
                    let parsed = match raw {
                        Raw::Value(v) => v.coerce(&spec.kind),
                        Raw::Text(t) => ParamValue::parse(&spec.kind, &t),
                    };
                    parsed.ok_or_else(|| ParamError::Type {
                        name: spec.name.clone(),
                        expected: spec.kind.to_string(),
                        value: shown,
                    })?
                }
            };
            if !spec.constraint.admits(&value) {
                return Err(ParamError::Constraint {
                    name: spec.name.clone(),
                    value: value.to_string(),
                    constraint: spec.constraint.to_string(),
                });
            }
            out.values.insert(spec.name.clone(), Raw::Value(value));
        }
        Ok(out)
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        match self.values.get(name) {
            Some(Raw::Value(v)) => Some(v),
            _ => None,
        }
    }

    pub fn int(&self, name: &str) -> Result<i64, ParamError> {
        match self.get(name) {
            Some(ParamValue::Int(i)) => Ok(*i),
            _ => Err(ParamError::Missing {
                name: name.to_string(),
            }),
        }
    }

    /// Integer parameter as a count; negative values are reported as
    /// constraint violations.
    pub fn count(&self, name: &str) -> Result<usize, ParamError> {
        let v = self.int(name)?;
        usize::try_from(v).map_err(|_| ParamError::Constraint {
            name: name.to_string(),
            value: v.to_string(),
            constraint: ">= 0".to_string(),
        })
    }

    pub fn real(&self, name: &str) -> Result<f64, ParamError> {
        match self.get(name) {
            Some(ParamValue::Real(x)) => Ok(*x),
            Some(ParamValue::Int(i)) => Ok(*i as f64),
            _ => Err(ParamError::Missing {
                name: name.to_string(),
            }),
        }
    }

    pub fn choice(&self, name: &str) -> Result<&str, ParamError> {
        match self.get(name) {
            Some(ParamValue::Choice(s)) => Ok(s),
            _ => Err(ParamError::Missing {
                name: name.to_string(),
            }),
        }
    }
}
