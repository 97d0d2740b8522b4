use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use super::params::{ParamSpec, Params};
use super::{builtin, LiftError};
use crate::domains::{Domain, DomainKind};

/// Registry metadata for one lifting.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftingDescriptor {
    pub id: String,
    pub source: DomainKind,
    pub dest: DomainKind,
    /// Consumes element features (coordinates count as features).
    pub feature_based: bool,
    /// Uses the relational structure of the source.
    pub connectivity_based: bool,
    pub params: Vec<ParamSpec>,
    /// One-line statement of the construction.
    pub summary: String,
}

impl LiftingDescriptor {
    pub fn new(id: &str, source: DomainKind, dest: DomainKind) -> Self {
        Self {
            id: id.to_string(),
            source,
            dest,
            feature_based: false,
            connectivity_based: false,
            params: Vec::new(),
            summary: String::new(),
        }
    }

    pub fn feature_based(mut self) -> Self {
        self.feature_based = true;
        self
    }

    pub fn connectivity_based(mut self) -> Self {
        self.connectivity_based = true;
        self
    }

    pub fn param(mut self, spec: ParamSpec) -> Self {
        self.params.push(spec);
        self
    }

    pub fn summary(mut self, text: &str) -> Self {
        self.summary = text.to_string();
        self
    }
}

impl fmt::Display for LiftingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} -> {})",
            self.id,
            self.source.short(),
            self.dest.short()
        )
    }
}

/// A topology lifting from one domain kind into another.
pub trait Lifting: Send + Sync {
    fn descriptor(&self) -> LiftingDescriptor;

    /// Lifts `input`, whose kind matches the descriptor's source, using
    /// parameters already resolved against the descriptor's schema.
    fn lift(&self, input: &Domain, params: &Params) -> Result<Domain, LiftError>;
}

struct Entry {
    descriptor: LiftingDescriptor,
    lifting: Box<dyn Lifting>,
}

/// Liftings keyed by id.
#[derive(Default)]
pub struct LiftingRegistry {
    entries: BTreeMap<String, Entry>,
    reserved: BTreeMap<String, (DomainKind, DomainKind)>,
}

impl LiftingRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registry holding every built-in lifting.
    pub fn builtin() -> Self {
        let mut reg = Self::new();
        builtin::register_all(&mut reg);
        reg
    }

    /// Panics if the id is already taken or the descriptor declares neither
    /// taxonomy flag.
    pub fn register(&mut self, lifting: impl Lifting + 'static) {
        let descriptor = lifting.descriptor();
        assert!(
            descriptor.feature_based || descriptor.connectivity_based,
            "{descriptor} declares neither feature- nor connectivity-based"
        );
        assert!(
            !self.entries.contains_key(&descriptor.id)
                && !self.reserved.contains_key(&descriptor.id),
            "duplicate lifting id {}",
            descriptor.id
        );
        self.entries.insert(
            descriptor.id.clone(),
            Entry {
                descriptor,
                lifting: Box::new(lifting),
            },
        );
    }

    /// Claims an id for a lifting without an implementation.
    pub fn reserve(&mut self, id: &str, source: DomainKind, dest: DomainKind) {
        assert!(!self.entries.contains_key(id), "duplicate lifting id {id}");
        self.reserved.insert(id.to_string(), (source, dest));
    }

    pub fn reserved_ids(&self) -> impl Iterator<Item = &str> {
        self.reserved.keys().map(String::as_str)
    }

    /// Descriptors matching both filters, ordered by id.
    pub fn list(
        &self,
        source: Option<DomainKind>,
        dest: Option<DomainKind>,
    ) -> Vec<&LiftingDescriptor> {
        self.entries
            .values()
            .map(|e| &e.descriptor)
            .filter(|d| source.is_none_or(|s| d.source == s) && dest.is_none_or(|t| d.dest == t))
            .collect()
    }

    pub fn get(&self, id: &str) -> Result<&LiftingDescriptor, LiftError> {
        self.entry(id).map(|e| &e.descriptor)
    }

    fn entry(&self, id: &str) -> Result<&Entry, LiftError> {
        self.entries.get(id).ok_or_else(|| {
            if self.reserved.contains_key(id) {
                LiftError::Reserved(id.to_string())
            } else {
                LiftError::UnknownLifting(id.to_string())
            }
        })
    }

    /// Resolves `params` against the schema, lifts `input` and checks the
    /// output invariants.
    pub fn apply(&self, id: &str, input: &Domain, params: &Params) -> Result<Domain, LiftError> {
        let entry = self.entry(id)?;
        let d = &entry.descriptor;
        if input.kind() != d.source {
            return Err(LiftError::KindMismatch {
                lifting: d.id.clone(),
                expected: d.source,
                found: input.kind(),
            });
        }
        let resolved = params.resolve(&d.params)?;
        let output = entry.lifting.lift(input, &resolved)?;
        debug_assert_eq!(output.kind(), d.dest);
        let report = output.validate();
        if !report.is_empty() {
            return Err(LiftError::InvalidOutput {
                lifting: d.id.clone(),
                report,
            });
        }
        Ok(output)
    }
}

impl fmt::Debug for LiftingRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LiftingRegistry")
            .field("ids", &self.entries.keys().collect::<Vec<_>>())
            .field("reserved", &self.reserved.keys().collect::<Vec<_>>())
            .finish()
    }
}

/// The shared built-in registry, built on first use.
pub fn registry() -> &'static LiftingRegistry {
    static REGISTRY: OnceLock<LiftingRegistry> = OnceLock::new();
    REGISTRY.get_or_init(LiftingRegistry::builtin)
}

pub fn registry_list(
    source: Option<DomainKind>,
    dest: Option<DomainKind>,
) -> Vec<&'static LiftingDescriptor> {
    registry().list(source, dest)
}

pub fn registry_get(id: &str) -> Result<&'static LiftingDescriptor, LiftError> {
    registry().get(id)
}

pub fn registry_apply(id: &str, input: &Domain, params: &Params) -> Result<Domain, LiftError> {
    registry().apply(id, input, params)
}
