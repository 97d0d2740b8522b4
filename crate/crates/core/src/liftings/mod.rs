//! The lifting catalog.
//!
//! Each lifting is a pure function from one domain kind to another. The
//! `lift_*` functions are the typed entry points; [`LiftingRegistry`] wraps
//! each behind the [`Lifting`] trait so it can be selected by id at runtime,
//! with its parameter schema and taxonomy flags in a [`LiftingDescriptor`].

mod builtin;
mod complex;
mod delaunay;
mod graph;
mod hypergraph;
mod params;
mod pointcloud;
mod registry;

use thiserror::Error;

use crate::domains::{DomainError, DomainKind, ValidationReport};

pub use complex::{lift_cell_encoding, lift_sc_inclusion};
pub use delaunay::{in_circle, lift_delaunay, orient2d, DELAUNAY_TOLERANCE};
pub use graph::{
    chordless_cycles, forman_curvature, lift_clique, lift_cycles_to_cells, lift_forman_ricci,
    lift_khop_hypergraph, lift_line, lift_neighborhood_complex, lift_nhop_ccc,
    lift_spectral_embedding, line_graph,
};
pub use hypergraph::{lift_downward_closure, lift_strict_ccc};
pub use params::{Constraint, ParamError, ParamKind, ParamSpec, ParamValue, Params};
pub use pointcloud::{
    farthest_point_sampling, lift_knn_graph, lift_vietoris_rips, lift_voronoi_landmarks, KnnMode,
};
pub use registry::{
    registry, registry_apply, registry_get, registry_list, Lifting, LiftingDescriptor,
    LiftingRegistry,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LiftError {
    #[error("unknown lifting `{0}`")]
    UnknownLifting(String),
    #[error("lifting `{0}` is reserved and has no implementation")]
    Reserved(String),
    #[error("lifting `{lifting}` expects a {expected} input, got a {found}")]
    KindMismatch {
        lifting: String,
        expected: DomainKind,
        found: DomainKind,
    },
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("{name} = {value} out of range for this input (allowed {allowed})")]
    OutOfRange {
        name: &'static str,
        value: usize,
        allowed: String,
    },
    #[error("need at least {needed} points, got {found}")]
    TooFewPoints { needed: usize, found: usize },
    #[error("expected {expected}-dimensional points, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("input points are collinear")]
    Collinear,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("input graph has no edges")]
    NoEdges,
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("lifting `{lifting}` produced an invalid output:\n{report}")]
    InvalidOutput {
        lifting: String,
        report: ValidationReport,
    },
}

impl LiftError {
    /// Errors caused by how the lifting was invoked (id, input kind,
    /// parameters) rather than by the input data.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            LiftError::UnknownLifting(_)
                | LiftError::Reserved(_)
                | LiftError::KindMismatch { .. }
                | LiftError::Param(_)
        )
    }
}
