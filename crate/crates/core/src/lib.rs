//! Topological liftings between discrete data domains.
//!
//! The crate provides containers for pointclouds, graphs, hypergraphs and
//! simplicial, cell and combinatorial complexes ([`domains`]), a registry of
//! deterministic liftings that map one domain into another ([`liftings`]),
//! feature liftings that assign initial signals to every higher-order cell
//! ([`features`]), the sparse boundary and Laplacian operators used to
//! consume lifted complexes ([`operators`]), a canonical text format
//! ([`io`]) and the command line front end ([`cli`]).
//!
//! ```
//! use toplift::{registry, Graph, Params};
//!
//! let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
//! let params = Params::new().with("max_dim", 2i64);
//! let sc = registry().apply("clique", &g.into(), &params).unwrap();
//! assert_eq!(sc.cells_per_rank(), [3, 3, 1]);
//! ```

pub mod cli;
pub mod domains;
pub mod features;
pub mod io;
pub mod liftings;
pub mod operators;

pub use domains::{
    CellComplex, CombinatorialComplex, Domain, DomainError, DomainKind, Graph, Hypergraph,
    PointCloud, SimplicialComplex, ValidationReport, Violation,
};
pub use features::{Aggregation, FeatureMatrix};
pub use liftings::{registry, LiftError, LiftingDescriptor, LiftingRegistry, ParamValue, Params};
