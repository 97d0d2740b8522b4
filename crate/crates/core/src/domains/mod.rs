//! Core containers for the discrete domains and their invariant checks.
//!
//! Every type is immutable once built. Checked constructors (`new`,
//! `from_*`) canonicalize element order and reject objects whose
//! [`validate`] report is non-empty; `from_parts` keeps the input verbatim
//! so that malformed data read from disk can still be inspected.

mod cell;
mod cliques;
mod combinatorial;
mod graph;
mod hypergraph;
mod pointcloud;
mod simplicial;

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use thiserror::Error;

pub use cell::{canonical_cycle, CellComplex};
pub use cliques::{cliques, maximal_cliques};
pub use combinatorial::CombinatorialComplex;
pub(crate) use graph::bfs_ball;
pub use graph::{k_hop_neighborhood, Graph};
pub use hypergraph::Hypergraph;
pub use pointcloud::PointCloud;
pub use simplicial::{euler_characteristic, SimplicialComplex};

/// Real-valued feature matrix, one row per element.
pub type Features = DMatrix<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DomainKind {
    PointCloud,
    Graph,
    Hypergraph,
    Simplicial,
    Cell,
    Combinatorial,
}

impl DomainKind {
    pub const ALL: [DomainKind; 6] = [
        DomainKind::PointCloud,
        DomainKind::Graph,
        DomainKind::Hypergraph,
        DomainKind::Simplicial,
        DomainKind::Cell,
        DomainKind::Combinatorial,
    ];

    /// Keyword used in file headers and on the command line.
    pub fn name(self) -> &'static str {
        match self {
            DomainKind::PointCloud => "pointcloud",
            DomainKind::Graph => "graph",
            DomainKind::Hypergraph => "hypergraph",
            DomainKind::Simplicial => "simplicial",
            DomainKind::Cell => "cell",
            DomainKind::Combinatorial => "combinatorial",
        }
    }

    /// Short tag (`PC`, `G`, `HG`, `SC`, `CC`, `CCC`).
    pub fn short(self) -> &'static str {
        match self {
            DomainKind::PointCloud => "PC",
            DomainKind::Graph => "G",
            DomainKind::Hypergraph => "HG",
            DomainKind::Simplicial => "SC",
            DomainKind::Cell => "CC",
            DomainKind::Combinatorial => "CCC",
        }
    }
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown domain kind `{0}`")]
pub struct UnknownKind(pub String);

impl FromStr for DomainKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        DomainKind::ALL
            .into_iter()
            .find(|k| k.name() == lower || k.short().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownKind(s.to_string()))
    }
}

/// One broken invariant, with a human-readable location.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

/// All invariant violations found in a domain object; empty iff valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, location: impl Into<String>, message: impl Into<String>) {
        self.violations.push(Violation {
            location: location.into(),
            message: message.into(),
        });
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter()
    }

    fn into_result<T>(self, kind: DomainKind, value: T) -> Result<T, DomainError> {
        if self.is_empty() {
            Ok(value)
        } else {
            Err(DomainError::Invalid { kind, report: self })
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("invalid {kind} ({} violation(s)):\n{report}", report.len())]
    Invalid {
        kind: DomainKind,
        report: ValidationReport,
    },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// A value from any of the six domains.
#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    PointCloud(PointCloud),
    Graph(Graph),
    Hypergraph(Hypergraph),
    Simplicial(SimplicialComplex),
    Cell(CellComplex),
    Combinatorial(CombinatorialComplex),
}

impl Domain {
    pub fn kind(&self) -> DomainKind {
        match self {
            Domain::PointCloud(_) => DomainKind::PointCloud,
            Domain::Graph(_) => DomainKind::Graph,
            Domain::Hypergraph(_) => DomainKind::Hypergraph,
            Domain::Simplicial(_) => DomainKind::Simplicial,
            Domain::Cell(_) => DomainKind::Cell,
            Domain::Combinatorial(_) => DomainKind::Combinatorial,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    pub fn as_pointcloud(&self) -> Option<&PointCloud> {
        match self {
            Domain::PointCloud(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            Domain::Graph(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_hypergraph(&self) -> Option<&Hypergraph> {
        match self {
            Domain::Hypergraph(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_simplicial(&self) -> Option<&SimplicialComplex> {
        match self {
            Domain::Simplicial(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_cell(&self) -> Option<&CellComplex> {
        match self {
            Domain::Cell(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_combinatorial(&self) -> Option<&CombinatorialComplex> {
        match self {
            Domain::Combinatorial(x) => Some(x),
            _ => None,
        }
    }

    /// Number of rank-0 elements (points or vertices).
    pub fn vertex_count(&self) -> usize {
        match self {
            Domain::PointCloud(pc) => pc.len(),
            Domain::Graph(g) => g.n(),
            Domain::Hypergraph(h) => h.n(),
            Domain::Simplicial(sc) => sc.n(),
            Domain::Cell(cc) => cc.n(),
            Domain::Combinatorial(ccc) => ccc.n(),
        }
    }

    pub fn node_features(&self) -> Option<&Features> {
        match self {
            Domain::PointCloud(pc) => pc.node_features(),
            Domain::Graph(g) => g.node_features(),
            Domain::Hypergraph(h) => h.node_features(),
            Domain::Simplicial(sc) => sc.node_features(),
            Domain::Cell(cc) => cc.node_features(),
            Domain::Combinatorial(ccc) => ccc.node_features(),
        }
    }

    /// Element counts per rank: points; vertices and edges; vertices and
    /// hyperedges; simplices per dimension; vertices, edges and 2-cells;
    /// cells per rank.
    pub fn cells_per_rank(&self) -> Vec<usize> {
        match self {
            Domain::PointCloud(pc) => vec![pc.len()],
            Domain::Graph(g) => vec![g.n(), g.edge_count()],
            Domain::Hypergraph(h) => vec![h.n(), h.hyperedges().len()],
            Domain::Simplicial(sc) => sc.counts(),
            Domain::Cell(cc) => vec![cc.n(), cc.edges().len(), cc.two_cells().len()],
            Domain::Combinatorial(ccc) => ccc.counts(),
        }
    }
}

macro_rules! domain_from {
    ($($variant:ident($ty:ty)),* $(,)?) => {
        $(impl From<$ty> for Domain {
            fn from(value: $ty) -> Self {
                Domain::$variant(value)
            }
        })*
    };
}

domain_from!(
    PointCloud(PointCloud),
    Graph(Graph),
    Hypergraph(Hypergraph),
    Simplicial(SimplicialComplex),
    Cell(CellComplex),
    Combinatorial(CombinatorialComplex),
);

/// Checks every type invariant of `domain`.
pub fn validate(domain: &Domain) -> ValidationReport {
    match domain {
        Domain::PointCloud(pc) => pc.validate(),
        Domain::Graph(g) => g.validate(),
        Domain::Hypergraph(h) => h.validate(),
        Domain::Simplicial(sc) => sc.validate(),
        Domain::Cell(cc) => cc.validate(),
        Domain::Combinatorial(ccc) => ccc.validate(),
    }
}

fn check_features(
    report: &mut ValidationReport,
    name: &str,
    features: Option<&Features>,
    expected_rows: usize,
) {
    let Some(m) = features else { return };
    if m.ncols() == 0 {
        report.push(name, "feature matrix has zero columns");
    }
    if m.nrows() != expected_rows {
        report.push(
            name,
            format!("{} rows, expected {expected_rows}", m.nrows()),
        );
    }
    if let Some(pos) = m.iter().position(|x| !x.is_finite()) {
        // column-major storage
        let (r, c) = (pos % m.nrows().max(1), pos / m.nrows().max(1));
        report.push(format!("{name}[{r}][{c}]"), "non-finite value");
    }
}

/// Checks that `vertices` is strictly ascending and within `[0, n)`.
fn check_vertex_set(report: &mut ValidationReport, location: &str, vertices: &[usize], n: usize) {
    if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
        report.push(
            location,
            format!("vertex {v} out of range for {n} vertices"),
        );
    }
    if vertices.windows(2).any(|w| w[0] >= w[1]) {
        report.push(location, "vertices not strictly ascending");
    }
}

/// Checks a 1-skeleton edge list: no loops, ascending endpoints, in range,
/// sorted and duplicate free.
fn check_edges(report: &mut ValidationReport, n: usize, edges: &[[usize; 2]]) {
    for (i, &[u, v]) in edges.iter().enumerate() {
        let loc = format!("edge {i} ({u}, {v})");
        if u == v {
            report.push(&loc, "self-loop");
        } else if u > v {
            report.push(&loc, "endpoints not ascending");
        }
        if u >= n || v >= n {
            report.push(&loc, format!("endpoint out of range for {n} vertices"));
        }
    }
    for (i, w) in edges.windows(2).enumerate() {
        if w[0] == w[1] {
            report.push(
                format!("edge {} ({}, {})", i + 1, w[1][0], w[1][1]),
                "duplicate edge",
            );
        } else if w[0] > w[1] {
            report.push(format!("edge {}", i + 1), "edges not in canonical order");
        }
    }
}

fn sort_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<[usize; 2]> {
    let mut out: Vec<[usize; 2]> = edges
        .into_iter()
        .map(|(u, v)| if u <= v { [u, v] } else { [v, u] })
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_parsing_accepts_names_and_tags() {
        assert_eq!("graph".parse::<DomainKind>().unwrap(), DomainKind::Graph);
        assert_eq!(
            "CCC".parse::<DomainKind>().unwrap(),
            DomainKind::Combinatorial
        );
        assert_eq!("sc".parse::<DomainKind>().unwrap(), DomainKind::Simplicial);
        assert!("mesh".parse::<DomainKind>().is_err());
    }

    #[test]
    fn feature_row_mismatch_is_reported() {
        let g = Graph::from_parts(3, vec![[0, 1]], Some(Features::zeros(2, 1)), None);
        let report = g.validate();
        assert_eq!(report.len(), 1);
        assert!(report.violations()[0].message.contains("expected 3"));
    }
}
