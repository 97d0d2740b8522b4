use std::collections::BTreeSet;

use super::{
    check_features, check_vertex_set, DomainError, DomainKind, Features, ValidationReport,
};

/// Vertices `0..n` plus a canonical list of hyperedges (sorted vertex sets of
/// size at least 2, listed lexicographically).
#[derive(Debug, Clone, PartialEq)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<Vec<usize>>,
    node_features: Option<Features>,
}

impl Hypergraph {
    /// Sorts the input into canonical order; duplicates are an error.
    pub fn new(
        n: usize,
        hyperedges: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, DomainError> {
        let mut edges: Vec<Vec<usize>> = hyperedges
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e
            })
            .collect();
        edges.sort();
        let hg = Self::from_parts(n, edges, None);
        hg.validate().into_result(DomainKind::Hypergraph, hg)
    }

    /// Builds from candidate vertex sets, merging duplicates silently.
    pub fn from_candidates(
        n: usize,
        candidates: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, DomainError> {
        let set: BTreeSet<Vec<usize>> = candidates
            .into_iter()
            .map(|mut e| {
                e.sort_unstable();
                e.dedup();
                e
            })
            .collect();
        let hg = Self::from_parts(n, set.into_iter().collect(), None);
        hg.validate().into_result(DomainKind::Hypergraph, hg)
    }

    pub fn from_parts(
        n: usize,
        hyperedges: Vec<Vec<usize>>,
        node_features: Option<Features>,
    ) -> Self {
        Self {
            n,
            hyperedges,
            node_features,
        }
    }

    pub fn with_node_features(mut self, features: Features) -> Result<Self, DomainError> {
        self.node_features = Some(features);
        self.validate().into_result(DomainKind::Hypergraph, self)
    }

    pub(crate) fn set_node_features(&mut self, features: Option<Features>) {
        self.node_features = features;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn node_features(&self) -> Option<&Features> {
        self.node_features.as_ref()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for (i, e) in self.hyperedges.iter().enumerate() {
            let loc = format!("hyperedge {i} {e:?}");
            if e.len() < 2 {
                report.push(&loc, "hyperedges need at least 2 vertices");
            }
            check_vertex_set(&mut report, &loc, e, self.n);
        }
        for (i, w) in self.hyperedges.windows(2).enumerate() {
            if w[0] == w[1] {
                report.push(
                    format!("hyperedge {} {:?}", i + 1, w[1]),
                    "duplicate hyperedge",
                );
            } else if w[0] > w[1] {
                report.push(
                    format!("hyperedge {}", i + 1),
                    "hyperedges not in canonical order",
                );
            }
        }
        check_features(
            &mut report,
            "node_features",
            self.node_features.as_ref(),
            self.n,
        );
        report
    }
}
