//! Hypergraph sources.

use super::LiftError;
use crate::domains::{CombinatorialComplex, Hypergraph, SimplicialComplex};

/// Downward closure of the hyperedges, truncated at `max_dim`; every vertex
/// is a 0-simplex.
pub fn lift_downward_closure(
    hg: &Hypergraph,
    max_dim: usize,
) -> Result<SimplicialComplex, LiftError> {
    let mut sc = SimplicialComplex::closure_of(hg.n(), hg.hyperedges().iter().cloned(), max_dim)?;
    sc.set_node_features(hg.node_features().cloned());
    Ok(sc)
}

/// Singletons at rank 0 and each hyperedge `e` at rank `|e| - 1`, so proper
/// inclusion always raises the rank.
pub fn lift_strict_ccc(hg: &Hypergraph) -> Result<CombinatorialComplex, LiftError> {
    let cells = hg.hyperedges().iter().map(|e| (e.clone(), e.len() - 1));
    let mut ccc = CombinatorialComplex::with_singletons(hg.n(), cells)?;
    ccc.set_node_features(hg.node_features().cloned());
    Ok(ccc)
}
