//! Pointcloud sources.

use std::collections::BTreeSet;

use super::graph::lift_clique;
use super::LiftError;
use crate::domains::{Graph, Hypergraph, PointCloud, SimplicialComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnnMode {
    /// Keep a pair if either point lists the other among its neighbors.
    Union,
    /// Keep a pair only if both do.
    Mutual,
}

/// k-nearest-neighbor graph. Distance ties go to the lower index.
pub fn lift_knn_graph(pc: &PointCloud, k: usize, mode: KnnMode) -> Result<Graph, LiftError> {
    let n = pc.len();
    if n < 2 {
        return Err(LiftError::TooFewPoints {
            needed: 2,
            found: n,
        });
    }
    if k == 0 || k >= n {
        return Err(LiftError::OutOfRange {
            name: "k",
            value: k,
            allowed: format!("1..={}", n - 1),
        });
    }
    let mut directed = BTreeSet::new();
    for i in 0..n {
        let mut others: Vec<(f64, usize)> = (0..n)
            .filter(|&j| j != i)
            .map(|j| (pc.squared_distance(i, j), j))
            .collect();
        others.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        directed.extend(others[..k].iter().map(|&(_, j)| (i, j)));
    }
    let edges = directed.iter().filter_map(|&(i, j)| {
        let keep = match mode {
            KnnMode::Union => i < j || !directed.contains(&(j, i)),
            KnnMode::Mutual => i < j && directed.contains(&(j, i)),
        };
        keep.then_some((i.min(j), i.max(j)))
    });
    let mut g = Graph::new(n, edges.collect::<Vec<_>>())?;
    g.set_node_features(pc.node_features().cloned());
    Ok(g)
}

/// Flag complex of the graph joining points at distance at most `eps`,
/// truncated at `max_dim`.
pub fn lift_vietoris_rips(
    pc: &PointCloud,
    eps: f64,
    max_dim: usize,
) -> Result<SimplicialComplex, LiftError> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(LiftError::Param(super::ParamError::Constraint {
            name: "eps".to_string(),
            value: eps.to_string(),
            constraint: "> 0".to_string(),
        }));
    }
    let n = pc.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pc.distance(i, j) <= eps {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::new(n, edges)?;
    g.set_node_features(pc.node_features().cloned());
    lift_clique(&g, max_dim)
}

/// Greedy farthest-point sampling of `m` landmarks seeded at point 0.
/// Each step picks the point maximizing the distance to the chosen set,
/// lowest index on ties.
pub fn farthest_point_sampling(pc: &PointCloud, m: usize) -> Vec<usize> {
    let n = pc.len();
    let m = m.min(n);
    if m == 0 {
        return Vec::new();
    }
    let mut chosen = vec![false; n];
    let mut landmarks = vec![0];
    chosen[0] = true;
    let mut nearest: Vec<f64> = (0..n).map(|i| pc.squared_distance(i, 0)).collect();
    while landmarks.len() < m {
        let mut best: Option<usize> = None;
        for i in (0..n).filter(|&i| !chosen[i]) {
            if best.is_none_or(|b| nearest[i] > nearest[b]) {
                best = Some(i);
            }
        }
        let next = best.expect("fewer landmarks than points");
        chosen[next] = true;
        landmarks.push(next);
        for (i, d) in nearest.iter_mut().enumerate() {
            *d = d.min(pc.squared_distance(i, next));
        }
    }
    landmarks
}

/// Voronoi cells of `m` farthest-point landmarks; every cell with at least
/// two points becomes a hyperedge. Points equidistant from several landmarks
/// join the one with the lowest point index.
pub fn lift_voronoi_landmarks(pc: &PointCloud, m: usize) -> Result<Hypergraph, LiftError> {
    let n = pc.len();
    if m == 0 || m > n {
        return Err(LiftError::OutOfRange {
            name: "m",
            value: m,
            allowed: format!("1..={n}"),
        });
    }
    let mut landmarks = farthest_point_sampling(pc, m);
    landmarks.sort_unstable();
    let mut cells = vec![Vec::new(); landmarks.len()];
    for i in 0..n {
        let mut best = 0;
        for (slot, &l) in landmarks.iter().enumerate().skip(1) {
            if pc.squared_distance(i, l) < pc.squared_distance(i, landmarks[best]) {
                best = slot;
            }
        }
        cells[best].push(i);
    }
    let mut hg = Hypergraph::from_candidates(n, cells.into_iter().filter(|c| c.len() >= 2))?;
    hg.set_node_features(pc.node_features().cloned());
    Ok(hg)
}
