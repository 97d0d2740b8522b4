//! Graph sources.

use std::collections::BTreeSet;

use super::LiftError;
use crate::domains::{
    bfs_ball, canonical_cycle, cliques, CellComplex, CombinatorialComplex, Graph, Hypergraph,
    PointCloud, SimplicialComplex,
};
use crate::operators::{graph_laplacian, smallest_eigenpairs};

/// Clique (flag) complex: the `k`-simplices are the `(k+1)`-cliques of `g`
/// for `k <= max_dim`. Node features carry over to the vertices.
pub fn lift_clique(g: &Graph, max_dim: usize) -> Result<SimplicialComplex, LiftError> {
    let sc =
        SimplicialComplex::from_parts(g.n(), cliques(g, max_dim + 1), g.node_features().cloned());
    let report = sc.validate();
    if !report.is_empty() {
        return Err(LiftError::InvalidOutput {
            lifting: "clique".to_string(),
            report,
        });
    }
    Ok(sc)
}

/// Neighborhood complex: a vertex set is a simplex when some vertex is
/// adjacent to all of its members. Truncated at `max_dim`.
pub fn lift_neighborhood_complex(
    g: &Graph,
    max_dim: usize,
) -> Result<SimplicialComplex, LiftError> {
    let mut sc = SimplicialComplex::closure_of(g.n(), g.adjacency(), max_dim)?;
    sc.set_node_features(g.node_features().cloned());
    Ok(sc)
}

/// Line graph: one vertex per edge of `g` (canonical edge order), adjacent
/// when the edges share an endpoint. Edge features become node features.
pub fn line_graph(g: &Graph) -> Result<Graph, LiftError> {
    let mut incident = vec![Vec::new(); g.n()];
    for (i, &[u, v]) in g.edges().iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut edges = BTreeSet::new();
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    let mut lg = Graph::new(g.edge_count(), edges)?;
    lg.set_node_features(g.edge_features().cloned());
    Ok(lg)
}

/// Clique complex of the line graph.
pub fn lift_line(g: &Graph, max_dim: usize) -> Result<SimplicialComplex, LiftError> {
    if g.edge_count() == 0 {
        return Err(LiftError::NoEdges);
    }
    lift_clique(&line_graph(g)?, max_dim)
}

/// Chordless cycles of length `3..=max_len`, each in canonical rotation,
/// listed lexicographically.
///
/// Every cycle is grown from its smallest vertex along an induced path;
/// a candidate vertex adjacent to an interior path vertex would create a
/// chord and is skipped.
pub fn chordless_cycles(g: &Graph, max_len: usize) -> Vec<Vec<usize>> {
    let adj = g.adjacency();
    let mut found = BTreeSet::new();
    let mut path = Vec::new();
    for start in 0..g.n() {
        path.push(start);
        grow_path(&adj, g, &mut path, max_len, &mut found);
        path.pop();
    }
    found.into_iter().collect()
}

fn grow_path(
    adj: &[Vec<usize>],
    g: &Graph,
    path: &mut Vec<usize>,
    max_len: usize,
    found: &mut BTreeSet<Vec<usize>>,
) {
    let start = path[0];
    let last = *path.last().expect("path is never empty");
    for &w in &adj[last] {
        if w <= start || path.contains(&w) {
            continue;
        }
        let interior = path.get(1..path.len() - 1).unwrap_or(&[]);
        if interior.iter().any(|&u| g.has_edge(u, w)) {
            continue;
        }
        let closes = path.len() >= 2 && g.has_edge(start, w);
        path.push(w);
        if closes {
            found.insert(canonical_cycle(path));
        } else if path.len() < max_len {
            grow_path(adj, g, path, max_len, found);
        }
        path.pop();
    }
}

/// Cell complex with `g` as 1-skeleton and one 2-cell per chordless cycle
/// of length at most `max_len`.
pub fn lift_cycles_to_cells(g: &Graph, max_len: usize) -> Result<CellComplex, LiftError> {
    let cycles = chordless_cycles(g, max_len);
    let mut cc = CellComplex::new(g.n(), g.edges().iter().map(|&[u, v]| (u, v)), cycles)?;
    cc.set_node_features(g.node_features().cloned());
    Ok(cc)
}

/// One hyperedge per vertex: its `k`-hop neighborhood. Neighborhoods of a
/// single vertex are dropped and duplicates merged.
pub fn lift_khop_hypergraph(g: &Graph, k: usize) -> Result<Hypergraph, LiftError> {
    let adj = g.adjacency();
    let candidates = (0..g.n())
        .map(|v| bfs_ball(&adj, v, k))
        .filter(|b| b.len() >= 2);
    let mut hg = Hypergraph::from_candidates(g.n(), candidates.collect::<Vec<_>>())?;
    hg.set_node_features(g.node_features().cloned());
    Ok(hg)
}

/// Combinatorial Forman–Ricci curvature `4 - deg(u) - deg(v)` of every edge,
/// in canonical edge order.
pub fn forman_curvature(g: &Graph) -> Vec<f64> {
    let deg = g.degrees();
    g.edges()
        .iter()
        .map(|&[u, v]| 4.0 - deg[u] as f64 - deg[v] as f64)
        .collect()
}

/// Drops edges whose Forman curvature is below `threshold`; the connected
/// components (of two or more vertices) of what remains become hyperedges.
pub fn lift_forman_ricci(g: &Graph, threshold: f64) -> Result<Hypergraph, LiftError> {
    let curvature = forman_curvature(g);
    let kept: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .zip(&curvature)
        .filter(|&(_, &f)| f >= threshold)
        .map(|(&[u, v], _)| (u, v))
        .collect();
    let pruned = Graph::new(g.n(), kept)?;
    let labels = pruned.components();
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut groups = vec![Vec::new(); count];
    for (v, &c) in labels.iter().enumerate() {
        groups[c].push(v);
    }
    let mut hg = Hypergraph::from_candidates(g.n(), groups.into_iter().filter(|c| c.len() >= 2))?;
    hg.set_node_features(g.node_features().cloned());
    Ok(hg)
}

/// Rank 0: vertices; rank 1: edges; rank 2: distinct `k`-hop neighborhoods
/// with at least three vertices.
pub fn lift_nhop_ccc(g: &Graph, k: usize) -> Result<CombinatorialComplex, LiftError> {
    let adj = g.adjacency();
    let edges = g.edges().iter().map(|e| (e.to_vec(), 1));
    let balls = (0..g.n())
        .map(|v| bfs_ball(&adj, v, k))
        .filter(|b| b.len() >= 3)
        .map(|b| (b, 2));
    let mut ccc = CombinatorialComplex::with_singletons(g.n(), edges.chain(balls))?;
    ccc.set_node_features(g.node_features().cloned());
    Ok(ccc)
}

/// Laplacian eigenmap: point `i` is row `i` of the eigenvectors for the `d`
/// smallest nonzero Laplacian eigenvalues (unit norm, sign-canonicalized).
pub fn lift_spectral_embedding(g: &Graph, d: usize) -> Result<PointCloud, LiftError> {
    let n = g.n();
    if d == 0 || d + 1 > n {
        return Err(LiftError::OutOfRange {
            name: "d",
            value: d,
            allowed: format!("1..={}", n.saturating_sub(1)),
        });
    }
    if !g.is_connected() {
        return Err(LiftError::Disconnected);
    }
    let pairs = smallest_eigenpairs(&graph_laplacian(g).to_dmatrix(), d + 1);
    let points = (0..n)
        .map(|i| pairs[1..].iter().map(|(_, v)| v[i]).collect())
        .collect();
    let pc = PointCloud::from_parts(d, points, g.node_features().cloned());
    let report = pc.validate();
    if !report.is_empty() {
        return Err(LiftError::InvalidOutput {
            lifting: "spectral_embedding".to_string(),
            report,
        });
    }
    Ok(pc)
}
