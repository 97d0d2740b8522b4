use std::collections::VecDeque;

use super::{
    check_edges, check_features, sort_edges, DomainError, DomainKind, Features, ValidationReport,
};

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `[u, v]` with `u < v`, sorted lexicographically.
/// Edge feature rows follow that canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<[usize; 2]>,
    node_features: Option<Features>,
    edge_features: Option<Features>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate and out-of-range edges.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DomainError> {
        let g = Self::from_parts(n, sort_edges(edges), None, None);
        g.validate().into_result(DomainKind::Graph, g)
    }

    /// Stores the given parts verbatim, without checks.
    pub fn from_parts(
        n: usize,
        edges: Vec<[usize; 2]>,
        node_features: Option<Features>,
        edge_features: Option<Features>,
    ) -> Self {
        Self {
            n,
            edges,
            node_features,
            edge_features,
        }
    }

    pub fn with_node_features(mut self, features: Features) -> Result<Self, DomainError> {
        self.node_features = Some(features);
        self.validate().into_result(DomainKind::Graph, self)
    }

    /// Attaches edge features; rows follow the canonical edge order.
    pub fn with_edge_features(mut self, features: Features) -> Result<Self, DomainError> {
        self.edge_features = Some(features);
        self.validate().into_result(DomainKind::Graph, self)
    }

    pub(crate) fn set_node_features(&mut self, features: Option<Features>) {
        self.node_features = features;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn node_features(&self) -> Option<&Features> {
        self.node_features.as_ref()
    }

    pub fn edge_features(&self) -> Option<&Features> {
        self.edge_features.as_ref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = if u <= v { [u, v] } else { [v, u] };
        self.edges.binary_search(&key).is_ok()
    }

    /// Sorted neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &[u, v] in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &[u, v] in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Component label per vertex; labels are assigned in order of the
    /// smallest vertex of each component.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        check_edges(&mut report, self.n, &self.edges);
        check_features(
            &mut report,
            "node_features",
            self.node_features.as_ref(),
            self.n,
        );
        check_features(
            &mut report,
            "edge_features",
            self.edge_features.as_ref(),
            self.edges.len(),
        );
        report
    }
}

/// Vertices within graph distance `k` of `v`, ascending; always contains `v`.
pub fn k_hop_neighborhood(g: &Graph, v: usize, k: usize) -> Result<Vec<usize>, DomainError> {
    if v >= g.n() {
        return Err(DomainError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(bfs_ball(&g.adjacency(), v, k))
}

pub(crate) fn bfs_ball(adj: &[Vec<usize>], v: usize, k: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    let mut ball = vec![v];
    while let Some(u) = queue.pop_front() {
        if dist[u] == k {
            continue;
        }
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                ball.push(w);
                queue.push_back(w);
            }
        }
    }
    ball.sort_unstable();
    ball
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn triangle_is_valid() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(k3.validate().is_empty());
        assert_eq!(k3.edges(), &[[0, 1], [0, 2], [1, 2]]);
    }

    #[test]
    fn k_hop_on_paths() {
        assert_eq!(k_hop_neighborhood(&path(3), 1, 1).unwrap(), vec![0, 1, 2]);
        assert_eq!(k_hop_neighborhood(&path(3), 0, 1).unwrap(), vec![0, 1]);
        assert_eq!(k_hop_neighborhood(&path(4), 0, 2).unwrap(), vec![0, 1, 2]);
        assert_eq!(
            k_hop_neighborhood(&path(3), 3, 1),
            Err(DomainError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn components_count() {
        let g = Graph::new(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0, 0, 1, 2, 2]);
        assert_eq!(g.component_count(), 3);
        assert!(!g.is_connected());
    }

    proptest! {
        #[test]
        fn k_hop_is_monotone_in_k(
            edges in proptest::collection::btree_set((0usize..12, 0usize..12), 0..30),
            v in 0usize..12,
            k in 1usize..5,
        ) {
            let g = Graph::new(12, edges.into_iter().filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect::<std::collections::BTreeSet<_>>()).unwrap();
            let small = k_hop_neighborhood(&g, v, k).unwrap();
            let large = k_hop_neighborhood(&g, v, k + 1).unwrap();
            prop_assert!(small.contains(&v));
            prop_assert!(small.iter().all(|u| large.contains(u)));
        }
    }
}
