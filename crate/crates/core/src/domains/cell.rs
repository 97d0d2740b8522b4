use std::collections::BTreeSet;

use super::{
    check_edges, check_features, sort_edges, DomainError, DomainKind, Features, ValidationReport,
};

/// Two-dimensional regular cell complex: a graph 1-skeleton plus 2-cells
/// attached along boundary cycles.
///
/// Each 2-cell is stored as its boundary cycle in canonical form (see
/// [`canonical_cycle`]); the 2-cell list is sorted lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct CellComplex {
    n: usize,
    edges: Vec<[usize; 2]>,
    two_cells: Vec<Vec<usize>>,
    node_features: Option<Features>,
}

impl CellComplex {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        two_cells: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, DomainError> {
        let mut cells: Vec<Vec<usize>> =
            two_cells.into_iter().map(|c| canonical_cycle(&c)).collect();
        cells.sort();
        let cc = Self::from_parts(n, sort_edges(edges), cells, None);
        cc.validate().into_result(DomainKind::Cell, cc)
    }

    pub fn from_parts(
        n: usize,
        edges: Vec<[usize; 2]>,
        two_cells: Vec<Vec<usize>>,
        node_features: Option<Features>,
    ) -> Self {
        Self {
            n,
            edges,
            two_cells,
            node_features,
        }
    }

    pub fn with_node_features(mut self, features: Features) -> Result<Self, DomainError> {
        self.node_features = Some(features);
        self.validate().into_result(DomainKind::Cell, self)
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

    pub fn two_cells(&self) -> &[Vec<usize>] {
        &self.two_cells
    }

    pub fn node_features(&self) -> Option<&Features> {
        self.node_features.as_ref()
    }

    /// Position of the edge `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u <= v { [u, v] } else { [v, u] };
        self.edges.binary_search(&key).ok()
    }

    /// Edges on the boundary of a 2-cell, as indices into [`Self::edges`],
    /// in cycle order.
    pub fn boundary_edges(&self, cell: &[usize]) -> Vec<Option<usize>> {
        let k = cell.len();
        (0..k)
            .map(|i| self.edge_index(cell[i], cell[(i + 1) % k]))
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        check_edges(&mut report, self.n, &self.edges);
        for (i, cell) in self.two_cells.iter().enumerate() {
            let loc = format!("2-cell {i} {cell:?}");
            if cell.len() < 3 {
                report.push(&loc, "boundary cycle needs at least 3 vertices");
                continue;
            }
            if let Some(&v) = cell.iter().find(|&&v| v >= self.n) {
                report.push(
                    &loc,
                    format!("vertex {v} out of range for {} vertices", self.n),
                );
                continue;
            }
            let distinct: BTreeSet<usize> = cell.iter().copied().collect();
            if distinct.len() != cell.len() {
                report.push(&loc, "boundary cycle repeats a vertex");
                continue;
            }
            for (j, e) in self.boundary_edges(cell).into_iter().enumerate() {
                if e.is_none() {
                    let (u, v) = (cell[j], cell[(j + 1) % cell.len()]);
                    report.push(&loc, format!("boundary pair ({u}, {v}) is not an edge"));
                }
            }
            if canonical_cycle(cell) != *cell {
                report.push(&loc, "boundary cycle not in canonical rotation");
            }
        }
        for (i, w) in self.two_cells.windows(2).enumerate() {
            if w[0] == w[1] {
                report.push(format!("2-cell {} {:?}", i + 1, w[1]), "duplicate 2-cell");
            } else if w[0] > w[1] {
                report.push(
                    format!("2-cell {}", i + 1),
                    "2-cells not in canonical order",
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

/// Canonical representative of a cyclic vertex sequence under rotation and
/// reflection: the smallest vertex first, followed by the smaller of its two
/// cycle neighbors.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let Some((start, _)) = cycle.iter().enumerate().min_by_key(|&(_, v)| *v) else {
        return Vec::new();
    };
    let mut out: Vec<usize> = (0..k).map(|i| cycle[(start + i) % k]).collect();
    if k > 2 && out[k - 1] < out[1] {
        out[1..].reverse();
    }
    out
}
