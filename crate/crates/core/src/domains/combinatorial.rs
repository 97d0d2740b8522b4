use std::collections::BTreeMap;

use super::{
    check_features, check_vertex_set, DomainError, DomainKind, Features, ValidationReport,
};

/// Vertex subsets of `0..n` with a rank function that is monotone under
/// inclusion. Singletons are exactly the rank-0 cells.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinatorialComplex {
    n: usize,
    cells: BTreeMap<Vec<usize>, usize>,
    node_features: Option<Features>,
}

impl CombinatorialComplex {
    /// Builds from `(vertex set, rank)` pairs. A vertex set listed twice is
    /// reported as a violation.
    pub fn new(
        n: usize,
        cells: impl IntoIterator<Item = (Vec<usize>, usize)>,
    ) -> Result<Self, DomainError> {
        let mut map = BTreeMap::new();
        let mut report = ValidationReport::new();
        for (mut cell, rank) in cells {
            cell.sort_unstable();
            if map.contains_key(&cell) {
                report.push(format!("cell {cell:?}"), "duplicate cell");
                continue;
            }
            map.insert(cell, rank);
        }
        let ccc = Self::from_parts(n, map, None);
        for v in ccc.validate().iter() {
            report.push(v.location.clone(), v.message.clone());
        }
        report.into_result(DomainKind::Combinatorial, ccc)
    }

    /// Singletons at rank 0 plus `cells`; a cell equal to an existing one
    /// keeps the lower rank.
    pub fn with_singletons(
        n: usize,
        cells: impl IntoIterator<Item = (Vec<usize>, usize)>,
    ) -> Result<Self, DomainError> {
        let mut map: BTreeMap<Vec<usize>, usize> = (0..n).map(|v| (vec![v], 0)).collect();
        for (mut cell, rank) in cells {
            cell.sort_unstable();
            map.entry(cell)
                .and_modify(|r| *r = (*r).min(rank))
                .or_insert(rank);
        }
        let ccc = Self::from_parts(n, map, None);
        ccc.validate().into_result(DomainKind::Combinatorial, ccc)
    }

    pub fn from_parts(
        n: usize,
        cells: BTreeMap<Vec<usize>, usize>,
        node_features: Option<Features>,
    ) -> Self {
        Self {
            n,
            cells,
            node_features,
        }
    }

    pub fn with_node_features(mut self, features: Features) -> Result<Self, DomainError> {
        self.node_features = Some(features);
        self.validate().into_result(DomainKind::Combinatorial, self)
    }

    pub(crate) fn set_node_features(&mut self, features: Option<Features>) {
        self.node_features = features;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &BTreeMap<Vec<usize>, usize> {
        &self.cells
    }

    pub fn rank(&self, cell: &[usize]) -> Option<usize> {
        self.cells.get(cell).copied()
    }

    pub fn max_rank(&self) -> usize {
        self.cells.values().copied().max().unwrap_or(0)
    }

    /// Cells grouped by rank, each group in lexicographic order.
    pub fn cells_by_rank(&self) -> Vec<Vec<&[usize]>> {
        let mut out = vec![Vec::new(); self.max_rank() + 1];
        for (cell, &rank) in &self.cells {
            out[rank].push(cell.as_slice());
        }
        out
    }

    /// All cells ordered by `(rank, vertices)`.
    pub fn ordered_cells(&self) -> Vec<(usize, &[usize])> {
        let mut out: Vec<(usize, &[usize])> =
            self.cells.iter().map(|(c, &r)| (r, c.as_slice())).collect();
        out.sort();
        out
    }

    pub fn counts(&self) -> Vec<usize> {
        self.cells_by_rank().iter().map(Vec::len).collect()
    }

    pub fn node_features(&self) -> Option<&Features> {
        self.node_features.as_ref()
    }

    /// Whether `x ⊊ y` implies `rank(x) < rank(y)` for all cells.
    pub fn is_strict(&self) -> bool {
        let cells: Vec<(&Vec<usize>, &usize)> = self.cells.iter().collect();
        cells.iter().all(|(x, rx)| {
            cells
                .iter()
                .all(|(y, ry)| !(x.len() < y.len() && is_subset(x, y)) || rx < ry)
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for (cell, &rank) in &self.cells {
            let loc = format!("cell {cell:?}");
            if cell.is_empty() {
                report.push(&loc, "empty cell");
                continue;
            }
            check_vertex_set(&mut report, &loc, cell, self.n);
            if cell.len() == 1 && rank != 0 {
                report.push(&loc, format!("singleton has rank {rank}, expected 0"));
            }
            if cell.len() >= 2 && rank == 0 {
                report.push(&loc, "cells with 2 or more vertices need rank >= 1");
            }
        }
        for v in 0..self.n {
            if !self.cells.contains_key([v].as_slice()) {
                report.push(format!("vertex {v}"), "missing singleton cell");
            }
        }
        let cells: Vec<(&Vec<usize>, usize)> = self.cells.iter().map(|(c, &r)| (c, r)).collect();
        for &(x, rx) in &cells {
            for &(y, ry) in &cells {
                if x.len() < y.len() && rx > ry && is_subset(x, y) {
                    report.push(
                        format!("cell {x:?}"),
                        format!("monotonicity violated: {x:?} ⊆ {y:?} but rank {rx} > {ry}"),
                    );
                }
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

/// Subset test for sorted slices.
pub(crate) fn is_subset(small: &[usize], large: &[usize]) -> bool {
    let mut it = large.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotonicity_violation() {
        let ccc = CombinatorialComplex::from_parts(
            3,
            [
                (vec![0], 0),
                (vec![1], 0),
                (vec![2], 0),
                (vec![0, 1], 1),
                (vec![0, 1, 2], 0),
            ]
            .into_iter()
            .collect(),
            None,
        );
        let report = ccc.validate();
        let mono: Vec<_> = report
            .iter()
            .filter(|v| v.message.contains("monotonicity"))
            .collect();
        assert_eq!(mono.len(), 1, "{report}");
        assert!(mono[0].message.contains("[0, 1] ⊆ [0, 1, 2]"));
    }

    #[test]
    fn duplicates_and_singletons() {
        assert!(CombinatorialComplex::new(
            2,
            [(vec![0], 0), (vec![1], 0), (vec![1, 0], 1), (vec![0, 1], 1)]
        )
        .is_err());
        assert!(CombinatorialComplex::new(2, [(vec![0], 0)]).is_err());
        assert!(CombinatorialComplex::new(2, [(vec![0], 1), (vec![1], 0)]).is_err());
        let ok = CombinatorialComplex::with_singletons(3, [(vec![2, 0], 1)]).unwrap();
        assert_eq!(ok.counts(), vec![3, 1]);
        assert_eq!(ok.rank(&[0, 2]), Some(1));
    }

    #[test]
    fn strictness() {
        let strict =
            CombinatorialComplex::with_singletons(3, [(vec![0, 1], 1), (vec![0, 1, 2], 2)])
                .unwrap();
        assert!(strict.is_strict());
        let flat = CombinatorialComplex::with_singletons(3, [(vec![0, 1], 1), (vec![0, 1, 2], 1)])
            .unwrap();
        assert!(flat.validate().is_empty());
        assert!(!flat.is_strict());
    }

    #[test]
    fn sorted_subset() {
        assert!(is_subset(&[1, 3], &[0, 1, 2, 3]));
        assert!(!is_subset(&[1, 4], &[0, 1, 2, 3]));
        assert!(is_subset(&[], &[0]));
    }
}
