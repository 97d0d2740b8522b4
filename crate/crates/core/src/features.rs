//! Feature liftings: initial signals on every cell of a lifted domain,
//! aggregated from the features of the cell's vertices.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use thiserror::Error;

use crate::domains::{Domain, ValidationReport};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Aggregation {
    Sum,
    #[default]
    Mean,
    Max,
}

impl Aggregation {
    pub fn name(self) -> &'static str {
        match self {
            Aggregation::Sum => "sum",
            Aggregation::Mean => "mean",
            Aggregation::Max => "max",
        }
    }

    fn apply(self, rows: &[&[f64]], width: usize) -> Vec<f64> {
        (0..width)
            .map(|c| {
                let column = rows.iter().map(|r| r[c]);
                match self {
                    Aggregation::Sum => column.sum(),
                    // offset by the column minimum so constant inputs stay exact
                    Aggregation::Mean => {
                        let low = rows.iter().map(|r| r[c]).fold(f64::INFINITY, f64::min);
                        low + column.map(|x| x - low).sum::<f64>() / rows.len() as f64
                    }
                    Aggregation::Max => column.fold(f64::NEG_INFINITY, f64::max),
                }
            })
            .collect()
    }
}

impl fmt::Display for Aggregation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Aggregation {
    type Err = FeatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sum" => Ok(Aggregation::Sum),
            "mean" => Ok(Aggregation::Mean),
            "max" => Ok(Aggregation::Max),
            other => Err(FeatureError::UnknownAggregation(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FeatureError {
    #[error("node feature matrix has {found} rows, target has {expected} vertices")]
    RowMismatch { expected: usize, found: usize },
    #[error("node feature matrix has no columns")]
    Empty,
    #[error("unknown aggregation `{0}` (expected sum, mean or max)")]
    UnknownAggregation(String),
    #[error(
        "feature vector of cell {cell:?} at rank {rank} has width {found}, expected {expected}"
    )]
    Width {
        rank: usize,
        cell: Vec<usize>,
        expected: usize,
        found: usize,
    },
}

/// A cell (as its vertex list) paired with its feature vector.
pub type CellFeature = (Vec<usize>, Vec<f64>);

/// Feature vectors for every cell, grouped by rank. Within a rank, cells
/// follow the canonical order of the complex they were lifted onto.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    feature_dim: usize,
    ranks: Vec<Vec<CellFeature>>,
}

impl FeatureMatrix {
    pub fn new(feature_dim: usize, ranks: Vec<Vec<CellFeature>>) -> Result<Self, FeatureError> {
        if feature_dim == 0 {
            return Err(FeatureError::Empty);
        }
        for (rank, cells) in ranks.iter().enumerate() {
            for (cell, values) in cells {
                if values.len() != feature_dim {
                    return Err(FeatureError::Width {
                        rank,
                        cell: cell.clone(),
                        expected: feature_dim,
                        found: values.len(),
                    });
                }
            }
        }
        Ok(Self { feature_dim, ranks })
    }

    pub fn feature_dim(&self) -> usize {
        self.feature_dim
    }

    pub fn ranks(&self) -> &[Vec<CellFeature>] {
        &self.ranks
    }

    pub fn rank(&self, r: usize) -> &[CellFeature] {
        self.ranks.get(r).map_or(&[], Vec::as_slice)
    }

    pub fn get(&self, rank: usize, cell: &[usize]) -> Option<&[f64]> {
        self.rank(rank)
            .iter()
            .find(|(c, _)| c.as_slice() == cell)
            .map(|(_, v)| v.as_slice())
    }

    /// Reports cells that do not exist in `target` and cells of `target`
    /// without a feature vector.
    pub fn check_against(&self, target: &Domain) -> ValidationReport {
        let mut report = ValidationReport::new();
        let expected = cells_by_rank(target);
        for r in 0..expected.len().max(self.ranks.len()) {
            let want = expected.get(r).map_or(&[][..], Vec::as_slice);
            let have: Vec<&[usize]> = self.rank(r).iter().map(|(c, _)| c.as_slice()).collect();
            let want: Vec<&[usize]> = want.iter().map(Vec::as_slice).collect();
            if have != want {
                report.push(
                    format!("rank {r}"),
                    format!("{} keyed cells, target has {}", have.len(), want.len()),
                );
            }
        }
        report
    }
}

/// Shared width of all feature vectors.
pub fn feature_dim(fm: &FeatureMatrix) -> usize {
    fm.feature_dim()
}

/// Vertex lists of every element of `target`, grouped by rank in
/// canonical order.
pub fn cells_by_rank(target: &Domain) -> Vec<Vec<Vec<usize>>> {
    let vertices = |n: usize| (0..n).map(|v| vec![v]).collect::<Vec<_>>();
    match target {
        Domain::PointCloud(pc) => vec![vertices(pc.len())],
        Domain::Graph(g) => vec![
            vertices(g.n()),
            g.edges().iter().map(|e| e.to_vec()).collect(),
        ],
        Domain::Hypergraph(h) => vec![vertices(h.n()), h.hyperedges().to_vec()],
        Domain::Simplicial(sc) => (0..=sc.max_dim())
            .map(|k| sc.simplices(k).to_vec())
            .collect(),
        Domain::Cell(cc) => vec![
            vertices(cc.n()),
            cc.edges().iter().map(|e| e.to_vec()).collect(),
            cc.two_cells().to_vec(),
        ],
        Domain::Combinatorial(ccc) => ccc
            .cells_by_rank()
            .into_iter()
            .map(|r| r.into_iter().map(<[usize]>::to_vec).collect())
            .collect(),
    }
}

/// Feature of every cell = `aggregation` over the rows of its vertices.
/// Rank-0 features are the input rows.
pub fn lift_features(
    target: &Domain,
    node_features: &DMatrix<f64>,
    aggregation: Aggregation,
) -> Result<FeatureMatrix, FeatureError> {
    let n = target.vertex_count();
    if node_features.nrows() != n {
        return Err(FeatureError::RowMismatch {
            expected: n,
            found: node_features.nrows(),
        });
    }
    let width = node_features.ncols();
    if width == 0 {
        return Err(FeatureError::Empty);
    }
    let rows: Vec<Vec<f64>> = node_features
        .row_iter()
        .map(|r| r.iter().copied().collect())
        .collect();
    let ranks = cells_by_rank(target)
        .into_iter()
        .map(|cells| {
            cells
                .into_iter()
                .map(|cell| {
                    let members: Vec<&[f64]> = cell.iter().map(|&v| rows[v].as_slice()).collect();
                    let value = aggregation.apply(&members, width);
                    (cell, value)
                })
                .collect()
        })
        .collect();
    FeatureMatrix::new(width, ranks)
}
