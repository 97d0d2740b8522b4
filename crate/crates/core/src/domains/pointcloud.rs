use super::{check_features, DomainError, DomainKind, Features, ValidationReport};

/// Finite set of points in `R^dim`, in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    dim: usize,
    points: Vec<Vec<f64>>,
    node_features: Option<Features>,
}

impl PointCloud {
    pub fn new(dim: usize, points: Vec<Vec<f64>>) -> Result<Self, DomainError> {
        let pc = Self::from_parts(dim, points, None);
        pc.validate().into_result(DomainKind::PointCloud, pc)
    }

    pub fn from_parts(dim: usize, points: Vec<Vec<f64>>, node_features: Option<Features>) -> Self {
        Self {
            dim,
            points,
            node_features,
        }
    }

    pub fn with_node_features(mut self, features: Features) -> Result<Self, DomainError> {
        self.node_features = Some(features);
        self.validate().into_result(DomainKind::PointCloud, self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn node_features(&self) -> Option<&Features> {
        self.node_features.as_ref()
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.squared_distance(i, j).sqrt()
    }

    pub fn squared_distance(&self, i: usize, j: usize) -> f64 {
        self.points[i]
            .iter()
            .zip(&self.points[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.dim == 0 {
            report.push("header", "dimension must be positive");
        }
        for (i, p) in self.points.iter().enumerate() {
            if p.len() != self.dim {
                report.push(
                    format!("point {i}"),
                    format!("{} coordinates, expected {}", p.len(), self.dim),
                );
            }
            if p.iter().any(|x| !x.is_finite()) {
                report.push(format!("point {i}"), "non-finite coordinate");
            }
        }
        check_features(
            &mut report,
            "node_features",
            self.node_features.as_ref(),
            self.points.len(),
        );
        report
    }
}
