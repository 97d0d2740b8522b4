use std::collections::BTreeSet;

use super::{
    check_features, check_vertex_set, DomainError, DomainKind, Features, ValidationReport,
};

/// Downward-closed family of vertex sets on `0..n`.
///
/// `simplices[k]` holds the sorted `(k+1)`-vertex simplices of dimension
/// `k` in lexicographic order. Trailing empty dimensions are never stored,
/// but dimension 0 always is.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplicialComplex {
    n: usize,
    simplices: Vec<Vec<Vec<usize>>>,
    node_features: Option<Features>,
}

impl SimplicialComplex {
    /// Builds from an explicit list of simplices, which must already be
    /// downward closed.
    pub fn new(
        n: usize,
        simplices: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self, DomainError> {
        let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
        let mut empty = false;
        for mut s in simplices {
            if s.is_empty() {
                empty = true;
                continue;
            }
            s.sort_unstable();
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(s);
        }
        for dim in &mut by_dim {
            dim.sort();
        }
        let sc = Self::from_parts(n, by_dim, None);
        let mut report = sc.validate();
        if empty {
            report.push("simplex []", "empty simplex");
        }
        report.into_result(DomainKind::Simplicial, sc)
    }

    /// Downward closure of `faces` on `n` vertices, truncated at `max_dim`.
    /// Every vertex is included as a 0-simplex.
    pub fn closure_of(
        n: usize,
        faces: impl IntoIterator<Item = Vec<usize>>,
        max_dim: usize,
    ) -> Result<Self, DomainError> {
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![(0..n).map(|v| vec![v]).collect()];
        for mut face in faces {
            face.sort_unstable();
            face.dedup();
            if let Some(&v) = face.iter().find(|&&v| v >= n) {
                return Err(DomainError::VertexOutOfRange { vertex: v, n });
            }
            let top = face.len().min(max_dim + 1);
            for size in 2..=top {
                if by_dim.len() < size {
                    by_dim.resize_with(size, BTreeSet::new);
                }
                for_each_subset(&face, size, |s| {
                    by_dim[size - 1].insert(s.to_vec());
                });
            }
        }
        let by_dim = by_dim
            .into_iter()
            .map(|d| d.into_iter().collect())
            .collect();
        let sc = Self::from_parts(n, by_dim, None);
        sc.validate().into_result(DomainKind::Simplicial, sc)
    }

    /// Stores the given per-dimension lists verbatim (after trimming trailing
    /// empty dimensions), without checks.
    pub fn from_parts(
        n: usize,
        mut simplices: Vec<Vec<Vec<usize>>>,
        node_features: Option<Features>,
    ) -> Self {
        while simplices.len() > 1 && simplices.last().is_some_and(|d| d.is_empty()) {
            simplices.pop();
        }
        if simplices.is_empty() {
            simplices.push(Vec::new());
        }
        Self {
            n,
            simplices,
            node_features,
        }
    }

    pub fn with_node_features(mut self, features: Features) -> Result<Self, DomainError> {
        self.node_features = Some(features);
        self.validate().into_result(DomainKind::Simplicial, self)
    }

    pub(crate) fn set_node_features(&mut self, features: Option<Features>) {
        self.node_features = features;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Highest non-empty dimension (0 for a complex without simplices).
    pub fn max_dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// The `k`-simplices in canonical order; empty above `max_dim`.
    pub fn simplices(&self, k: usize) -> &[Vec<usize>] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().flatten()
    }

    /// Number of simplices per dimension `0..=max_dim`.
    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// Position of `simplex` (sorted) among the simplices of its dimension.
    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let k = simplex.len().checked_sub(1)?;
        self.simplices
            .get(k)?
            .binary_search_by(|s| s.as_slice().cmp(simplex))
            .ok()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.index_of(simplex).is_some()
    }

    pub fn node_features(&self) -> Option<&Features> {
        self.node_features.as_ref()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, d)| {
                if k % 2 == 0 {
                    d.len() as i64
                } else {
                    -(d.len() as i64)
                }
            })
            .sum()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for (k, dim) in self.simplices.iter().enumerate() {
            for s in dim {
                let loc = format!("{k}-simplex {s:?}");
                if s.len() != k + 1 {
                    report.push(&loc, format!("{} vertices, expected {}", s.len(), k + 1));
                    continue;
                }
                check_vertex_set(&mut report, &loc, s, self.n);
            }
            for w in dim.windows(2) {
                if w[0] == w[1] {
                    report.push(format!("{k}-simplex {:?}", w[1]), "duplicate simplex");
                } else if w[0] > w[1] {
                    report.push(format!("{k}-simplex {:?}", w[1]), "not in canonical order");
                }
            }
        }
        let vertices = self.simplices(0);
        for v in 0..self.n {
            if !vertices.iter().any(|s| s.as_slice() == [v]) {
                report.push(format!("vertex {v}"), "missing 0-simplex");
            }
        }
        // codimension-1 faces suffice: closure then follows by induction
        for k in 1..self.simplices.len() {
            let lower: BTreeSet<&[usize]> =
                self.simplices[k - 1].iter().map(Vec::as_slice).collect();
            for s in &self.simplices[k] {
                if s.len() != k + 1 {
                    continue;
                }
                for i in 0..s.len() {
                    let face: Vec<usize> = s
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != i)
                        .map(|(_, &v)| v)
                        .collect();
                    if !lower.contains(face.as_slice()) {
                        report.push(
                            format!("{k}-simplex {s:?}"),
                            format!("closure violated: face {face:?} missing"),
                        );
                    }
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

/// Alternating count of simplices per dimension.
pub fn euler_characteristic(sc: &SimplicialComplex) -> i64 {
    sc.euler_characteristic()
}

/// Calls `f` on every `size`-subset of the sorted slice, in lexicographic order.
pub(crate) fn for_each_subset(items: &[usize], size: usize, mut f: impl FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        size: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == size {
            f(cur);
            return;
        }
        let need = size - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            rec(items, size, i + 1, cur, f);
            cur.pop();
        }
    }
    if size > items.len() {
        return;
    }
    rec(items, size, 0, &mut Vec::with_capacity(size), &mut f);
}
