//! Signed boundary matrices, incidence matrices and Laplacians.
//!
//! Every simplex is oriented by ascending vertex order, so deleting the
//! `i`-th vertex of a sorted `k`-simplex gives a face with sign `(-1)^i`.
//! Matrices are kept in coordinate form; rows and columns follow the
//! canonical element order of the source complex.

mod sparse;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use thiserror::Error;

use crate::domains::{Graph, Hypergraph, SimplicialComplex};

pub use sparse::SparseMatrix;

/// Boundary and incidence matrices.
pub type SignedMatrix = SparseMatrix<i64>;
/// Laplacians.
pub type RealMatrix = SparseMatrix<f64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("dimension {k} out of range (allowed {min}..={max})")]
    DimensionOutOfRange { k: usize, min: usize, max: usize },
}

/// `∂_k`: rows are the `(k-1)`-simplices, columns the `k`-simplices.
///
/// `k` may be one above `max_dim`, giving an empty-column matrix.
pub fn boundary_matrix(sc: &SimplicialComplex, k: usize) -> Result<SignedMatrix, OperatorError> {
    let max = sc.max_dim() + 1;
    if k == 0 || k > max {
        return Err(OperatorError::DimensionOutOfRange { k, min: 1, max });
    }
    let faces = sc.simplices(k - 1);
    let cofaces = sc.simplices(k);
    let mut triplets = Vec::with_capacity(cofaces.len() * (k + 1));
    let mut face = Vec::with_capacity(k);
    for (col, simplex) in cofaces.iter().enumerate() {
        for i in 0..simplex.len() {
            face.clear();
            face.extend(
                simplex
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &v)| v),
            );
            let row = faces
                .binary_search(&face)
                .expect("valid complexes are downward closed");
            let sign = if i % 2 == 0 { 1 } else { -1 };
            triplets.push((row, col, sign));
        }
    }
    Ok(SparseMatrix::from_triplets(
        faces.len(),
        cofaces.len(),
        triplets,
    ))
}

/// `L_k = ∂_kᵀ∂_k + ∂_{k+1}∂_{k+1}ᵀ`, with `∂_0` taken as zero.
pub fn hodge_laplacian(sc: &SimplicialComplex, k: usize) -> Result<RealMatrix, OperatorError> {
    let max = sc.max_dim();
    if k > max {
        return Err(OperatorError::DimensionOutOfRange { k, min: 0, max });
    }
    let size = sc.simplices(k).len();
    let mut lap = SparseMatrix::zeros(size, size);
    if k > 0 {
        let down = boundary_matrix(sc, k)?;
        lap = lap.add(&down.transpose().matmul(&down));
    }
    let up = boundary_matrix(sc, k + 1)?;
    lap = lap.add(&up.matmul(&up.transpose()));
    Ok(lap.map(|v| v as f64))
}

/// Vertex–hyperedge incidence, `n × m`, with 1 where the vertex belongs to
/// the hyperedge.
pub fn incidence_matrix(hg: &Hypergraph) -> SignedMatrix {
    let triplets = hg
        .hyperedges()
        .iter()
        .enumerate()
        .flat_map(|(col, e)| e.iter().map(move |&v| (v, col, 1)));
    SparseMatrix::from_triplets(hg.n(), hg.hyperedges().len(), triplets)
}

/// `D - A`.
pub fn graph_laplacian(g: &Graph) -> RealMatrix {
    let degrees = g.degrees();
    let diagonal = degrees.iter().enumerate().map(|(v, &d)| (v, v, d as f64));
    let off = g
        .edges()
        .iter()
        .flat_map(|&[u, v]| [(u, v, -1.0), (v, u, -1.0)]);
    SparseMatrix::from_triplets(g.n(), g.n(), diagonal.chain(off))
}

/// The `count` smallest eigenpairs of a symmetric matrix, eigenvalues
/// ascending. Each eigenvector has unit norm and its largest-magnitude
/// component (lowest index on ties) positive.
pub fn smallest_eigenpairs(matrix: &DMatrix<f64>, count: usize) -> Vec<(f64, DVector<f64>)> {
    let eig = SymmetricEigen::new(matrix.clone());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .total_cmp(&eig.eigenvalues[b])
            .then(a.cmp(&b))
    });
    order
        .into_iter()
        .take(count)
        .map(|i| {
            let mut v = eig.eigenvectors.column(i).into_owned();
            let norm = v.norm();
            if norm > 0.0 {
                v /= norm;
            }
            canonicalize_sign(&mut v);
            (eig.eigenvalues[i], v)
        })
        .collect()
}

fn canonicalize_sign(v: &mut DVector<f64>) {
    const TIE: f64 = 1e-12;
    let max_abs = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if let Some(lead) = v.iter().copied().find(|x| x.abs() >= max_abs - TIE) {
        if lead < 0.0 {
            v.neg_mut();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domains::maximal_cliques;
    use proptest::prelude::*;

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::closure_of(3, [vec![0, 1, 2]], 2).unwrap()
    }

    fn hollow_square() -> SimplicialComplex {
        SimplicialComplex::closure_of(4, [vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], 2)
            .unwrap()
    }

    fn flag_complex(g: &Graph) -> SimplicialComplex {
        SimplicialComplex::closure_of(g.n(), maximal_cliques(g), 3).unwrap()
    }

    fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
        let mut edges = Vec::new();
        let mut idx = 0;
        for a in 0..n {
            for b in a + 1..n {
                if bits[idx] {
                    edges.push((a, b));
                }
                idx += 1;
            }
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn triangle_boundaries() {
        let b1 = boundary_matrix(&triangle(), 1).unwrap();
        assert_eq!((b1.rows(), b1.cols()), (3, 3));
        for col in 0..3 {
            let mut column: Vec<i64> = (0..3).map(|r| b1.get(r, col)).filter(|&v| v != 0).collect();
            column.sort();
            assert_eq!(column, vec![-1, 1]);
        }
        // edges in canonical order: {0,1}, {0,2}, {1,2}
        let b2 = boundary_matrix(&triangle(), 2).unwrap();
        assert_eq!((b2.rows(), b2.cols()), (3, 1));
        assert_eq!(b2.to_dense(), vec![vec![1], vec![-1], vec![1]]);
    }

    #[test]
    fn hollow_square_has_empty_top_boundary() {
        let b2 = boundary_matrix(&hollow_square(), 2).unwrap();
        assert_eq!((b2.rows(), b2.cols()), (4, 0));
        assert!(b2.entries().is_empty());
        assert!(matches!(
            boundary_matrix(&hollow_square(), 3),
            Err(OperatorError::DimensionOutOfRange { .. })
        ));
        assert!(boundary_matrix(&hollow_square(), 0).is_err());
    }

    #[test]
    fn hodge_laplacians_of_triangle() {
        let l0 = hodge_laplacian(&triangle(), 0).unwrap().to_dense();
        assert_eq!(
            l0,
            vec![
                vec![2.0, -1.0, -1.0],
                vec![-1.0, 2.0, -1.0],
                vec![-1.0, -1.0, 2.0]
            ]
        );
        let l2 = hodge_laplacian(&triangle(), 2).unwrap().to_dense();
        assert_eq!(l2, vec![vec![3.0]]);
        let single = SimplicialComplex::new(1, [vec![0]]).unwrap();
        assert_eq!(
            hodge_laplacian(&single, 0).unwrap().to_dense(),
            vec![vec![0.0]]
        );
        assert!(hodge_laplacian(&single, 1).is_err());
    }

    #[test]
    fn incidence_examples() {
        let one = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(
            incidence_matrix(&one).to_dense(),
            vec![vec![1], vec![1], vec![1]]
        );
        let two = Hypergraph::new(3, [vec![0, 1], vec![1, 2]]).unwrap();
        let m = incidence_matrix(&two).to_dense();
        let col_sums: Vec<i64> = (0..2).map(|c| m.iter().map(|r| r[c]).sum()).collect();
        let row_sums: Vec<i64> = m.iter().map(|r| r.iter().sum()).collect();
        assert_eq!(col_sums, vec![2, 2]);
        assert_eq!(row_sums, vec![1, 2, 1]);
        let empty = incidence_matrix(&Hypergraph::new(4, []).unwrap());
        assert_eq!((empty.rows(), empty.cols()), (4, 0));
    }

    #[test]
    fn path_laplacian_spectrum() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let l = graph_laplacian(&p3);
        assert_eq!(
            l.to_dense(),
            vec![
                vec![1.0, -1.0, 0.0],
                vec![-1.0, 2.0, -1.0],
                vec![0.0, -1.0, 1.0]
            ]
        );
        let pairs = smallest_eigenpairs(&l.to_dmatrix(), 3);
        let values: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        for (got, want) in values.iter().zip([0.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-12, "{values:?}");
        }
        let fiedler = &pairs[1].1;
        let h = std::f64::consts::FRAC_1_SQRT_2;
        for (got, want) in fiedler.iter().zip([h, 0.0, -h]) {
            assert!((got - want).abs() < 1e-12, "{fiedler}");
        }
    }

    #[test]
    fn laplacians_of_small_graphs() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            graph_laplacian(&k3).to_dense(),
            vec![
                vec![2.0, -1.0, -1.0],
                vec![-1.0, 2.0, -1.0],
                vec![-1.0, -1.0, 2.0]
            ]
        );
        let empty = Graph::new(4, []).unwrap();
        assert!(graph_laplacian(&empty).entries().is_empty());
        assert_eq!(graph_laplacian(&empty).to_dense(), vec![vec![0.0; 4]; 4]);
    }

    proptest! {
        #[test]
        fn boundary_of_boundary_vanishes(n in 1usize..=9, bits in proptest::collection::vec(any::<bool>(), 36)) {
            let sc = flag_complex(&graph_from_bits(n, &bits));
            for k in 2..=sc.max_dim() + 1 {
                let product = boundary_matrix(&sc, k - 1).unwrap().matmul(&boundary_matrix(&sc, k).unwrap());
                prop_assert!(product.entries().is_empty());
            }
        }

        #[test]
        fn hodge_laplacian_is_symmetric_psd(
            n in 1usize..=9,
            bits in proptest::collection::vec(any::<bool>(), 36),
            xs in proptest::collection::vec(-1.0f64..1.0, 200),
        ) {
            let sc = flag_complex(&graph_from_bits(n, &bits));
            for k in 0..=sc.max_dim() {
                let l = hodge_laplacian(&sc, k).unwrap();
                prop_assert_eq!(&l, &l.transpose());
                let x = &xs[..l.rows()];
                let quad: f64 = l.entries().iter().map(|&(r, c, v)| x[r] * v * x[c]).sum();
                prop_assert!(quad >= -1e-9);
            }
        }

        #[test]
        fn zero_eigenvalue_multiplicity_counts_components(
            n in 1usize..=8,
            bits in proptest::collection::vec(any::<bool>(), 28),
        ) {
            let g = graph_from_bits(n, &bits);
            let l = graph_laplacian(&g);
            for r in 0..n {
                let sum: f64 = l.entries().iter().filter(|e| e.0 == r).map(|e| e.2).sum();
                prop_assert_eq!(sum, 0.0);
            }
            let pairs = smallest_eigenpairs(&l.to_dmatrix(), n);
            let zeros = pairs.iter().filter(|p| p.0.abs() < 1e-9).count();
            prop_assert!(pairs[0].0.abs() < 1e-9);
            prop_assert_eq!(zeros, g.component_count());
        }

        #[test]
        fn incidence_rank_and_column_sums(
            n in 2usize..8,
            edges in proptest::collection::btree_set(proptest::collection::btree_set(0usize..8, 2..5), 0..6),
        ) {
            let edges: Vec<Vec<usize>> = edges
                .into_iter()
                .map(|e| e.into_iter().filter(|&v| v < n).collect::<Vec<_>>())
                .filter(|e| e.len() >= 2)
                .collect();
            let hg = Hypergraph::from_candidates(n, edges).unwrap();
            let m = incidence_matrix(&hg);
            for (j, e) in hg.hyperedges().iter().enumerate() {
                let sum: i64 = m.entries().iter().filter(|t| t.1 == j).map(|t| t.2).sum();
                prop_assert_eq!(sum as usize, e.len());
            }
            if !hg.hyperedges().is_empty() {
                let dense = m.map(|v| v as f64).to_dmatrix();
                prop_assert!(dense.rank(1e-9) <= n.min(hg.hyperedges().len()));
            }
        }
    }
}
