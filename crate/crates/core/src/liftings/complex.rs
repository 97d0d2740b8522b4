//! Complex sources.

use nalgebra::DMatrix;

use super::LiftError;
use crate::domains::{CellComplex, CombinatorialComplex, Graph, SimplicialComplex};

/// Each `k`-simplex becomes a rank-`k` cell.
pub fn lift_sc_inclusion(sc: &SimplicialComplex) -> Result<CombinatorialComplex, LiftError> {
    let cells =
        (1..=sc.max_dim()).flat_map(|k| sc.simplices(k).iter().map(move |s| (s.clone(), k)));
    let mut ccc = CombinatorialComplex::with_singletons(sc.n(), cells)?;
    ccc.set_node_features(sc.node_features().cloned());
    Ok(ccc)
}

/// Hasse-diagram encoding: one graph vertex per cell (vertices, then edges,
/// then 2-cells, each in canonical order), joined to the cells one rank
/// lower on its boundary.
///
/// Node features are the source vertex features (zero rows for edges and
/// 2-cells) followed by a one-hot rank tag of width 3.
pub fn lift_cell_encoding(cc: &CellComplex) -> Result<Graph, LiftError> {
    let (n, m) = (cc.n(), cc.edges().len());
    let f = cc.two_cells().len();
    let mut edges = Vec::with_capacity(2 * m + f * 4);
    for (i, &[u, v]) in cc.edges().iter().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    for (j, cell) in cc.two_cells().iter().enumerate() {
        for e in cc.boundary_edges(cell) {
            let e = e.expect("valid cell complexes have every boundary edge");
            edges.push((n + e, n + m + j));
        }
    }
    let width = cc.node_features().map_or(0, |x| x.ncols());
    let total = n + m + f;
    let mut features = DMatrix::zeros(total, width + 3);
    if let Some(src) = cc.node_features() {
        features.view_mut((0, 0), (n, width)).copy_from(src);
    }
    for row in 0..total {
        let rank = if row < n {
            0
        } else if row < n + m {
            1
        } else {
            2
        };
        features[(row, width + rank)] = 1.0;
    }
    Ok(Graph::new(total, edges)?.with_node_features(features)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusion_counts() {
        let tri = SimplicialComplex::closure_of(3, [vec![0, 1, 2]], 2).unwrap();
        assert_eq!(lift_sc_inclusion(&tri).unwrap().counts(), vec![3, 3, 1]);
        let two = SimplicialComplex::new(2, [vec![0], vec![1]]).unwrap();
        assert_eq!(lift_sc_inclusion(&two).unwrap().counts(), vec![2]);
        let path = SimplicialComplex::closure_of(3, [vec![0, 1], vec![1, 2]], 1).unwrap();
        assert_eq!(lift_sc_inclusion(&path).unwrap().counts(), vec![3, 2]);
    }

    #[test]
    fn filled_triangle_encoding() {
        let cc = CellComplex::new(3, [(0, 1), (1, 2), (0, 2)], [vec![0, 1, 2]]).unwrap();
        let g = lift_cell_encoding(&cc).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 9));
        let x = g.node_features().unwrap();
        assert_eq!(x.ncols(), 3);
        assert_eq!(
            x.row(6).iter().copied().collect::<Vec<_>>(),
            vec![0.0, 0.0, 1.0]
        );
    }

    #[test]
    fn graph_only_and_single_vertex() {
        let cc = CellComplex::new(4, [(0, 1), (1, 2), (2, 3)], []).unwrap();
        let g = lift_cell_encoding(&cc).unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 6));
        let lone = lift_cell_encoding(&CellComplex::new(1, [], []).unwrap()).unwrap();
        assert_eq!((lone.n(), lone.edge_count()), (1, 0));
    }

    #[test]
    fn source_features_are_kept_for_vertices() {
        let cc = CellComplex::new(2, [(0, 1)], [])
            .unwrap()
            .with_node_features(DMatrix::from_row_slice(2, 1, &[5.0, 7.0]))
            .unwrap();
        let x = lift_cell_encoding(&cc)
            .unwrap()
            .node_features()
            .unwrap()
            .clone();
        assert_eq!(
            x,
            DMatrix::from_row_slice(
                3,
                4,
                &[5.0, 1.0, 0.0, 0.0, 7.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]
            )
        );
    }
}
