//! Seeded generators of random inputs shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toplift::liftings::chordless_cycles;
use toplift::{
    CellComplex, CombinatorialComplex, Domain, DomainKind, Graph, Hypergraph, Params, PointCloud,
    SimplicialComplex,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const EDGE_PROBABILITIES: [f64; 3] = [0.1, 0.3, 0.5];

pub fn features(rng: &mut impl Rng, rows: usize) -> DMatrix<f64> {
    let cols = rng.random_range(1..=3);
    DMatrix::from_fn(rows, cols, |_, _| rng.random_range(-1.0..1.0))
}

pub fn erdos_renyi(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Erdős–Rényi graph with `n ≤ max_n` and `p` drawn from the fixed set.
pub fn random_graph(rng: &mut impl Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.random_range(min_n..=max_n);
    let p = *EDGE_PROBABILITIES.choose(rng).unwrap();
    erdos_renyi(rng, n, p)
}

pub fn with_features(rng: &mut impl Rng, d: Domain) -> Domain {
    if !rng.random_bool(0.5) {
        return d;
    }
    let x = features(rng, d.vertex_count());
    match d {
        Domain::PointCloud(v) => v.with_node_features(x).unwrap().into(),
        Domain::Graph(v) => v.with_node_features(x).unwrap().into(),
        Domain::Hypergraph(v) => v.with_node_features(x).unwrap().into(),
        Domain::Simplicial(v) => v.with_node_features(x).unwrap().into(),
        Domain::Cell(v) => v.with_node_features(x).unwrap().into(),
        Domain::Combinatorial(v) => v.with_node_features(x).unwrap().into(),
    }
}

pub fn point_cloud(rng: &mut impl Rng, n: usize, dim: usize) -> PointCloud {
    let points = (0..n)
        .map(|_| (0..dim).map(|_| rng.random_range(0.0..1.0)).collect())
        .collect();
    PointCloud::new(dim, points).unwrap()
}

pub fn random_hypergraph(rng: &mut impl Rng) -> Hypergraph {
    let n = rng.random_range(2..=20);
    let m = rng.random_range(0..=15);
    let mut edges = BTreeSet::new();
    for _ in 0..m {
        let size = rng.random_range(2..=n.min(5));
        let mut e: Vec<usize> = rand::seq::index::sample(rng, n, size).into_vec();
        e.sort_unstable();
        edges.insert(e);
    }
    Hypergraph::new(n, edges).unwrap()
}

pub fn random_simplicial(rng: &mut impl Rng) -> SimplicialComplex {
    let n = rng.random_range(1..=15);
    let faces: Vec<Vec<usize>> = (0..rng.random_range(0..=10))
        .map(|_| {
            let size = rng.random_range(1..=n.min(4));
            rand::seq::index::sample(rng, n, size).into_vec()
        })
        .collect();
    SimplicialComplex::closure_of(n, faces, 3).unwrap()
}

pub fn random_cell(rng: &mut impl Rng) -> CellComplex {
    let g = random_graph(rng, 1, 12);
    let cycles: Vec<Vec<usize>> = chordless_cycles(&g, 8)
        .into_iter()
        .filter(|_| rng.random_bool(0.6))
        .collect();
    let edges = g.edges().iter().map(|&[u, v]| (u, v));
    CellComplex::new(g.n(), edges, cycles).unwrap()
}

/// Random sets ranked by a random non-decreasing function of their size.
pub fn random_combinatorial(rng: &mut impl Rng) -> CombinatorialComplex {
    let n = rng.random_range(1..=12);
    let mut rank_of_size = vec![0, 0];
    for _ in 2..=n {
        let prev = *rank_of_size.last().unwrap();
        rank_of_size.push(prev.max(1) + rng.random_range(0..=1));
    }
    let cells: Vec<(Vec<usize>, usize)> = (0..rng.random_range(0..=10))
        .filter(|_| n >= 2)
        .map(|_| {
            let size = rng.random_range(2..=n.min(5));
            let cell = rand::seq::index::sample(rng, n, size).into_vec();
            (cell, rank_of_size[size])
        })
        .collect();
    CombinatorialComplex::with_singletons(n, cells).unwrap()
}

pub fn random_domain(rng: &mut impl Rng, kind: DomainKind) -> Domain {
    let d: Domain = match kind {
        DomainKind::PointCloud => {
            let dim = rng.random_range(1..=3);
            let n = rng.random_range(1..=50);
            point_cloud(rng, n, dim).into()
        }
        DomainKind::Graph => random_graph(rng, 1, 30).into(),
        DomainKind::Hypergraph => random_hypergraph(rng).into(),
        DomainKind::Simplicial => random_simplicial(rng).into(),
        DomainKind::Cell => random_cell(rng).into(),
        DomainKind::Combinatorial => random_combinatorial(rng).into(),
    };
    with_features(rng, d)
}

fn connected_graph(rng: &mut impl Rng, min_n: usize) -> Graph {
    loop {
        let g = random_graph(rng, min_n, 30);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random input satisfying the preconditions of lifting `id`, with
/// randomized parameters.
pub fn random_lifting_input(rng: &mut impl Rng, id: &str, source: DomainKind) -> (Domain, Params) {
    let mut p = Params::new();
    let d: Domain = match id {
        "knn_graph" => {
            let n = rng.random_range(2..=50);
            let dim = rng.random_range(2..=3);
            let pc = point_cloud(rng, n, dim);
            p.set("k", rng.random_range(1..=(n as i64 - 1).min(4)));
            p.set("mode", *["union", "mutual"].choose(rng).unwrap());
            pc.into()
        }
        "vietoris_rips" => {
            let n = rng.random_range(1..=50);
            p.set("eps", rng.random_range(0.05..0.4));
            p.set("max_dim", rng.random_range(1..=3i64));
            let dim = rng.random_range(2..=3);
            point_cloud(rng, n, dim).into()
        }
        "delaunay" => {
            let n = rng.random_range(3..=50);
            point_cloud(rng, n, 2).into()
        }
        "voronoi_landmarks" => {
            let n = rng.random_range(1..=50);
            p.set("m", rng.random_range(1..=(n as i64).min(6)));
            let dim = rng.random_range(2..=3);
            point_cloud(rng, n, dim).into()
        }
        "clique" | "neighborhood_complex" => {
            p.set("max_dim", rng.random_range(1..=3i64));
            random_graph(rng, 1, 30).into()
        }
        "line" => {
            p.set("max_dim", rng.random_range(1..=2i64));
            loop {
                let g = random_graph(rng, 2, 30);
                if g.edge_count() > 0 {
                    break g.into();
                }
            }
        }
        "cycle_cells" => {
            p.set("max_len", rng.random_range(3..=12i64));
            random_graph(rng, 1, 30).into()
        }
        "khop_hypergraph" => {
            p.set("k", rng.random_range(1..=3i64));
            random_graph(rng, 1, 30).into()
        }
        "forman_ricci" => {
            p.set(
                "threshold",
                *[f64::NEG_INFINITY, -4.0, -1.0, 0.0, 1.0]
                    .choose(rng)
                    .unwrap(),
            );
            random_graph(rng, 1, 30).into()
        }
        "nhop_ccc" => {
            p.set("k", rng.random_range(1..=2i64));
            random_graph(rng, 1, 30).into()
        }
        "spectral_embedding" => {
            let g = connected_graph(rng, 3);
            p.set("d", rng.random_range(1..=(g.n() as i64 - 1).min(3)));
            g.into()
        }
        "downward_closure" => {
            p.set("max_dim", rng.random_range(1..=3i64));
            random_hypergraph(rng).into()
        }
        _ => return (random_domain(rng, source), p),
    };
    (with_features(rng, d), p)
}

/// A small fixed input of each kind, with node features.
pub fn fixed_input(kind: DomainKind) -> Domain {
    let x = |n: usize| DMatrix::from_fn(n, 2, |i, j| (i * 2 + j) as f64 * 0.25);
    match kind {
        DomainKind::PointCloud => {
            let pts = vec![
                vec![0.0, 0.0],
                vec![1.0, 0.1],
                vec![0.2, 1.3],
                vec![1.7, 1.1],
                vec![0.9, 0.6],
                vec![2.2, 0.3],
            ];
            PointCloud::new(2, pts)
                .unwrap()
                .with_node_features(x(6))
                .unwrap()
                .into()
        }
        DomainKind::Graph => Graph::new(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 2),
                (1, 4),
            ],
        )
        .unwrap()
        .with_node_features(x(6))
        .unwrap()
        .into(),
        DomainKind::Hypergraph => {
            Hypergraph::new(5, [vec![0, 1, 2], vec![1, 2], vec![2, 3, 4], vec![0, 4]])
                .unwrap()
                .with_node_features(x(5))
                .unwrap()
                .into()
        }
        DomainKind::Simplicial => {
            SimplicialComplex::closure_of(5, [vec![0, 1, 2], vec![2, 3], vec![1, 3, 4]], 2)
                .unwrap()
                .with_node_features(x(5))
                .unwrap()
                .into()
        }
        DomainKind::Cell => CellComplex::new(
            4,
            [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],
            [vec![0, 1, 2], vec![0, 2, 3]],
        )
        .unwrap()
        .with_node_features(x(4))
        .unwrap()
        .into(),
        DomainKind::Combinatorial => {
            CombinatorialComplex::with_singletons(4, [(vec![0, 1], 1), (vec![0, 1, 2, 3], 2)])
                .unwrap()
                .with_node_features(x(4))
                .unwrap()
                .into()
        }
    }
}
