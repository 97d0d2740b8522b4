//! Registry adapters for the built-in liftings.

use super::params::{ParamSpec, Params};
use super::registry::{Lifting, LiftingDescriptor, LiftingRegistry};
use super::{complex, delaunay, graph, hypergraph, pointcloud, KnnMode, LiftError};
use crate::domains::{Domain, DomainKind as K};

pub(super) fn register_all(reg: &mut LiftingRegistry) {
    reg.register(KnnGraph);
    reg.register(VietorisRips);
    reg.register(Delaunay);
    reg.register(VoronoiLandmarks);
    reg.register(Clique);
    reg.register(NeighborhoodComplex);
    reg.register(Line);
    reg.register(CycleCells);
    reg.register(KhopHypergraph);
    reg.register(FormanRicci);
    reg.register(NhopCcc);
    reg.register(SpectralEmbedding);
    reg.register(DownwardClosure);
    reg.register(StrictCcc);
    reg.register(ScInclusion);
    reg.register(CellEncoding);

    reg.reserve("spin", K::Graph, K::PointCloud);
    reg.reserve("matroid", K::Graph, K::Combinatorial);
    reg.reserve("mapper", K::Graph, K::Hypergraph);
    reg.reserve("simplicial_paths", K::Graph, K::Combinatorial);
}

fn mismatch(id: &str, expected: K, input: &Domain) -> LiftError {
    LiftError::KindMismatch {
        lifting: id.to_string(),
        expected,
        found: input.kind(),
    }
}

macro_rules! input {
    ($input:expr, $as:ident, $id:literal, $kind:expr) => {
        $input.$as().ok_or_else(|| mismatch($id, $kind, $input))?
    };
}

struct KnnGraph;

impl Lifting for KnnGraph {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("knn_graph", K::PointCloud, K::Graph)
            .feature_based()
            .param(ParamSpec::int("k", 1, 1))
            .param(ParamSpec::choice("mode", &["union", "mutual"], "union"))
            .summary("k nearest Euclidean neighbors per point; union or mutual symmetrization")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let pc = input!(input, as_pointcloud, "knn_graph", K::PointCloud);
        let mode = match p.choice("mode")? {
            "mutual" => KnnMode::Mutual,
            _ => KnnMode::Union,
        };
        Ok(pointcloud::lift_knn_graph(pc, p.count("k")?, mode)?.into())
    }
}

struct VietorisRips;

impl Lifting for VietorisRips {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("vietoris_rips", K::PointCloud, K::Simplicial)
            .feature_based()
            .param(ParamSpec::positive_real("eps", 1.0))
            .param(ParamSpec::int("max_dim", 2, 1))
            .summary("flag complex of the graph joining points within distance eps")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let pc = input!(input, as_pointcloud, "vietoris_rips", K::PointCloud);
        Ok(pointcloud::lift_vietoris_rips(pc, p.real("eps")?, p.count("max_dim")?)?.into())
    }
}

struct Delaunay;

impl Lifting for Delaunay {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("delaunay", K::PointCloud, K::Simplicial)
            .feature_based()
            .summary(
                "Bowyer-Watson Delaunay triangulation of planar points; degenerate input rejected",
            )
    }

    fn lift(&self, input: &Domain, _: &Params) -> Result<Domain, LiftError> {
        let pc = input!(input, as_pointcloud, "delaunay", K::PointCloud);
        Ok(delaunay::lift_delaunay(pc)?.into())
    }
}

struct VoronoiLandmarks;

impl Lifting for VoronoiLandmarks {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("voronoi_landmarks", K::PointCloud, K::Hypergraph)
            .feature_based()
            .param(ParamSpec::int("m", 2, 1))
            .summary("Voronoi cells of m farthest-point landmarks become hyperedges")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let pc = input!(input, as_pointcloud, "voronoi_landmarks", K::PointCloud);
        Ok(pointcloud::lift_voronoi_landmarks(pc, p.count("m")?)?.into())
    }
}

struct Clique;

impl Lifting for Clique {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("clique", K::Graph, K::Simplicial)
            .connectivity_based()
            .param(ParamSpec::int("max_dim", 2, 1))
            .summary("every (k+1)-clique becomes a k-simplex")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let g = input!(input, as_graph, "clique", K::Graph);
        Ok(graph::lift_clique(g, p.count("max_dim")?)?.into())
    }
}

struct NeighborhoodComplex;

impl Lifting for NeighborhoodComplex {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("neighborhood_complex", K::Graph, K::Simplicial)
            .connectivity_based()
            .param(ParamSpec::int("max_dim", 2, 1))
            .summary("vertex sets with a common neighbor")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let g = input!(input, as_graph, "neighborhood_complex", K::Graph);
        Ok(graph::lift_neighborhood_complex(g, p.count("max_dim")?)?.into())
    }
}

struct Line;

impl Lifting for Line {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("line", K::Graph, K::Simplicial)
            .connectivity_based()
            .param(ParamSpec::int("max_dim", 2, 1))
            .summary("clique complex of the line graph")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let g = input!(input, as_graph, "line", K::Graph);
        Ok(graph::lift_line(g, p.count("max_dim")?)?.into())
    }
}

struct CycleCells;

impl Lifting for CycleCells {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("cycle_cells", K::Graph, K::Cell)
            .connectivity_based()
            .param(ParamSpec::int("max_len", 12, 3))
            .summary(
                "a 2-cell on every chordless cycle of length at most max_len (ring perception)",
            )
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let g = input!(input, as_graph, "cycle_cells", K::Graph);
        Ok(graph::lift_cycles_to_cells(g, p.count("max_len")?)?.into())
    }
}

struct KhopHypergraph;

impl Lifting for KhopHypergraph {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("khop_hypergraph", K::Graph, K::Hypergraph)
            .connectivity_based()
            .param(ParamSpec::int("k", 1, 1))
            .summary("k-hop neighborhood of every vertex as a hyperedge")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let g = input!(input, as_graph, "khop_hypergraph", K::Graph);
        Ok(graph::lift_khop_hypergraph(g, p.count("k")?)?.into())
    }
}

struct FormanRicci;

impl Lifting for FormanRicci {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("forman_ricci", K::Graph, K::Hypergraph)
            .connectivity_based()
            .param(ParamSpec::real("threshold", 0.0))
            .summary("drop edges with Forman curvature 4-deg(u)-deg(v) below threshold; components become hyperedges")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let g = input!(input, as_graph, "forman_ricci", K::Graph);
        Ok(graph::lift_forman_ricci(g, p.real("threshold")?)?.into())
    }
}

struct NhopCcc;

impl Lifting for NhopCcc {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("nhop_ccc", K::Graph, K::Combinatorial)
            .connectivity_based()
            .param(ParamSpec::int("k", 1, 1))
            .summary("vertices, edges, and k-hop neighborhoods of 3+ vertices at ranks 0, 1, 2")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let g = input!(input, as_graph, "nhop_ccc", K::Graph);
        Ok(graph::lift_nhop_ccc(g, p.count("k")?)?.into())
    }
}

struct SpectralEmbedding;

impl Lifting for SpectralEmbedding {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("spectral_embedding", K::Graph, K::PointCloud)
            .connectivity_based()
            .param(ParamSpec::int("d", 2, 1))
            .summary(
                "Laplacian eigenmap on the d smallest nonzero eigenvalues of a connected graph",
            )
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let g = input!(input, as_graph, "spectral_embedding", K::Graph);
        Ok(graph::lift_spectral_embedding(g, p.count("d")?)?.into())
    }
}

struct DownwardClosure;

impl Lifting for DownwardClosure {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("downward_closure", K::Hypergraph, K::Simplicial)
            .connectivity_based()
            .param(ParamSpec::int("max_dim", 2, 1))
            .summary("all subsets of every hyperedge, up to max_dim")
    }

    fn lift(&self, input: &Domain, p: &Params) -> Result<Domain, LiftError> {
        let hg = input!(input, as_hypergraph, "downward_closure", K::Hypergraph);
        Ok(hypergraph::lift_downward_closure(hg, p.count("max_dim")?)?.into())
    }
}

struct StrictCcc;

impl Lifting for StrictCcc {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("strict_ccc", K::Hypergraph, K::Combinatorial)
            .connectivity_based()
            .summary("each hyperedge e at rank |e|-1, so inclusion is strictly rank-increasing")
    }

    fn lift(&self, input: &Domain, _: &Params) -> Result<Domain, LiftError> {
        let hg = input!(input, as_hypergraph, "strict_ccc", K::Hypergraph);
        Ok(hypergraph::lift_strict_ccc(hg)?.into())
    }
}

struct ScInclusion;

impl Lifting for ScInclusion {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("sc_inclusion", K::Simplicial, K::Combinatorial)
            .connectivity_based()
            .summary("every k-simplex becomes a rank-k cell")
    }

    fn lift(&self, input: &Domain, _: &Params) -> Result<Domain, LiftError> {
        let sc = input!(input, as_simplicial, "sc_inclusion", K::Simplicial);
        Ok(complex::lift_sc_inclusion(sc)?.into())
    }
}

struct CellEncoding;

impl Lifting for CellEncoding {
    fn descriptor(&self) -> LiftingDescriptor {
        LiftingDescriptor::new("cell_encoding", K::Cell, K::Graph)
            .connectivity_based()
            .summary("one vertex per cell, joined to its boundary cells; one-hot rank features")
    }

    fn lift(&self, input: &Domain, _: &Params) -> Result<Domain, LiftError> {
        let cc = input!(input, as_cell, "cell_encoding", K::Cell);
        Ok(complex::lift_cell_encoding(cc)?.into())
    }
}
