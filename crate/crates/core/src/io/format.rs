use std::fmt::Write;

use crate::domains::{Domain, Features};
use crate::features::FeatureMatrix;

fn real(x: f64) -> String {
    format!("{x:?}")
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn feature_width(f: Option<&Features>) -> usize {
    f.map_or(0, |m| m.ncols())
}

fn push_rows(out: &mut String, sentinel: &str, rows: Option<&Features>) {
    if let Some(m) = rows {
        out.push_str(sentinel);
        out.push('\n');
        for r in m.row_iter() {
            out.push_str(&join(r.iter().map(|&x| real(x))));
            out.push('\n');
        }
    }
}

/// Canonical text of a domain object.
pub fn format_domain(domain: &Domain) -> String {
    let mut out = String::new();
    let nf = feature_width(domain.node_features());
    let header_tail = if nf > 0 {
        format!(" {nf}")
    } else {
        String::new()
    };
    match domain {
        Domain::PointCloud(pc) => {
            writeln!(out, "pointcloud {} {}{header_tail}", pc.len(), pc.dim()).unwrap();
            for p in pc.points() {
                writeln!(out, "{}", join(p.iter().map(|&x| real(x)))).unwrap();
            }
        }
        Domain::Graph(g) => {
            let ef = feature_width(g.edge_features());
            if ef > 0 {
                writeln!(out, "graph {} {nf} {ef}", g.n()).unwrap();
            } else {
                writeln!(out, "graph {}{header_tail}", g.n()).unwrap();
            }
            for [u, v] in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        Domain::Hypergraph(h) => {
            writeln!(out, "hypergraph {}{header_tail}", h.n()).unwrap();
            for e in h.hyperedges() {
                writeln!(out, "{}", join(e)).unwrap();
            }
        }
        Domain::Simplicial(sc) => {
            writeln!(out, "simplicial {}{header_tail}", sc.n()).unwrap();
            for s in sc.all_simplices() {
                writeln!(out, "{}", join(s)).unwrap();
            }
        }
        Domain::Cell(cc) => {
            writeln!(out, "cell {}{header_tail}", cc.n()).unwrap();
            for [u, v] in cc.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
            for c in cc.two_cells() {
                writeln!(out, "{}", join(c)).unwrap();
            }
        }
        Domain::Combinatorial(ccc) => {
            writeln!(out, "combinatorial {}{header_tail}", ccc.n()).unwrap();
            for (rank, cell) in ccc.ordered_cells() {
                writeln!(out, "{rank} {}", join(cell)).unwrap();
            }
        }
    }
    push_rows(&mut out, "features", domain.node_features());
    if let Domain::Graph(g) = domain {
        push_rows(&mut out, "edge_features", g.edge_features());
    }
    out
}

/// `featurematrix <feature_dim>` followed by `rank v1 .. vk : f1 .. fd` lines.
pub fn format_feature_matrix(fm: &FeatureMatrix) -> String {
    let mut out = format!("featurematrix {}\n", fm.feature_dim());
    for (rank, cells) in fm.ranks().iter().enumerate() {
        for (cell, values) in cells {
            writeln!(
                out,
                "{rank} {} : {}",
                join(cell),
                join(values.iter().map(|&x| real(x)))
            )
            .unwrap();
        }
    }
    out
}
