use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use nalgebra::DMatrix;

use super::IoError;
use crate::domains::{
    canonical_cycle, CellComplex, CombinatorialComplex, Domain, DomainKind, Features, Graph,
    Hypergraph, PointCloud, SimplicialComplex,
};
use crate::features::FeatureMatrix;

struct Line<'a> {
    no: usize,
    tokens: Vec<&'a str>,
}

impl Line<'_> {
    fn error(&self, message: impl Into<String>) -> IoError {
        IoError::Parse {
            location: format!("line {}", self.no),
            message: message.into(),
        }
    }

    fn is(&self, word: &str) -> bool {
        self.tokens.len() == 1 && self.tokens[0] == word
    }
}

fn meaningful_lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                None
            } else {
                Some(Line {
                    no: i + 1,
                    tokens: trimmed.split_whitespace().collect(),
                })
            }
        })
        .collect()
}

fn eof(message: &str) -> IoError {
    IoError::Parse {
        location: "end of input".into(),
        message: message.into(),
    }
}

fn number<T: FromStr>(line: &Line, token: &str, what: &str) -> Result<T, IoError> {
    token
        .parse()
        .map_err(|_| line.error(format!("invalid {what} `{token}`")))
}

fn reals(line: &Line, tokens: &[&str], expected: usize) -> Result<Vec<f64>, IoError> {
    if tokens.len() != expected {
        return Err(line.error(format!(
            "expected {expected} real value(s), found {}",
            tokens.len()
        )));
    }
    tokens.iter().map(|t| number(line, t, "real")).collect()
}

struct Header {
    kind: DomainKind,
    n: usize,
    dim: usize,
    node_width: usize,
    edge_width: usize,
}

fn header(line: &Line, expected: Option<DomainKind>) -> Result<Header, IoError> {
    let kind: DomainKind = line.tokens[0]
        .parse()
        .map_err(|_| line.error(format!("unknown domain kind `{}`", line.tokens[0])))?;
    if let Some(expected) = expected {
        if expected != kind {
            return Err(IoError::KindMismatch {
                expected,
                found: kind,
            });
        }
    }
    let fields = &line.tokens[1..];
    let (min, max) = match kind {
        DomainKind::PointCloud => (2, 3),
        DomainKind::Graph => (1, 3),
        _ => (1, 2),
    };
    if fields.len() < min || fields.len() > max {
        return Err(line.error(format!(
            "{kind} header takes {min} to {max} numeric field(s), found {}",
            fields.len()
        )));
    }
    let values: Vec<usize> = fields
        .iter()
        .map(|t| number(line, t, "header field"))
        .collect::<Result<_, _>>()?;
    let mut rest = values[1..].iter().copied();
    let dim = if kind == DomainKind::PointCloud {
        rest.next().unwrap_or(0)
    } else {
        0
    };
    Ok(Header {
        kind,
        n: values[0],
        dim,
        node_width: rest.next().unwrap_or(0),
        edge_width: rest.next().unwrap_or(0),
    })
}

struct Vertices {
    labels: HashMap<String, usize>,
}

impl Vertices {
    fn parse(&self, line: &Line, token: &str) -> Result<usize, IoError> {
        match self.labels.get(token) {
            Some(&v) => Ok(v),
            None => number(line, token, "vertex"),
        }
    }

    fn list(&self, line: &Line, tokens: &[&str]) -> Result<Vec<usize>, IoError> {
        tokens.iter().map(|t| self.parse(line, t)).collect()
    }
}

fn feature_rows(
    lines: &[Line],
    sentinel: &str,
    rows: usize,
    width: usize,
) -> Result<(Option<Features>, usize), IoError> {
    let Some(first) = lines.first().filter(|l| l.is(sentinel)) else {
        if width > 0 {
            return Err(match lines.first() {
                Some(l) => l.error(format!("expected `{sentinel}` section")),
                None => eof(&format!("missing `{sentinel}` section")),
            });
        }
        return Ok((None, 0));
    };
    if width == 0 {
        return Err(first.error(format!(
            "`{sentinel}` section but the header declares no width"
        )));
    }
    let body = &lines[1..];
    if body.len() < rows {
        return Err(eof(&format!(
            "`{sentinel}` has {} row(s), expected {rows}",
            body.len()
        )));
    }
    let mut data = Vec::with_capacity(rows * width);
    for line in &body[..rows] {
        data.extend(reals(line, &line.tokens, width)?);
    }
    Ok((Some(DMatrix::from_row_slice(rows, width, &data)), rows + 1))
}

/// Parses the canonical text form. Element order is canonicalized but
/// invariants are not checked, so invalid objects can still be inspected.
pub fn parse_domain(text: &str, expected: Option<DomainKind>) -> Result<Domain, IoError> {
    let lines = meaningful_lines(text);
    let first = lines
        .first()
        .ok_or_else(|| eof("empty input, expected a header"))?;
    let h = header(first, expected)?;
    let mut pos = 1;

    let mut vertices = Vertices {
        labels: HashMap::new(),
    };
    if lines.get(pos).is_some_and(|l| l.is("labels")) {
        pos += 1;
        for v in 0..h.n {
            let line = lines
                .get(pos)
                .ok_or_else(|| eof("`labels` section is shorter than n"))?;
            if line.tokens.len() != 1 {
                return Err(line.error("a label line holds exactly one token"));
            }
            if vertices
                .labels
                .insert(line.tokens[0].to_string(), v)
                .is_some()
            {
                return Err(line.error(format!("duplicate label `{}`", line.tokens[0])));
            }
            pos += 1;
        }
    }

    let body_end = lines[pos..]
        .iter()
        .position(|l| l.is("features") || l.is("edge_features"))
        .map_or(lines.len(), |i| pos + i);
    let body = &lines[pos..body_end];
    let tail = &lines[body_end..];

    let (node_features, used) = feature_rows(tail, "features", h.n, h.node_width)?;
    let tail = &tail[used..];

    let domain = match h.kind {
        DomainKind::PointCloud => {
            if body.len() != h.n {
                return Err(body.get(h.n).map_or_else(
                    || eof(&format!("expected {} point(s), found {}", h.n, body.len())),
                    |l| l.error(format!("expected {} point(s)", h.n)),
                ));
            }
            let points = body
                .iter()
                .map(|l| reals(l, &l.tokens, h.dim))
                .collect::<Result<_, _>>()?;
            Domain::PointCloud(PointCloud::from_parts(h.dim, points, node_features))
        }
        DomainKind::Graph => {
            let mut edges = Vec::with_capacity(body.len());
            for line in body {
                if line.tokens.len() != 2 {
                    return Err(line.error("an edge line holds exactly two vertices"));
                }
                let (u, v) = (
                    vertices.parse(line, line.tokens[0])?,
                    vertices.parse(line, line.tokens[1])?,
                );
                edges.push([u.min(v), u.max(v)]);
            }
            let (edge_features, used) =
                feature_rows(tail, "edge_features", edges.len(), h.edge_width)?;
            let tail = &tail[used..];
            if let Some(line) = tail.first() {
                return Err(line.error("unexpected content after feature sections"));
            }
            let mut order: Vec<usize> = (0..edges.len()).collect();
            order.sort_by_key(|&i| edges[i]);
            let edge_features = edge_features.map(|m| m.select_rows(order.iter()));
            let edges = order.iter().map(|&i| edges[i]).collect();
            return Ok(Domain::Graph(Graph::from_parts(
                h.n,
                edges,
                node_features,
                edge_features,
            )));
        }
        DomainKind::Hypergraph => {
            let mut hyperedges = Vec::with_capacity(body.len());
            for line in body {
                let mut e = vertices.list(line, &line.tokens)?;
                e.sort_unstable();
                hyperedges.push(e);
            }
            hyperedges.sort();
            Domain::Hypergraph(Hypergraph::from_parts(h.n, hyperedges, node_features))
        }
        DomainKind::Simplicial => {
            let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
            for line in body {
                let mut s = vertices.list(line, &line.tokens)?;
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
            Domain::Simplicial(SimplicialComplex::from_parts(h.n, by_dim, node_features))
        }
        DomainKind::Cell => {
            let mut edges = Vec::new();
            let mut cells = Vec::new();
            for line in body {
                let vs = vertices.list(line, &line.tokens)?;
                match vs.len() {
                    1 => return Err(line.error("a cell line holds at least two vertices")),
                    2 => edges.push([vs[0].min(vs[1]), vs[0].max(vs[1])]),
                    _ => cells.push(canonical_cycle(&vs)),
                }
            }
            edges.sort_unstable();
            cells.sort();
            Domain::Cell(CellComplex::from_parts(h.n, edges, cells, node_features))
        }
        DomainKind::Combinatorial => {
            let mut cells = BTreeMap::new();
            for line in body {
                if line.tokens.len() < 2 {
                    return Err(line.error("a cell line holds a rank and at least one vertex"));
                }
                let rank = number(line, line.tokens[0], "rank")?;
                let mut cell = vertices.list(line, &line.tokens[1..])?;
                cell.sort_unstable();
                if cells.insert(cell, rank).is_some() {
                    return Err(line.error("duplicate cell"));
                }
            }
            Domain::Combinatorial(CombinatorialComplex::from_parts(h.n, cells, node_features))
        }
    };
    if let Some(line) = tail.first() {
        return Err(line.error("unexpected content after feature section"));
    }
    Ok(domain)
}

/// Parses the `featurematrix` format written by [`super::format_feature_matrix`].
pub fn parse_feature_matrix(text: &str) -> Result<FeatureMatrix, IoError> {
    let lines = meaningful_lines(text);
    let first = lines
        .first()
        .ok_or_else(|| eof("empty input, expected a header"))?;
    if first.tokens.len() != 2 || first.tokens[0] != "featurematrix" {
        return Err(first.error("expected `featurematrix <feature_dim>`"));
    }
    let width: usize = number(first, first.tokens[1], "feature dimension")?;
    let mut ranks: Vec<Vec<(Vec<usize>, Vec<f64>)>> = Vec::new();
    for line in &lines[1..] {
        let sep = line
            .tokens
            .iter()
            .position(|&t| t == ":")
            .ok_or_else(|| line.error("missing `:` separator"))?;
        if sep < 2 {
            return Err(line.error("expected a rank and at least one vertex before `:`"));
        }
        let rank: usize = number(line, line.tokens[0], "rank")?;
        let cell = line.tokens[1..sep]
            .iter()
            .map(|t| number(line, t, "vertex"))
            .collect::<Result<Vec<usize>, _>>()?;
        let values = reals(line, &line.tokens[sep + 1..], width)?;
        if ranks.len() <= rank {
            ranks.resize(rank + 1, Vec::new());
        }
        ranks[rank].push((cell, values));
    }
    FeatureMatrix::new(width, ranks).map_err(|e| first.error(e.to_string()))
}
