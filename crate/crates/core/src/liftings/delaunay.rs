//! Planar Delaunay triangulation by Bowyer–Watson insertion.
//!
//! The convex hull is closed off with "ghost" triangles that share a single
//! vertex at infinity, so no bounding super-triangle is needed and hull
//! triangles are never lost. A ghost `(a, b, ∞)` has the unbounded side to
//! the left of `a → b`; its circumdisk is that open half-plane plus the open
//! segment `ab`.

use std::collections::HashSet;

use super::LiftError;
use crate::domains::{PointCloud, SimplicialComplex};

/// Absolute tolerance on the in-circle determinant below which four points
/// are treated as cocircular.
pub const DELAUNAY_TOLERANCE: f64 = 1e-9;

const GHOST: usize = usize::MAX;

/// Twice the signed area of `abc`; positive when counter-clockwise.
pub fn orient2d(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> f64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

/// In-circle determinant: positive when `d` lies inside the circumcircle of
/// the counter-clockwise triangle `abc`.
pub fn in_circle(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> f64 {
    let (adx, ady) = (a[0] - d[0], a[1] - d[1]);
    let (bdx, bdy) = (b[0] - d[0], b[1] - d[1]);
    let (cdx, cdy) = (c[0] - d[0], c[1] - d[1]);
    let ad = adx * adx + ady * ady;
    let bd = bdx * bdx + bdy * bdy;
    let cd = cdx * cdx + cdy * cdy;
    adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx)
}

/// Delaunay triangulation of a planar pointcloud, as a 2-dimensional
/// simplicial complex containing every point.
///
/// Collinear input and four (near-)cocircular points are rejected rather
/// than tie-broken.
pub fn lift_delaunay(pc: &PointCloud) -> Result<SimplicialComplex, LiftError> {
    if pc.dim() != 2 {
        return Err(LiftError::WrongDimension {
            expected: 2,
            found: pc.dim(),
        });
    }
    let pts: Vec<[f64; 2]> = pc.points().iter().map(|p| [p[0], p[1]]).collect();
    if pts.len() < 3 {
        return Err(LiftError::TooFewPoints {
            needed: 3,
            found: pts.len(),
        });
    }
    let triangles = triangulate(&pts)?;
    let mut sc = SimplicialComplex::closure_of(pts.len(), triangles, 2)?;
    sc.set_node_features(pc.node_features().cloned());
    Ok(sc)
}

fn triangulate(pts: &[[f64; 2]]) -> Result<Vec<Vec<usize>>, LiftError> {
    let mut sorted: Vec<(u64, u64, usize)> = pts
        .iter()
        .enumerate()
        .map(|(i, p)| (p[0].to_bits(), p[1].to_bits(), i))
        .collect();
    sorted.sort_unstable();
    if let Some(w) = sorted
        .windows(2)
        .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
    {
        return Err(LiftError::Degenerate(format!(
            "points {} and {} coincide",
            w[0].2.min(w[1].2),
            w[0].2.max(w[1].2)
        )));
    }

    let seed = seed_triangle(pts)?;
    let mut tris: Vec<[usize; 3]> = vec![seed];
    let [a, b, c] = seed;
    tris.extend([[b, a, GHOST], [c, b, GHOST], [a, c, GHOST]]);

    for p in (0..pts.len()).filter(|i| !seed.contains(i)) {
        let mut bad = Vec::new();
        for (t, tri) in tris.iter().enumerate() {
            if in_circumdisk(pts, *tri, p)? {
                bad.push(t);
            }
        }
        let directed: HashSet<(usize, usize)> = bad
            .iter()
            .flat_map(|&t| {
                let [x, y, z] = tris[t];
                [(x, y), (y, z), (z, x)]
            })
            .collect();
        let mut boundary: Vec<(usize, usize)> = directed
            .iter()
            .copied()
            .filter(|&(x, y)| !directed.contains(&(y, x)))
            .collect();
        boundary.sort_unstable();
        for &t in bad.iter().rev() {
            tris.swap_remove(t);
        }
        for (x, y) in boundary {
            tris.push(normalize_ghost([x, y, p]));
        }
    }

    Ok(tris
        .into_iter()
        .filter(|t| !t.contains(&GHOST))
        .map(|t| t.to_vec())
        .collect())
}

/// Three non-collinear points in counter-clockwise order: point 0, the
/// point farthest from it, and the point farthest from the line through
/// both (lowest index on ties).
fn seed_triangle(pts: &[[f64; 2]]) -> Result<[usize; 3], LiftError> {
    let sq = |a: [f64; 2], b: [f64; 2]| (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2);
    let a = 0;
    let mut b = 1;
    for i in 2..pts.len() {
        if sq(pts[a], pts[i]) > sq(pts[a], pts[b]) {
            b = i;
        }
    }
    let mut c = None;
    let mut best = 0.0;
    for i in (0..pts.len()).filter(|&i| i != a && i != b) {
        let area = orient2d(pts[a], pts[b], pts[i]).abs();
        if area > best {
            best = area;
            c = Some(i);
        }
    }
    // distance of c from line ab, relative to |ab|
    let base = sq(pts[a], pts[b]);
    let c = match c {
        Some(c) if best > 1e-12 * base => c,
        _ => return Err(LiftError::Collinear),
    };
    Ok(if orient2d(pts[a], pts[b], pts[c]) > 0.0 {
        [a, b, c]
    } else {
        [a, c, b]
    })
}

fn in_circumdisk(pts: &[[f64; 2]], [x, y, z]: [usize; 3], p: usize) -> Result<bool, LiftError> {
    let d = pts[p];
    if z == GHOST {
        let (a, b) = (pts[x], pts[y]);
        let o = orient2d(a, b, d);
        if o != 0.0 {
            return Ok(o > 0.0);
        }
        // on the hull line: inside only strictly between a and b
        let t = (d[0] - a[0]) * (b[0] - a[0]) + (d[1] - a[1]) * (b[1] - a[1]);
        let len = (b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2);
        return Ok(t > 0.0 && t < len);
    }
    let det = in_circle(pts[x], pts[y], pts[z], d);
    if det.abs() <= DELAUNAY_TOLERANCE {
        let mut quad = [x, y, z, p];
        quad.sort_unstable();
        return Err(LiftError::Degenerate(format!(
            "points {quad:?} are cocircular within tolerance {DELAUNAY_TOLERANCE:e}"
        )));
    }
    Ok(det > 0.0)
}

/// Rotates a triangle so that the ghost vertex, if any, comes last.
fn normalize_ghost(t: [usize; 3]) -> [usize; 3] {
    match t.iter().position(|&v| v == GHOST) {
        Some(0) => [t[1], t[2], t[0]],
        Some(1) => [t[2], t[0], t[1]],
        _ => t,
    }
}
