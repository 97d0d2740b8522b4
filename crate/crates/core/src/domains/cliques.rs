//! Clique enumeration shared by the clique-based liftings.

use std::collections::BTreeSet;

use super::Graph;

/// All maximal cliques of `g`, each sorted, listed lexicographically.
///
/// Bron–Kerbosch with Tomita pivoting; the output is sorted afterwards so
/// the recursion order never leaks into results.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let adj: Vec<BTreeSet<usize>> = g
        .adjacency()
        .into_iter()
        .map(|l| l.into_iter().collect())
        .collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(
        &adj,
        &mut r,
        (0..g.n()).collect(),
        BTreeSet::new(),
        &mut out,
    );
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    adj: &[BTreeSet<usize>],
    r: &mut Vec<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (adj[u].intersection(&p).count(), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    let branch: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
    for v in branch {
        let np = p.intersection(&adj[v]).copied().collect();
        let nx = x.intersection(&adj[v]).copied().collect();
        r.push(v);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.remove(&v);
        x.insert(v);
    }
}

/// Every clique of `g` with at most `max_size` vertices, grouped by size
/// (`out[s - 1]` holds the `s`-cliques), each group lexicographic.
pub fn cliques(g: &Graph, max_size: usize) -> Vec<Vec<Vec<usize>>> {
    let adj = g.adjacency();
    let mut out = vec![Vec::new(); max_size];
    if max_size == 0 {
        return out;
    }
    let mut current = Vec::with_capacity(max_size);
    for v in 0..g.n() {
        let higher: Vec<usize> = adj[v].iter().copied().filter(|&w| w > v).collect();
        current.push(v);
        extend(&adj, &mut current, &higher, max_size, &mut out);
        current.pop();
    }
    for group in &mut out {
        group.sort();
    }
    out
}

fn extend(
    adj: &[Vec<usize>],
    current: &mut Vec<usize>,
    candidates: &[usize],
    max_size: usize,
    out: &mut [Vec<Vec<usize>>],
) {
    out[current.len() - 1].push(current.clone());
    if current.len() == max_size {
        return;
    }
    for (i, &w) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|u| adj[w].binary_search(u).is_ok())
            .collect();
        current.push(w);
        extend(adj, current, &next, max_size, out);
        current.pop();
    }
}
