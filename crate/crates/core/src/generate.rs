//! Small-graph corpora: exhaustive enumeration of connected graphs up to isomorphism and
//! seeded random graphs.

use std::collections::HashSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`connected_graphs`].
pub const ENUMERATION_GUARD: usize = 9;

/// Canonical labelling: `perm[i]` is the vertex placed at position `i`. Two graphs are
/// isomorphic iff relabelling both by their canonical labellings gives equal graphs.
///
/// Individualisation-refinement: equitable partition refinement, then branching on the
/// first smallest non-singleton cell, keeping the lexicographically least adjacency matrix.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    assert!(g.n() <= 32, "canonical labelling is limited to 32 vertices");
    let adj: Vec<u32> = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let mut cells = vec![(0..g.n()).collect::<Vec<usize>>()];
    refine(&adj, &mut cells);
    let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
    search(&adj, cells, &mut best);
    best.map(|(_, p)| p).unwrap_or_default()
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    let perm = canonical_labeling(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v]))).collect();
    Graph::from_edges_dedup(g.n(), &edges)
}

fn refine(adj: &[u32], cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for i in 0..cells.len() {
            let splitter: u32 = cells[i].iter().fold(0, |m, &v| m | 1 << v);
            for j in 0..cells.len() {
                if cells[j].len() < 2 {
                    continue;
                }
                let count = |v: usize| (adj[v] & splitter).count_ones();
                let first = count(cells[j][0]);
                if cells[j].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut cell = std::mem::take(&mut cells[j]);
                cell.sort_by_key(|&v| (count(v), v));
                let mut parts: Vec<Vec<usize>> = Vec::new();
                for v in cell {
                    match parts.last_mut() {
                        Some(p) if count(p[0]) == count(v) => p.push(v),
                        _ => parts.push(vec![v]),
                    }
                }
                cells.splice(j..=j, parts);
                continue 'outer;
            }
        }
        return;
    }
}

fn search(adj: &[u32], cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u32>, Vec<usize>)>) {
    let target = cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)).map(|(i, _)| i);
    let Some(j) = target else {
        let perm: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let rows: Vec<u32> = perm
            .iter()
            .map(|&u| perm.iter().enumerate().fold(0u32, |m, (b, &w)| m | ((adj[u] >> w & 1) << b)))
            .collect();
        if best.as_ref().is_none_or(|(r, _)| rows < *r) {
            *best = Some((rows, perm));
        }
        return;
    };
    for &v in &cells[j] {
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[j].iter().copied().filter(|&w| w != v).collect();
        next.splice(j..=j, [vec![v], rest]);
        refine(adj, &mut next);
        search(adj, next, best);
    }
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class, in canonical
/// form and sorted by edge list.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > ENUMERATION_GUARD {
        return Err(Error::TooLarge(format!("enumeration accepts at most {ENUMERATION_GUARD} vertices, got {n}")));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // Every connected graph has a vertex whose removal keeps it connected, so extending
    // the previous level by one vertex with a nonempty neighbourhood reaches every class.
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = HashSet::new();
        for g in &level {
            let edges = g.edges();
            for mask in 1u32..1 << (size - 1) {
                let mut e = edges.clone();
                e.extend((0..size - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, size - 1)));
                seen.insert(canonical_form(&Graph::new(size, &e).expect("simple extension")));
            }
        }
        level = seen.into_iter().collect();
        level.sort_by_key(|g| g.edges());
    }
    Ok(level)
}

/// Connected graphs on `1..=n` vertices, smallest first.
pub fn connected_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for size in 1..=n {
        out.extend(connected_graphs(size)?);
    }
    Ok(out)
}

/// Erdős-Rényi graph `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("simple by construction")
}

/// Random bipartite graph: sides drawn uniformly, cross pairs kept with probability `p`.
pub fn random_bipartite<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("simple by construction")
}
