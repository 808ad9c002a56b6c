//! Bipartite matching and König's theorem.

use crate::error::{Error, Result};
use crate::graph::{proper_2_coloring, Graph};

/// Maximum matching of a bipartite graph as `mate[v]`, via augmenting paths.
pub fn maximum_matching(g: &Graph) -> Result<Vec<Option<usize>>> {
    let color = side(g)?;
    let mut mate = vec![None; g.n()];
    for v in 0..g.n() {
        if color[v] == 1 && mate[v].is_none() {
            let mut seen = vec![false; g.n()];
            augment(g, v, &mut mate, &mut seen);
        }
    }
    Ok(mate)
}

fn side(g: &Graph) -> Result<Vec<u8>> {
    let all: Vec<usize> = (0..g.n()).collect();
    proper_2_coloring(g, &all).ok_or_else(|| Error::InvalidGraph("graph is not bipartite".into()))
}

fn augment(g: &Graph, v: usize, mate: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &w in g.neighbors(v) {
        if seen[w] {
            continue;
        }
        seen[w] = true;
        if mate[w].is_none_or(|u| augment(g, u, mate, seen)) {
            mate[w] = Some(v);
            mate[v] = Some(w);
            return true;
        }
    }
    false
}

/// Minimum vertex cover of a bipartite graph. With `Z` the vertices reachable from free
/// left vertices by alternating paths, the cover is `(Left \ Z) ∪ (Right ∩ Z)`.
pub fn vc_bipartite(g: &Graph) -> Result<Vec<usize>> {
    let color = side(g)?;
    let mate = maximum_matching(g)?;
    let mut z = vec![false; g.n()];
    let mut stack: Vec<usize> = (0..g.n()).filter(|&v| color[v] == 1 && mate[v].is_none()).collect();
    for &v in &stack {
        z[v] = true;
    }
    while let Some(v) = stack.pop() {
        // Left to right along non-matching edges, right to left along matching edges.
        for &w in g.neighbors(v) {
            if z[w] || mate[v] == Some(w) {
                continue;
            }
            z[w] = true;
            if let Some(u) = mate[w] {
                if !z[u] {
                    z[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    Ok((0..g.n()).filter(|&v| (color[v] == 1) != z[v]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_bipartite;
    use crate::oracles::brute_min_vertex_cover;
    use crate::solvers::is_vertex_cover;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let pm = Graph::new(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(vc_bipartite(&pm).unwrap().len(), 3);
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(vc_bipartite(&star).unwrap(), vec![0]);
        assert!(vc_bipartite(&Graph::complete(3)).is_err());
        assert!(vc_bipartite(&Graph::empty(0)).unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn matches_brute_force(g in arb_bipartite(10)) {
            let x = vc_bipartite(&g).unwrap();
            prop_assert!(is_vertex_cover(&g, &x));
            prop_assert_eq!(x.len(), brute_min_vertex_cover(&g).unwrap().len());
        }
    }
}
