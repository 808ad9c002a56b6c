//! Annotated bipartite colouring.
//!
//! Fix a proper 2-colouring `f` of each component. A set `X` is feasible exactly when
//! `G − X` has no path from `T1 = (B1 ∩ f⁻¹(2)) ∪ (B2 ∩ f⁻¹(1))` to
//! `T2 = (B1 ∩ f⁻¹(1)) ∪ (B2 ∩ f⁻¹(2))`: every surviving piece keeps or flips `f` as a
//! whole, and a piece meeting both sets would need both. Terminals may be deleted, so
//! this is a vertex cut with deletable endpoints.

use crate::error::{Error, Result};
use crate::flow::VertexFlow;
use crate::graph::{proper_2_coloring, Graph};

/// Minimum `X` with `|X| ≤ k` such that `G − X` has a proper 2-colouring putting `B1 \ X`
/// and `B2 \ X` on opposite sides, or `None` if every such set is larger than `k`.
pub fn solve_abc(g: &Graph, b1: &[usize], b2: &[usize], k: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if b1.iter().chain(b2).any(|&v| v >= n) {
        return Err(Error::InvalidSet("terminal out of range".into()));
    }
    let all: Vec<usize> = (0..n).collect();
    let f = proper_2_coloring(g, &all).ok_or_else(|| Error::InvalidGraph("ABC needs a bipartite graph".into()))?;
    Ok(abc_with_coloring(g, &f, b1, b2, k))
}

pub(crate) fn abc_with_coloring(g: &Graph, f: &[u8], b1: &[usize], b2: &[usize], k: usize) -> Option<Vec<usize>> {
    let mut t1: Vec<usize> = b1.iter().copied().filter(|&v| f[v] == 2).chain(b2.iter().copied().filter(|&v| f[v] == 1)).collect();
    let mut t2: Vec<usize> = b1.iter().copied().filter(|&v| f[v] == 1).chain(b2.iter().copied().filter(|&v| f[v] == 2)).collect();
    t1.sort_unstable();
    t1.dedup();
    t2.sort_unstable();
    t2.dedup();
    if t1.is_empty() || t2.is_empty() {
        return Some(Vec::new());
    }
    let n = g.n();
    let mut flow = VertexFlow::new(g, &vec![true; n], &t1, &t2, &vec![false; n]);
    if flow.max_flow(k) > k {
        return None;
    }
    Some(flow.cut_near_source())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::brute_abc;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let e = Graph::path(2);
        assert_eq!(solve_abc(&e, &[0], &[1], 0).unwrap(), Some(vec![]));
        assert_eq!(solve_abc(&e, &[0, 1], &[], 1).unwrap().unwrap().len(), 1);
        assert_eq!(solve_abc(&e, &[0, 1], &[], 0).unwrap(), None);
        assert!(solve_abc(&Graph::complete(3), &[], &[], 3).is_err());
    }

    #[test]
    fn shared_terminal_must_go() {
        let g = Graph::path(3);
        assert_eq!(solve_abc(&g, &[1], &[1], 1).unwrap(), Some(vec![1]));
    }

    fn bipartite_instance() -> impl Strategy<Value = (Graph, Vec<usize>, Vec<usize>, usize)> {
        (2usize..=10).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let len = pairs.len();
            (
                Just(n),
                Just(pairs),
                proptest::collection::vec(any::<bool>(), len),
                proptest::collection::vec(0u8..4, n),
                proptest::collection::vec(0u8..3, n),
                0usize..5,
            )
                .prop_map(|(n, pairs, keep, side, mark, k)| {
                    // Edges only between the two sides keep the graph bipartite.
                    let edges: Vec<(usize, usize)> = pairs
                        .into_iter()
                        .zip(keep)
                        .filter(|&((u, v), k)| k && side[u] % 2 != side[v] % 2)
                        .map(|(e, _)| e)
                        .collect();
                    let g = Graph::new(n, &edges).unwrap();
                    let b1 = (0..n).filter(|&v| mark[v] == 1).collect();
                    let b2 = (0..n).filter(|&v| mark[v] == 2).collect();
                    (g, b1, b2, k)
                })
        })
    }

    proptest! {
        #[test]
        fn matches_brute_force((g, b1, b2, k) in bipartite_instance()) {
            let fast = solve_abc(&g, &b1, &b2, k).unwrap();
            let slow = brute_abc(&g, &b1, &b2, k).unwrap();
            prop_assert_eq!(fast.as_ref().map(Vec::len), slow.as_ref().map(Vec::len));
            if let Some(x) = fast {
                // The returned set must itself be feasible.
                prop_assert_eq!(brute_abc(&feasibility_probe(&g, &x), &shift(&b1, &x), &shift(&b2, &x), 0).unwrap(), Some(vec![]));
            }
        }
    }

    /// `G − X` with vertices renumbered.
    fn feasibility_probe(g: &Graph, x: &[usize]) -> Graph {
        let keep: Vec<usize> = (0..g.n()).filter(|v| !x.contains(v)).collect();
        g.induced(&keep).0
    }

    fn shift(b: &[usize], x: &[usize]) -> Vec<usize> {
        b.iter().filter(|v| !x.contains(v)).map(|&v| v - x.iter().filter(|&&w| w < v).count()).collect()
    }
}
