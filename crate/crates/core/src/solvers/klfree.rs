//! K_ℓ-free Deletion on K_ℓ-free elimination forests.

use super::{check_forest, roots};
use crate::decomposition::EliminationForest;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphClassSpec};

/// A clique of size `l` among the alive vertices (lexicographically first), if any.
pub fn find_clique(g: &Graph, alive: &[bool], l: usize) -> Option<Vec<usize>> {
    if l == 0 {
        return Some(Vec::new());
    }
    let mut cur = Vec::with_capacity(l);
    for v in 0..g.n() {
        if alive[v] {
            let cand: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v && alive[w]).collect();
            cur.push(v);
            if extend(g, &cand, l, &mut cur) {
                return Some(cur);
            }
            cur.pop();
        }
    }
    None
}

fn extend(g: &Graph, cand: &[usize], l: usize, cur: &mut Vec<usize>) -> bool {
    if cur.len() == l {
        return true;
    }
    if cur.len() + cand.len() < l {
        return false;
    }
    for (i, &v) in cand.iter().enumerate() {
        let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        cur.push(v);
        if extend(g, &next, l, cur) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Minimum `X ⊆ V \ U` with `|X| ≤ k` and `G − X` K_ℓ-free, by branching on the
/// deletable vertices of a clique. `None` if no such set exists.
pub fn solve_klfree_fdfv(g: &Graph, u: &[usize], k: usize, l: usize) -> Option<Vec<usize>> {
    let mut keep = vec![false; g.n()];
    for &v in u {
        keep[v] = true;
    }
    let mut alive = vec![true; g.n()];
    let mut x = Vec::new();
    // Iterative deepening returns a minimum set.
    (0..=k.min(g.n())).find_map(|budget| fdfv(g, &keep, &mut alive, &mut x, budget, l))
}

fn fdfv(g: &Graph, keep: &[bool], alive: &mut [bool], x: &mut Vec<usize>, budget: usize, l: usize) -> Option<Vec<usize>> {
    let Some(clique) = find_clique(g, alive, l) else {
        let mut out = x.clone();
        out.sort_unstable();
        return Some(out);
    };
    if budget == 0 {
        return None;
    }
    for v in clique.into_iter().filter(|&v| !keep[v]) {
        alive[v] = false;
        x.push(v);
        let found = fdfv(g, keep, alive, x, budget - 1, l);
        x.pop();
        alive[v] = true;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Minimum K_ℓ-free deletion set by 2-way branching over internal vertices of a
/// K_ℓ-free elimination forest; leaves are finished with [`solve_klfree_fdfv`] on
/// `G[χ(t) ∪ S_O]` with the kept ancestors undeletable and budget equal to the leaf depth.
pub fn solve_klfree_elim(g: &Graph, f: &EliminationForest, l: usize) -> Result<Vec<usize>> {
    if l < 2 {
        return Err(Error::InvalidClass("ℓ must be at least 2".into()));
    }
    if f.class != GraphClassSpec::clique_free(l)? {
        return Err(Error::InvalidClass(format!("expected a K{l}-free decomposition, got {}", f.class.name())));
    }
    check_forest(g, f)?;
    let ch = f.children();
    let depth = f.node_depths().expect("validated");
    let mut kept = Vec::new();
    let mut out = Vec::new();
    for r in roots(f) {
        out.extend(elim(g, f, &ch, &depth, r, &mut kept, l).expect("deleting every internal vertex is feasible"));
    }
    out.sort_unstable();
    Ok(out)
}

fn elim(g: &Graph, f: &EliminationForest, ch: &[Vec<usize>], depth: &[usize], t: usize, kept: &mut Vec<usize>, l: usize) -> Option<Vec<usize>> {
    let node = &f.nodes[t];
    if node.leaf {
        let mut vs = kept.clone();
        vs.extend_from_slice(&node.bag);
        let (sub, map) = g.induced(&vs);
        let u: Vec<usize> = (0..sub.n()).filter(|&i| kept.contains(&map[i])).collect();
        let x = solve_klfree_fdfv(&sub, &u, depth[t], l)?;
        return Some(x.into_iter().map(|i| map[i]).collect());
    }
    let v = node.bag[0];
    let mut best: Option<Vec<usize>> = None;
    for keep_v in [false, true] {
        if keep_v {
            kept.push(v);
            let mut alive = vec![false; g.n()];
            for &w in kept.iter() {
                alive[w] = true;
            }
            if find_clique(g, &alive, l).is_some() {
                kept.pop();
                continue;
            }
        }
        let mut acc = Some(if keep_v { Vec::new() } else { vec![v] });
        for &c in &ch[t] {
            acc = match (acc, elim(g, f, ch, depth, c, kept, l)) {
                (Some(mut a), Some(b)) => {
                    a.extend(b);
                    Some(a)
                }
                _ => None,
            };
            if acc.is_none() {
                break;
            }
        }
        if keep_v {
            kept.pop();
        }
        if let Some(a) = acc {
            if best.as_ref().is_none_or(|b| a.len() < b.len()) {
                best = Some(a);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::build_ed_forest;
    use crate::graph::tests::arb_graph;
    use crate::oracles::{brute_ed, brute_min_deletion};
    use crate::solvers::is_klfree_deletion;
    use proptest::prelude::*;

    #[test]
    fn fdfv_examples() {
        let k3 = Graph::complete(3);
        let x = solve_klfree_fdfv(&k3, &[0], 1, 3).unwrap();
        assert!(x == vec![1] || x == vec![2]);
        assert_eq!(solve_klfree_fdfv(&k3, &[0, 1, 2], 3, 3), None);
        assert_eq!(solve_klfree_fdfv(&Graph::cycle(5), &[], 0, 3), Some(vec![]));
    }

    #[test]
    fn clique_search() {
        let g = Graph::complete(4);
        assert_eq!(find_clique(&g, &[true; 4], 3), Some(vec![0, 1, 2]));
        assert_eq!(find_clique(&g, &[true, true, false, false], 3), None);
    }

    #[test]
    fn elim_examples() {
        let class = GraphClassSpec::clique_free(3).unwrap();
        let c6 = Graph::cycle(6);
        let f = build_ed_forest(&c6, 0, &class).unwrap().value;
        assert!(solve_klfree_elim(&c6, &f, 3).unwrap().is_empty());
        let k4 = Graph::complete(4);
        let f = build_ed_forest(&k4, 2, &class).unwrap().value;
        assert_eq!(solve_klfree_elim(&k4, &f, 3).unwrap().len(), 2);
        assert!(solve_klfree_elim(&k4, &f, 4).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn matches_brute_force(g in arb_graph(8)) {
            let class = GraphClassSpec::clique_free(3).unwrap();
            let (opt, _) = brute_min_deletion(&g, &class).unwrap();
            let k = brute_ed(&g, &class).unwrap();
            let f = build_ed_forest(&g, k, &class).unwrap().value;
            let x = solve_klfree_elim(&g, &f, 3).unwrap();
            prop_assert!(is_klfree_deletion(&g, &x, 3));
            prop_assert_eq!(x.len(), opt);
            let depth = f.node_depths().unwrap();
            for (t, node) in f.nodes.iter().enumerate().filter(|(_, n)| n.leaf) {
                let hit = node.bag.iter().filter(|v| x.binary_search(v).is_ok()).count();
                prop_assert!(hit <= depth[t]);
            }
        }
    }
}
