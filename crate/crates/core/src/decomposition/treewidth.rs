//! Treewidth of small graphs by dynamic programming over elimination orders.

use super::tree::{TdNode, TreeHDecomposition};
use crate::graph::{Graph, GraphClassSpec};

/// Largest graph solved exactly; beyond it the min-fill heuristic is used.
pub const TREEWIDTH_GUARD: usize = 18;

#[derive(Clone, Debug)]
pub struct TreewidthResult {
    pub value: usize,
    /// Plain tree decomposition (no base vertices).
    pub decomposition: TreeHDecomposition,
    pub exact: bool,
}

pub fn exact_treewidth(g: &Graph) -> TreewidthResult {
    let n = g.n();
    if n == 0 {
        let decomposition = TreeHDecomposition {
            nodes: vec![TdNode { bag: vec![], parent: None }],
            base: vec![],
            class: GraphClassSpec::Bipartite,
        };
        return TreewidthResult { value: 0, decomposition, exact: true };
    }
    let exact = n <= TREEWIDTH_GUARD;
    let order = if exact { dp_order(g) } else { min_fill_order(g) };
    let decomposition = from_order(g, &order);
    TreewidthResult { value: decomposition.width(), decomposition, exact }
}

/// Optimal elimination order: TW(S) = min over v ∈ S of max(TW(S−v), |Q(S−v, v)|), where
/// Q(S, v) are the vertices outside S ∪ {v} reachable from v through S.
fn dp_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let full = (1u32 << n) - 1;
    let q = |s: u32, v: usize| -> u32 {
        let within = s | 1 << v;
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[x];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        let mut nb = 0;
        let mut f = seen;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            nb |= adj[x];
        }
        (nb & !within).count_ones()
    };
    let size = 1usize << n;
    let mut tw = vec![u8::MAX; size];
    let mut last = vec![0u8; size];
    tw[0] = 0;
    for s in 1..size as u32 {
        let mut best = u8::MAX;
        let mut arg = 0;
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let prev = tw[(s & !(1 << v)) as usize];
            if prev >= best {
                continue;
            }
            let val = prev.max(q(s & !(1 << v), v) as u8);
            if val < best {
                best = val;
                arg = v as u8;
            }
        }
        tw[s as usize] = best;
        last[s as usize] = arg;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = last[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    order
}

/// Greedy order: repeatedly eliminate the vertex adding the fewest fill edges.
fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let fill = |v: usize, adj: &Vec<Vec<bool>>| {
            let nb: Vec<usize> = (0..n).filter(|&w| !gone[w] && adj[v][w]).collect();
            let mut f = 0;
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if !adj[nb[i]][nb[j]] {
                        f += 1;
                    }
                }
            }
            f
        };
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| fill(v, &adj)).unwrap();
        let nb: Vec<usize> = (0..n).filter(|&w| !gone[w] && adj[v][w]).collect();
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
        gone[v] = true;
        order.push(v);
    }
    order
}

/// Tree decomposition realising an elimination order: the bag of `v` is `v` plus its later
/// neighbours in the filled graph, hung below the bag of the earliest such neighbour.
fn from_order(g: &Graph, order: &[usize]) -> TreeHDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut later: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect()).collect();
    let mut nodes = Vec::with_capacity(n);
    let mut parent_vertex = vec![None; n];
    for &v in order {
        let mut nb = std::mem::take(&mut later[v]);
        nb.sort_unstable();
        nb.dedup();
        for &a in &nb {
            for &b in &nb {
                if pos[b] > pos[a] {
                    later[a].push(b);
                }
            }
        }
        parent_vertex[v] = nb.iter().copied().min_by_key(|&w| pos[w]);
        let mut bag = nb;
        bag.push(v);
        bag.sort_unstable();
        nodes.push(bag);
    }
    // Node i belongs to order[i]; parentless nodes hang below the last one.
    let root = n - 1;
    let td_nodes = (0..n)
        .map(|i| {
            let parent = match parent_vertex[order[i]] {
                Some(w) => Some(pos[w]),
                None if i == root => None,
                None => Some(root),
            };
            TdNode { bag: nodes[i].clone(), parent }
        })
        .collect();
    TreeHDecomposition { nodes: td_nodes, base: vec![], class: GraphClassSpec::Bipartite }
}
