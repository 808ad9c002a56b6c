//! Treedepth of small graphs (stand-in for an approximation algorithm on quotients).

use std::collections::HashMap;

use super::forest::{EliminationForest, ForestNode};
use crate::graph::{Graph, GraphClassSpec};

/// Largest graph solved exactly; beyond it a heuristic is used.
pub const TREEDEPTH_GUARD: usize = 20;

#[derive(Clone, Debug)]
pub struct TreedepthResult {
    /// Treedepth counting vertices (a single vertex has treedepth 1).
    pub value: usize,
    /// Singleton internal nodes with empty leaves appended; its edge-depth equals `value`.
    pub forest: EliminationForest,
    pub exact: bool,
}

/// Class attached to treedepth forests: edgeless graphs (all leaves are empty).
pub fn edgeless_class() -> GraphClassSpec {
    GraphClassSpec::forbidden(vec![Graph::path(2)]).expect("K2 is a valid family")
}

pub fn exact_treedepth(g: &Graph) -> TreedepthResult {
    let n = g.n();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let exact = n <= TREEDEPTH_GUARD;
    let mut solver = Td { adj, memo: HashMap::new(), exact };
    let mut nodes = Vec::new();
    let mut value = 0;
    if n > 0 {
        if exact {
            let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
            for comp in solver.components(full) {
                value = value.max(solver.td(comp).0);
                solver.emit(comp, None, &mut nodes);
            }
        } else {
            value = heuristic(g, &(0..n).collect::<Vec<_>>(), None, &mut nodes);
        }
    }
    TreedepthResult { value, forest: EliminationForest { nodes, class: edgeless_class() }, exact }
}

struct Td {
    adj: Vec<u32>,
    memo: HashMap<u32, (usize, usize)>,
    exact: bool,
}

impl Td {
    fn components(&self, mut within: u32) -> Vec<u32> {
        let mut out = Vec::new();
        while within != 0 {
            let mut comp = within & within.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v];
                }
                frontier = next & within & !comp;
                comp |= frontier;
            }
            out.push(comp);
            within &= !comp;
        }
        out
    }

    /// (treedepth, best root) of a connected vertex set.
    fn td(&mut self, mask: u32) -> (usize, usize) {
        if mask.count_ones() == 1 {
            return (1, mask.trailing_zeros() as usize);
        }
        if let Some(&r) = self.memo.get(&mask) {
            return r;
        }
        let mut best = (usize::MAX, 0);
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let mut worst = 0;
            for comp in self.components(mask & !(1 << v)) {
                worst = worst.max(self.td(comp).0);
                if 1 + worst >= best.0 {
                    break;
                }
            }
            if 1 + worst < best.0 {
                best = (1 + worst, v);
            }
        }
        self.memo.insert(mask, best);
        best
    }

    fn emit(&mut self, mask: u32, parent: Option<usize>, nodes: &mut Vec<ForestNode>) {
        debug_assert!(self.exact);
        let (_, root) = self.td(mask);
        let id = nodes.len();
        nodes.push(ForestNode { bag: vec![root], parent, leaf: false });
        let rest = mask & !(1 << root);
        if rest == 0 {
            nodes.push(ForestNode { bag: vec![], parent: Some(id), leaf: true });
        }
        for comp in self.components(rest) {
            self.emit(comp, Some(id), nodes);
        }
    }
}

/// Root at the vertex whose removal leaves the smallest largest component.
fn heuristic(g: &Graph, set: &[usize], parent: Option<usize>, nodes: &mut Vec<ForestNode>) -> usize {
    let (sub, map) = g.induced(set);
    let mut value = 0;
    for comp in crate::graph::connected_components(&sub) {
        let best = comp
            .iter()
            .copied()
            .min_by_key(|&v| {
                let mut alive = vec![false; sub.n()];
                for &w in &comp {
                    alive[w] = w != v;
                }
                crate::graph::components_within(&sub, &alive).iter().map(Vec::len).max().unwrap_or(0)
            })
            .unwrap();
        let id = nodes.len();
        nodes.push(ForestNode { bag: vec![map[best]], parent, leaf: false });
        let rest: Vec<usize> = comp.iter().filter(|&&w| w != best).map(|&w| map[w]).collect();
        let below = if rest.is_empty() {
            nodes.push(ForestNode { bag: vec![], parent: Some(id), leaf: true });
            0
        } else {
            heuristic(g, &rest, Some(id), nodes)
        };
        value = value.max(1 + below);
    }
    value
}
