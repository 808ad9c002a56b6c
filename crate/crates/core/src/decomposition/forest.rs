//! H-elimination forests and their construction from separation decompositions.

use super::sepdecomp::{build_separation_decomposition, quotient, SeparationDecomposition};
use super::treedepth::exact_treedepth;
use super::{children_of, depths_of, split_components, Built};
use crate::error::{Error, Result};
use crate::graph::{components_within, intersection, is_member_within, to_mask, Graph, GraphClassSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestNode {
    pub bag: Vec<usize>,
    pub parent: Option<usize>,
    pub leaf: bool,
}

/// Internal nodes hold one vertex each; leaves hold base components (members of `class`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationForest {
    pub nodes: Vec<ForestNode>,
    pub class: GraphClassSpec,
}

impl EliminationForest {
    pub fn children(&self) -> Vec<Vec<usize>> {
        children_of(self.nodes.iter().map(|n| n.parent), self.nodes.len())
    }

    /// Node depths (edges from the root), `None` on malformed parent pointers.
    pub fn node_depths(&self) -> Option<Vec<usize>> {
        depths_of(&self.nodes.iter().map(|n| n.parent).collect::<Vec<_>>())
    }

    /// Largest number of edges on a root-to-leaf path.
    pub fn depth(&self) -> usize {
        let Some(d) = self.node_depths() else { return 0 };
        self.nodes.iter().zip(&d).filter(|(n, _)| n.leaf).map(|(_, &d)| d).max().unwrap_or(0)
    }

    /// Union of all leaf bags.
    pub fn base_vertices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.nodes.iter().filter(|n| n.leaf).flat_map(|n| n.bag.iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// Structural checks that do not need the graph.
    pub(crate) fn shape_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.node_depths().is_none() {
            out.push("parent pointers are out of range or cyclic".into());
            return out;
        }
        let ch = self.children();
        for (t, node) in self.nodes.iter().enumerate() {
            if node.leaf != ch[t].is_empty() {
                out.push(format!("node {t}: leaf flag disagrees with its children"));
            }
            if !node.leaf && node.bag.len() != 1 {
                out.push(format!("node {t}: internal bag is not a singleton"));
            }
            if node.bag.windows(2).any(|w| w[0] >= w[1]) {
                out.push(format!("node {t}: bag not sorted"));
            }
        }
        out
    }

    pub fn validate(&self, g: &Graph) -> Vec<String> {
        let mut out = self.shape_violations();
        if !out.is_empty() {
            return out;
        }
        let n = g.n();
        let mut owner = vec![usize::MAX; n];
        for (t, node) in self.nodes.iter().enumerate() {
            for &v in &node.bag {
                if v >= n {
                    out.push(format!("node {t}: vertex {v} out of range"));
                    return out;
                }
                if owner[v] != usize::MAX {
                    out.push(format!("vertex {v} in bags {} and {t}", owner[v]));
                }
                owner[v] = t;
            }
            if node.leaf && !is_member_within(g, &self.class, &node.bag) {
                out.push(format!("leaf {t}: bag is not in the class"));
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            out.push(format!("vertex {v} in no bag"));
            return out;
        }
        let is_anc = |a: usize, mut b: usize| loop {
            if a == b {
                return true;
            }
            match self.nodes[b].parent {
                Some(p) => b = p,
                None => return false,
            }
        };
        for (u, v) in g.edges() {
            let (a, b) = (owner[u], owner[v]);
            if !is_anc(a, b) && !is_anc(b, a) {
                out.push(format!("edge {u}-{v} crosses unrelated subtrees"));
            }
        }
        out
    }

    /// Re-labels vertices through `map` and shifts node ids by `offset`.
    pub(crate) fn relabel(&self, map: &[usize], offset: usize) -> Vec<ForestNode> {
        self.nodes
            .iter()
            .map(|n| {
                let mut bag: Vec<usize> = n.bag.iter().map(|&v| map[v]).collect();
                bag.sort_unstable();
                ForestNode { bag, parent: n.parent.map(|p| p + offset), leaf: n.leaf }
            })
            .collect()
    }
}

/// Converts a separation decomposition plus an elimination forest of its quotient (with
/// singleton internal nodes and empty leaves) into an H-elimination forest of depth at
/// most `qforest.depth() · k2`.
pub fn ed_forest_from_sepdecomp(
    g: &Graph,
    d: &SeparationDecomposition,
    qforest: &EliminationForest,
) -> Result<EliminationForest> {
    let bad = d.structural_violations(g);
    if !bad.is_empty() {
        return Err(Error::InvalidDecomposition(bad.join("; ")));
    }
    let (q, _) = quotient(g, d)?;
    let bad = qforest.validate(&q);
    if !bad.is_empty() {
        return Err(Error::InvalidDecomposition(format!("quotient forest: {}", bad.join("; "))));
    }
    let qdepth_of_node = qforest.node_depths().expect("validated");
    let mut qnode = vec![0; q.n()];
    for (x, node) in qforest.nodes.iter().enumerate() {
        if !node.leaf {
            qnode[node.bag[0]] = x;
        }
    }
    let mut piece = vec![0; g.n()];
    for (t, node) in d.nodes.iter().enumerate() {
        for &v in &node.v {
            piece[v] = t;
        }
    }
    let mut conv = Converter { g, d, qforest, qnode, qdepth: qdepth_of_node, piece, nodes: Vec::new() };
    conv.build((0..g.n()).collect(), None)?;
    let mut nodes = conv.nodes;
    let ch = children_of(nodes.iter().map(|n| n.parent), nodes.len());
    for (t, node) in nodes.iter_mut().enumerate() {
        node.leaf = ch[t].is_empty();
    }
    Ok(EliminationForest { nodes, class: d.class.clone() })
}

struct Converter<'a> {
    g: &'a Graph,
    d: &'a SeparationDecomposition,
    qforest: &'a EliminationForest,
    qnode: Vec<usize>,
    qdepth: Vec<usize>,
    piece: Vec<usize>,
    nodes: Vec<ForestNode>,
}

impl Converter<'_> {
    fn is_q_ancestor(&self, a: usize, b: usize) -> bool {
        let (a, mut b) = (self.qnode[a], self.qnode[b]);
        loop {
            if a == b {
                return true;
            }
            match self.qforest.nodes[b].parent {
                Some(p) => b = p,
                None => return false,
            }
        }
    }

    fn build(&mut self, w: Vec<usize>, parent: Option<usize>) -> Result<()> {
        let n = self.g.n();
        for k in components_within(self.g, &to_mask(n, &w)) {
            let mut owners: Vec<usize> = k.iter().map(|&v| self.piece[v]).collect();
            owners.sort_unstable();
            owners.dedup();
            let j = *owners.iter().min_by_key(|&&t| (self.qdepth[self.qnode[t]], t)).unwrap();
            if owners.iter().any(|&t| !self.is_q_ancestor(j, t)) {
                return Err(Error::InvalidDecomposition("quotient forest has no common top for a connected piece".into()));
            }
            let node = &self.d.nodes[j];
            let s = intersection(&node.s, &k);
            if s.is_empty() {
                // K touches C_j and avoids S_j, so it lies inside C_j.
                self.nodes.push(ForestNode { bag: k, parent, leaf: true });
                continue;
            }
            let mut last = parent;
            for &v in &s {
                self.nodes.push(ForestNode { bag: vec![v], parent: last, leaf: false });
                last = Some(self.nodes.len() - 1);
            }
            let mut alive = to_mask(n, &k);
            for &v in &s {
                alive[v] = false;
            }
            let c_mask = to_mask(n, &node.c);
            let mut rest = Vec::new();
            for comp in components_within(self.g, &alive) {
                if c_mask[comp[0]] {
                    self.nodes.push(ForestNode { bag: comp, parent: last, leaf: true });
                } else {
                    rest.extend(comp);
                }
            }
            rest.sort_unstable();
            if !rest.is_empty() {
                self.build(rest, last)?;
            }
        }
        Ok(())
    }
}

/// H-elimination forest of depth at most `(k+1)·(h(k)+1)` when `ed_H(G) ≤ k`.
pub fn build_ed_forest(g: &Graph, k: usize, class: &GraphClassSpec) -> Result<Built<EliminationForest>> {
    let mut nodes = Vec::new();
    let mut promise_violations = Vec::new();
    let mut heuristic = false;
    for (sub, map) in split_components(g) {
        let d = build_separation_decomposition(&sub, k, class, false)?;
        let (q, _) = quotient(&sub, &d)?;
        let td = exact_treedepth(&q);
        heuristic |= !td.exact;
        if td.value > k + 1 {
            promise_violations.push(format!(
                "quotient treedepth {} exceeds k+1 = {} on the component containing vertex {}",
                td.value,
                k + 1,
                map[0]
            ));
        }
        let f = ed_forest_from_sepdecomp(&sub, &d, &td.forest)?;
        let offset = nodes.len();
        nodes.extend(f.relabel(&map, offset));
    }
    Ok(Built { value: EliminationForest { nodes, class: class.clone() }, promise_violations, heuristic })
}
