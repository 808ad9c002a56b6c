//! Tree H-decompositions.

use super::forest::EliminationForest;
use super::sepdecomp::{build_separation_decomposition, quotient, SeparationDecomposition};
use super::treewidth::exact_treewidth;
use super::{children_of, depths_of, split_components, Built};
use crate::error::{Error, Result};
use crate::graph::{difference, intersection, is_member_within, union, Graph, GraphClassSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TdNode {
    pub bag: Vec<usize>,
    pub parent: Option<usize>,
}

/// A rooted tree decomposition whose base vertices `L` each sit in exactly one leaf bag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeHDecomposition {
    pub nodes: Vec<TdNode>,
    /// Sorted base vertices `L`.
    pub base: Vec<usize>,
    pub class: GraphClassSpec,
}

impl TreeHDecomposition {
    /// `max(0, max |χ(t) \ L| − 1)`.
    pub fn width(&self) -> usize {
        self.nodes.iter().map(|n| difference(&n.bag, &self.base).len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn root(&self) -> Option<usize> {
        self.nodes.iter().position(|n| n.parent.is_none())
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        children_of(self.nodes.iter().map(|n| n.parent), self.nodes.len())
    }

    pub(crate) fn shape_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.nodes.is_empty() {
            out.push("no nodes".into());
            return out;
        }
        if depths_of(&self.nodes.iter().map(|n| n.parent).collect::<Vec<_>>()).is_none() {
            out.push("parent pointers are out of range or cyclic".into());
            return out;
        }
        let roots = self.nodes.iter().filter(|n| n.parent.is_none()).count();
        if roots != 1 {
            out.push(format!("{roots} roots"));
        }
        for (t, node) in self.nodes.iter().enumerate() {
            if node.bag.windows(2).any(|w| w[0] >= w[1]) {
                out.push(format!("node {t}: bag not sorted"));
            }
        }
        if self.base.windows(2).any(|w| w[0] >= w[1]) {
            out.push("L not sorted".into());
        }
        out
    }

    pub fn validate(&self, g: &Graph) -> Vec<String> {
        let mut out = self.shape_violations();
        if !out.is_empty() {
            return out;
        }
        let n = g.n();
        if self.nodes.iter().flat_map(|x| &x.bag).chain(&self.base).any(|&v| v >= n) {
            out.push("vertex out of range".into());
            return out;
        }
        let mut count = vec![0usize; n];
        let mut tops = vec![0usize; n];
        for node in &self.nodes {
            let pbag = node.parent.map(|p| &self.nodes[p].bag);
            for &v in &node.bag {
                count[v] += 1;
                if pbag.is_none_or(|b| b.binary_search(&v).is_err()) {
                    tops[v] += 1;
                }
            }
        }
        for v in 0..n {
            if count[v] == 0 {
                out.push(format!("vertex {v} in no bag"));
            } else if tops[v] != 1 {
                out.push(format!("occurrences of vertex {v} are disconnected"));
            }
        }
        for (u, v) in g.edges() {
            if !self.nodes.iter().any(|x| x.bag.binary_search(&u).is_ok() && x.bag.binary_search(&v).is_ok()) {
                out.push(format!("edge {u}-{v} in no bag"));
            }
        }
        let ch = self.children();
        for &v in &self.base {
            let hosts: Vec<usize> = (0..self.nodes.len()).filter(|&t| self.nodes[t].bag.binary_search(&v).is_ok()).collect();
            if hosts.len() != 1 {
                out.push(format!("base vertex {v} in {} bags", hosts.len()));
            } else if !ch[hosts[0]].is_empty() {
                out.push(format!("base vertex {v} at non-leaf node {}", hosts[0]));
            }
        }
        for (t, node) in self.nodes.iter().enumerate() {
            let inner = intersection(&node.bag, &self.base);
            if !is_member_within(g, &self.class, &inner) {
                out.push(format!("node {t}: base part is not in the class"));
            }
        }
        out
    }

    fn relabel(&self, map: &[usize], offset: usize) -> Vec<TdNode> {
        self.nodes
            .iter()
            .map(|x| {
                let mut bag: Vec<usize> = x.bag.iter().map(|&v| map[v]).collect();
                bag.sort_unstable();
                TdNode { bag, parent: x.parent.map(|p| p + offset) }
            })
            .collect()
    }
}

/// Turns a restricted separation decomposition and a tree decomposition of its quotient
/// into a tree H-decomposition of width at most `(w+1)·k2·(k1+k2+1)`, `w` the quotient width.
pub fn tree_decomp_from_sepdecomp(
    g: &Graph,
    d: &SeparationDecomposition,
    qtd: &TreeHDecomposition,
) -> Result<TreeHDecomposition> {
    if !d.restricted {
        return Err(Error::InvalidDecomposition("separation decomposition is not restricted".into()));
    }
    let bad = d.structural_violations(g);
    if !bad.is_empty() {
        return Err(Error::InvalidDecomposition(bad.join("; ")));
    }
    let (q, owner) = quotient(g, d)?;
    let bad = qtd.validate(&q);
    if !bad.is_empty() || !qtd.base.is_empty() {
        return Err(Error::InvalidDecomposition(format!("quotient decomposition: {}", bad.join("; "))));
    }
    let m = d.nodes.len();
    let top: Vec<Vec<usize>> = d.nodes.iter().map(|t| intersection(&t.v, &t.s)).collect();
    let inner: Vec<Vec<usize>> = d.nodes.iter().map(|t| difference(&t.v, &t.s)).collect();
    let mut a = vec![Vec::new(); m];
    for (u, v) in g.edges() {
        for (x, y) in [(u, v), (v, u)] {
            let (s, t) = (owner[x], owner[y]);
            if s != t && inner[t].binary_search(&y).is_ok() {
                a[t].push(s);
            }
        }
    }
    // Per quotient vertex t: (V_t ∩ S_t) ∪ ⋃_{s ∈ A_t} (V_s ∩ S_s).
    let reach: Vec<Vec<usize>> = (0..m)
        .map(|t| {
            a[t].sort_unstable();
            a[t].dedup();
            a[t].iter().fold(top[t].clone(), |acc, &s| union(&acc, &top[s]))
        })
        .collect();
    let mut nodes: Vec<TdNode> = qtd
        .nodes
        .iter()
        .map(|x| TdNode { bag: x.bag.iter().fold(Vec::new(), |acc, &t| union(&acc, &reach[t])), parent: x.parent })
        .collect();
    for t in 0..m {
        let x = (0..qtd.nodes.len()).find(|&x| qtd.nodes[x].bag.binary_search(&t).is_ok()).expect("validated");
        let bag = union(&nodes[x].bag, &inner[t]);
        nodes.push(TdNode { bag, parent: Some(x) });
    }
    let base = inner.into_iter().fold(Vec::new(), |acc, s| union(&acc, &s));
    Ok(TreeHDecomposition { nodes, base, class: d.class.clone() })
}

/// Tree H-decomposition of width at most `(w+1)·k2·(k+k2+1)` with `k2 = 2h(k)+k+1`,
/// where `w ≤ k+1` is the exact quotient width when `tw_H(G) ≤ k`.
pub fn build_tree_h_decomposition(g: &Graph, k: usize, class: &GraphClassSpec) -> Result<Built<TreeHDecomposition>> {
    let mut parts = Vec::new();
    let mut promise_violations = Vec::new();
    let mut heuristic = false;
    for (sub, map) in split_components(g) {
        let d = build_separation_decomposition(&sub, k, class, true)?;
        let (q, _) = quotient(&sub, &d)?;
        let tw = exact_treewidth(&q);
        heuristic |= !tw.exact;
        if tw.value > k + 1 {
            promise_violations.push(format!(
                "quotient treewidth {} exceeds k+1 = {} on the component containing vertex {}",
                tw.value,
                k + 1,
                map[0]
            ));
        }
        parts.push((tree_decomp_from_sepdecomp(&sub, &d, &tw.decomposition)?, map));
    }
    let value = join(parts, class);
    Ok(Built { value, promise_violations, heuristic })
}

/// Joins per-component decompositions under a fresh empty root (unless there is one part).
fn join(parts: Vec<(TreeHDecomposition, Vec<usize>)>, class: &GraphClassSpec) -> TreeHDecomposition {
    let mut base = Vec::new();
    let relabel_base = |td: &TreeHDecomposition, map: &[usize]| {
        let mut b: Vec<usize> = td.base.iter().map(|&v| map[v]).collect();
        b.sort_unstable();
        b
    };
    if parts.len() == 1 {
        let (td, map) = &parts[0];
        return TreeHDecomposition { nodes: td.relabel(map, 0), base: relabel_base(td, map), class: class.clone() };
    }
    let mut nodes = vec![TdNode { bag: vec![], parent: None }];
    for (td, map) in &parts {
        let offset = nodes.len();
        let root = td.root().expect("nonempty");
        let mut sub = td.relabel(map, offset);
        sub[root].parent = Some(0);
        nodes.extend(sub);
        base = union(&base, &relabel_base(td, map));
    }
    TreeHDecomposition { nodes, base, class: class.clone() }
}

/// Tree H-decomposition of width at most `max(d−1, 0)` from an elimination forest of depth
/// `d`: leaves in preorder are chained, each chain node carrying its ancestors' vertices.
pub fn ed_to_tree_decomposition(f: &EliminationForest) -> Result<TreeHDecomposition> {
    let bad = f.shape_violations();
    if !bad.is_empty() {
        return Err(Error::InvalidDecomposition(bad.join("; ")));
    }
    let ch = f.children();
    let mut order = Vec::new();
    let mut stack: Vec<(usize, Vec<usize>)> =
        (0..f.nodes.len()).rev().filter(|&t| f.nodes[t].parent.is_none()).map(|t| (t, Vec::new())).collect();
    while let Some((t, above)) = stack.pop() {
        if f.nodes[t].leaf {
            order.push((t, above));
            continue;
        }
        let here = union(&above, &f.nodes[t].bag);
        for &c in ch[t].iter().rev() {
            stack.push((c, here.clone()));
        }
    }
    let mut nodes = Vec::with_capacity(2 * order.len());
    for (i, (t, above)) in order.iter().enumerate() {
        let parent = if i == 0 { None } else { Some(2 * (i - 1)) };
        nodes.push(TdNode { bag: above.clone(), parent });
        nodes.push(TdNode { bag: union(above, &f.nodes[*t].bag), parent: Some(2 * i) });
    }
    if nodes.is_empty() {
        nodes.push(TdNode { bag: vec![], parent: None });
    }
    Ok(TreeHDecomposition { nodes, base: f.base_vertices(), class: f.class.clone() })
}
