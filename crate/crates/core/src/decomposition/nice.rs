//! Nice tree H-decompositions.
//!
//! Nice form: the root bag avoids `L`; a node has at most two children; a node with two
//! children has both child bags equal to its own; a node with one child differs from it
//! by a single non-base vertex, or drops the base vertices of a leaf child.

use super::tree::{TdNode, TreeHDecomposition};
use super::children_of;
use crate::error::{Error, Result};
use crate::graph::{difference, intersection, is_subset, union, Graph};

/// Node-count constant: a nice decomposition of width `w` on `n` vertices has at most
/// `NICE_NODE_FACTOR · (w+1) · max(n,1)` nodes.
pub const NICE_NODE_FACTOR: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeHDecomposition {
    pub tree: TreeHDecomposition,
    pub root: usize,
}

/// How a node relates to its children.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    /// Drops the base vertices of a leaf child.
    Strip,
    Join,
}

impl NiceTreeHDecomposition {
    pub fn width(&self) -> usize {
        self.tree.width()
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        self.tree.children()
    }

    /// Kind of node `t`, or `None` if it breaks the nice conditions.
    pub fn kind(&self, t: usize, children: &[usize]) -> Option<NiceKind> {
        let bag = &self.tree.nodes[t].bag;
        let base = &self.tree.base;
        match children {
            [] => Some(NiceKind::Leaf),
            [c] => {
                let cb = &self.tree.nodes[*c].bag;
                let added = difference(bag, cb);
                let removed = difference(cb, bag);
                let not_base = |v: usize| base.binary_search(&v).is_err();
                match (added.as_slice(), removed.as_slice()) {
                    ([v], []) if not_base(*v) => Some(NiceKind::Introduce(*v)),
                    ([], [v]) if not_base(*v) => Some(NiceKind::Forget(*v)),
                    _ if difference(cb, base) == *bag && !removed.is_empty() && is_subset(&removed, base) && self.tree.nodes.iter().all(|n| n.parent != Some(*c)) => {
                        Some(NiceKind::Strip)
                    }
                    _ => None,
                }
            }
            [a, b] if self.tree.nodes[*a].bag == *bag && self.tree.nodes[*b].bag == *bag => Some(NiceKind::Join),
            _ => None,
        }
    }

    pub fn validate(&self, g: &Graph) -> Vec<String> {
        let mut out = self.tree.validate(g);
        if !out.is_empty() {
            return out;
        }
        if self.tree.root() != Some(self.root) {
            out.push("root field does not name the parentless node".into());
            return out;
        }
        if !intersection(&self.tree.nodes[self.root].bag, &self.tree.base).is_empty() {
            out.push("root bag meets L".into());
        }
        let ch = self.children();
        for t in 0..self.tree.nodes.len() {
            if self.kind(t, &ch[t]).is_none() {
                out.push(format!("node {t} is not nice"));
            }
        }
        out
    }
}

/// `(κ(t), π(t))`: `π(t)` is the parent bag (empty at the root) and `κ(t)` is every
/// vertex in the subtree of `t` minus `π(t)`.
pub fn kappa_pi(nd: &NiceTreeHDecomposition, t: usize) -> (Vec<usize>, Vec<usize>) {
    let pi = nd.tree.nodes[t].parent.map(|p| nd.tree.nodes[p].bag.clone()).unwrap_or_default();
    let ch = nd.children();
    let mut below = Vec::new();
    let mut stack = vec![t];
    while let Some(x) = stack.pop() {
        below.extend_from_slice(&nd.tree.nodes[x].bag);
        stack.extend_from_slice(&ch[x]);
    }
    below.sort_unstable();
    below.dedup();
    (difference(&below, &pi), pi)
}

/// Normalises a tree H-decomposition into nice form without increasing its width and
/// keeping `L`. Base vertices stay grouped by their original host bag.
pub fn make_nice(d: &TreeHDecomposition) -> Result<NiceTreeHDecomposition> {
    let bad = d.shape_violations();
    if !bad.is_empty() {
        return Err(Error::InvalidDecomposition(bad.join("; ")));
    }
    let len = d.nodes.len();
    let old_root = d.root().expect("one root");
    let ch = children_of(d.nodes.iter().map(|n| n.parent), len);

    // Reduced bags, and base groups by host.
    let mut bag: Vec<Vec<usize>> = d.nodes.iter().map(|n| difference(&n.bag, &d.base)).collect();
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for (t, node) in d.nodes.iter().enumerate() {
        let g = intersection(&node.bag, &d.base);
        if !g.is_empty() {
            if !ch[t].is_empty() {
                return Err(Error::InvalidDecomposition(format!("node {t}: base vertices at a non-leaf")));
            }
            groups.push((t, g));
        }
    }

    // Contract edges whose bags are nested, keeping the larger bag.
    let mut parent: Vec<Option<usize>> = d.nodes.iter().map(|n| n.parent).collect();
    let mut merged: Vec<usize> = (0..len).collect();
    let mut alive = vec![true; len];
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..len {
            let Some(p) = parent[x].filter(|_| alive[x]) else { continue };
            if is_subset(&bag[x], &bag[p]) || is_subset(&bag[p], &bag[x]) {
                if bag[x].len() > bag[p].len() {
                    bag[p] = std::mem::take(&mut bag[x]);
                }
                alive[x] = false;
                merged[x] = p;
                for y in 0..len {
                    if alive[y] && parent[y] == Some(x) {
                        parent[y] = Some(p);
                    }
                }
                changed = true;
            }
        }
    }
    let find = |mut x: usize| {
        while merged[x] != x {
            x = merged[x];
        }
        x
    };
    let cch = children_of((0..len).map(|x| if alive[x] { parent[x] } else { None }), len);

    let mut b = NiceBuilder { nodes: Vec::new() };
    let root = b.push(bag[old_root].clone(), None);
    let mut host = vec![usize::MAX; len];
    let mut stack = vec![(old_root, root)];
    while let Some((x, id)) = stack.pop() {
        host[x] = id;
        let kids: Vec<usize> = cch[x].iter().copied().filter(|&c| alive[c]).collect();
        for (c, at) in b.spread(id, &bag[x], kids.len()).into_iter().enumerate() {
            let child = kids[c];
            let cid = b.path(at, &bag[x], &bag[child]);
            stack.push((child, cid));
        }
    }

    // Gadgets hanging each base group below its host.
    for (t, group) in groups {
        let tc = host[find(t)];
        let hb = b.nodes[tc].bag.clone();
        let full = union(&hb, &group);
        let has_children = b.nodes.iter().any(|n| n.parent == Some(tc));
        if !has_children {
            b.push(full, Some(tc));
        } else {
            let t1 = b.push(hb.clone(), Some(tc));
            for i in 0..b.nodes.len() {
                if b.nodes[i].parent == Some(tc) && i != t1 {
                    b.nodes[i].parent = Some(t1);
                }
            }
            let t2 = b.push(hb, Some(tc));
            b.push(full, Some(t2));
        }
    }
    let tree = TreeHDecomposition { nodes: b.nodes, base: d.base.clone(), class: d.class.clone() };
    Ok(NiceTreeHDecomposition { tree, root })
}

struct NiceBuilder {
    nodes: Vec<TdNode>,
}

impl NiceBuilder {
    fn push(&mut self, bag: Vec<usize>, parent: Option<usize>) -> usize {
        self.nodes.push(TdNode { bag, parent });
        self.nodes.len() - 1
    }

    /// Attachment points for `count` children below `at` (bag `b`), using a caterpillar
    /// of join nodes when there are two or more.
    fn spread(&mut self, at: usize, b: &[usize], count: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(count);
        let mut spine = at;
        for i in 0..count {
            if i + 1 == count {
                out.push(spine);
            } else {
                out.push(self.push(b.to_vec(), Some(spine)));
                spine = self.push(b.to_vec(), Some(spine));
            }
        }
        out
    }

    /// Forgets `from \ to` then introduces `to \ from`, both ascending; returns the node
    /// holding `to`.
    fn path(&mut self, at: usize, from: &[usize], to: &[usize]) -> usize {
        let mut cur = from.to_vec();
        let mut id = at;
        for v in difference(from, to) {
            cur.retain(|&x| x != v);
            id = self.push(cur.clone(), Some(id));
        }
        for v in difference(to, from) {
            cur = union(&cur, &[v]);
            id = self.push(cur.clone(), Some(id));
        }
        id
    }
}
