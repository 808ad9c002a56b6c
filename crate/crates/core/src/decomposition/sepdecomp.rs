//! Separation decompositions: rooted trees of triples `(V_t, C_t, S_t)`.

use crate::error::{Error, Result};
use crate::graph::{
    components_within, contract_sets, difference, intersection, is_subset, to_mask, union, Graph,
    GraphClassSpec,
};
use crate::oracles::{brute_separable, SEPARABLE_GUARD};
use crate::separation::{
    find_extremal_separation, restricted_in, Finder, SearchStats, Separation, SeparationOutcome,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepNode {
    pub v: Vec<usize>,
    pub c: Vec<usize>,
    pub s: Vec<usize>,
    /// Parents always precede their children.
    pub parent: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationDecomposition {
    pub nodes: Vec<SepNode>,
    pub k1: usize,
    pub k2: usize,
    pub restricted: bool,
    pub class: GraphClassSpec,
}

impl SeparationDecomposition {
    pub fn ancestors(&self, t: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.nodes[t].parent;
        while let Some(p) = cur {
            out.push(p);
            cur = self.nodes[p].parent;
        }
        out
    }

    pub fn is_leaf(&self, t: usize) -> bool {
        !self.nodes.iter().any(|n| n.parent == Some(t))
    }

    fn is_ancestor(&self, a: usize, mut b: usize) -> bool {
        while let Some(p) = self.nodes[b].parent {
            if p == a {
                return true;
            }
            b = p;
        }
        false
    }

    /// Violations of all conditions. Inseparability of non-leaf pieces is checked with the
    /// brute-force oracle when the graph is small enough.
    pub fn validate(&self, g: &Graph) -> Vec<String> {
        let mut out = self.structural_violations(g);
        if out.is_empty() && g.n() <= SEPARABLE_GUARD {
            for (t, node) in self.nodes.iter().enumerate() {
                if !self.is_leaf(t) {
                    if let Ok(Some(_)) = brute_separable(g, &node.v, self.k1, &self.class, false) {
                        out.push(format!("node {t}: non-leaf V is separable"));
                    }
                }
            }
        }
        out
    }

    /// Everything except inseparability, which only holds under the width promise.
    pub fn structural_violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        let n = g.n();
        let mut owner = vec![usize::MAX; n];
        for (t, node) in self.nodes.iter().enumerate() {
            if let Some(p) = node.parent {
                if p >= t {
                    out.push(format!("node {t}: parent {p} does not precede it"));
                    return out;
                }
            }
            if node.v.is_empty() {
                out.push(format!("node {t}: empty V"));
            }
            if node.v.iter().chain(&node.c).chain(&node.s).any(|&v| v >= n) {
                out.push(format!("node {t}: vertex out of range"));
                return out;
            }
            for &v in &node.v {
                if owner[v] != usize::MAX {
                    out.push(format!("vertex {v} in V of nodes {} and {t}", owner[v]));
                }
                owner[v] = t;
            }
            if !g.is_connected_set(&node.v) {
                out.push(format!("node {t}: V is disconnected"));
            }
            let sep = Separation::new(node.c.clone(), node.s.clone());
            for msg in sep.violations(g, &self.class, self.k2) {
                out.push(format!("node {t}: {msg}"));
            }
            if !sep.weakly_covers(&node.v) {
                out.push(format!("node {t}: V not inside C ∪ S"));
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            out.push(format!("vertex {v} not covered"));
            return out;
        }
        for (u, v) in g.edges() {
            let (a, b) = (owner[u], owner[v]);
            if a == b {
                continue;
            }
            // The endpoint in the ancestor piece must lie in that piece's separator.
            let ok = |x: usize, p: usize, q: usize| self.is_ancestor(p, q) && self.nodes[p].s.binary_search(&x).is_ok();
            if !(ok(u, a, b) || ok(v, b, a)) {
                out.push(format!("edge {u}-{v} joins unrelated pieces {a} and {b}"));
            }
        }
        if self.restricted {
            for (t, node) in self.nodes.iter().enumerate() {
                let swallowed = self.ancestors(t).iter().filter(|&&s| is_subset(&self.nodes[s].v, &node.c)).count();
                if swallowed > self.k1 {
                    out.push(format!("node {t}: C swallows {swallowed} ancestors"));
                }
            }
        }
        out
    }
}

/// Builds a (restricted) separation decomposition of a connected graph. Non-leaf pieces
/// are `(H,k)`-inseparable; separators have size at most `k2 = h(k) + 1`, or
/// `h(k) + k + 1` in the restricted case.
pub fn build_separation_decomposition(
    g: &Graph,
    k: usize,
    class: &GraphClassSpec,
    restricted: bool,
) -> Result<SeparationDecomposition> {
    build_separation_decomposition_with_stats(g, k, class, restricted).map(|(d, _)| d)
}

/// As [`build_separation_decomposition`], also reporting finder recursion statistics.
pub fn build_separation_decomposition_with_stats(
    g: &Graph,
    k: usize,
    class: &GraphClassSpec,
    restricted: bool,
) -> Result<(SeparationDecomposition, SearchStats)> {
    if !g.is_connected() {
        return Err(Error::InvalidGraph("separation decomposition needs a connected graph".into()));
    }
    let finder = Finder::for_class(class);
    let k2 = finder.h(k) + if restricted { k } else { 0 } + 1;
    let mut b = Builder {
        g,
        k,
        finder,
        restricted,
        nodes: Vec::new(),
        open: Vec::new(),
        stats: SearchStats::default(),
    };
    if g.n() > 0 {
        b.region((0..g.n()).collect());
    }
    let d = SeparationDecomposition { nodes: b.nodes, k1: k, k2, restricted, class: class.clone() };
    Ok((d, b.stats))
}

struct Builder<'a> {
    g: &'a Graph,
    k: usize,
    finder: Finder,
    restricted: bool,
    nodes: Vec<SepNode>,
    /// Pieces the finder declared inseparable; only these may receive children.
    open: Vec<bool>,
    stats: SearchStats,
}

impl Builder<'_> {
    /// Covered vertices `⋃ (V_s ∩ S_s)` along the root path ending at `t`.
    fn path_cover(&self, t: usize) -> Vec<usize> {
        let mut acc = Vec::new();
        let mut cur = Some(t);
        while let Some(s) = cur {
            acc = union(&acc, &intersection(&self.nodes[s].v, &self.nodes[s].s));
            cur = self.nodes[s].parent;
        }
        acc
    }

    /// Deepest node whose root-path separators cover `N(region)`; smallest id on ties.
    fn attach_point(&self, region: &[usize]) -> Option<usize> {
        if self.nodes.is_empty() {
            return None;
        }
        let boundary = self.g.neighborhood(region);
        let mut best: Option<(usize, usize)> = None;
        for t in (0..self.nodes.len()).filter(|&t| self.open[t]) {
            if is_subset(&boundary, &self.path_cover(t)) {
                let depth = self.depth(t);
                if best.is_none_or(|(d, _)| depth > d) {
                    best = Some((depth, t));
                }
            }
        }
        best.map(|(_, t)| t)
    }

    fn depth(&self, mut t: usize) -> usize {
        let mut d = 0;
        while let Some(p) = self.nodes[t].parent {
            d += 1;
            t = p;
        }
        d
    }

    fn region(&mut self, region: Vec<usize>) {
        let parent = self.attach_point(&region);
        let family: Vec<Vec<usize>> = match parent {
            Some(p) if self.restricted => {
                let mut chain = vec![p];
                let mut cur = self.nodes[p].parent;
                while let Some(s) = cur {
                    chain.push(s);
                    cur = self.nodes[s].parent;
                }
                chain.reverse();
                chain.into_iter().map(|s| self.nodes[s].v.clone()).collect()
            }
            _ => Vec::new(),
        };
        let seed_vertex = region[0];
        let seed = Separation::new(vec![], vec![seed_vertex]);
        let g = self.g;
        let alive = vec![true; g.n()];
        let (k, restricted, finder) = (self.k, self.restricted, self.finder.clone());
        let stats = &mut self.stats;
        let mut find = |z: &[usize]| -> SeparationOutcome {
            if restricted {
                restricted_in(g, &alive, z, k, &family, &finder, stats)
            } else {
                finder.find_in(g, &alive, z, k, stats)
            }
        };
        let (piece, sep) = find_extremal_separation(g, &region, &[seed_vertex], seed, &mut find);
        self.open.push(piece.len() < region.len());
        self.nodes.push(SepNode { v: piece.clone(), c: sep.c, s: sep.s, parent });
        let rest = difference(&region, &piece);
        for comp in components_within(g, &to_mask(g.n(), &rest)) {
            self.region(comp);
        }
    }
}

/// Contracts every piece `V_t` (in node order); returns the quotient and vertex → node map.
pub fn quotient(g: &Graph, d: &SeparationDecomposition) -> Result<(Graph, Vec<usize>)> {
    let parts: Vec<Vec<usize>> = d.nodes.iter().map(|n| n.v.clone()).collect();
    contract_sets(g, &parts)
}
