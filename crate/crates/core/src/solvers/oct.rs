//! Odd Cycle Transversal on bipartite elimination forests and nice tree bip-decompositions.

use super::abc::abc_with_coloring;
use super::dp::{self, LabelProblem};
use super::{check_forest, check_nice, roots};
use crate::decomposition::{EliminationForest, NiceTreeHDecomposition};
use crate::error::{Error, Result};
use crate::graph::{proper_2_coloring, Graph, GraphClassSpec};

const S1: u8 = 0;
const S2: u8 = 1;
const SX: u8 = 2;

fn require_bip(class: &GraphClassSpec) -> Result<()> {
    match class {
        GraphClassSpec::Bipartite => Ok(()),
        other => Err(Error::InvalidClass(format!("expected a bipartite decomposition, got {}", other.name()))),
    }
}

/// ABC on `G[base]` with `B_i = N(side_i) ∩ base`; `None` if over `budget`.
fn leaf_abc(g: &Graph, base: &[usize], side1: &[usize], side2: &[usize], budget: usize) -> Option<Vec<usize>> {
    if base.is_empty() {
        return Some(Vec::new());
    }
    let (sub, map) = g.induced(base);
    let all: Vec<usize> = (0..sub.n()).collect();
    let f = proper_2_coloring(&sub, &all).expect("base part is bipartite");
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        pos[v] = i;
    }
    let near = |side: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> =
            side.iter().flat_map(|&s| g.neighbors(s)).filter(|&&w| pos[w] != usize::MAX).map(|&w| pos[w]).collect();
        out.sort_unstable();
        out.dedup();
        out
    };
    let x = abc_with_coloring(&sub, &f, &near(side1), &near(side2), budget)?;
    Some(x.into_iter().map(|i| map[i]).collect())
}

/// Minimum odd cycle transversal by 3-way branching over the internal vertices of a
/// bipartite elimination forest, with ABC at the leaves (budget = leaf depth).
pub fn solve_oct_elim(g: &Graph, f: &EliminationForest) -> Result<Vec<usize>> {
    require_bip(&f.class)?;
    check_forest(g, f)?;
    let ch = f.children();
    let depth = f.node_depths().expect("validated");
    let mut label = vec![u8::MAX; g.n()];
    let mut out = Vec::new();
    for r in roots(f) {
        out.extend(elim(g, f, &ch, &depth, r, &mut label).expect("deleting every internal vertex is feasible"));
    }
    out.sort_unstable();
    Ok(out)
}

fn elim(
    g: &Graph,
    f: &EliminationForest,
    ch: &[Vec<usize>],
    depth: &[usize],
    t: usize,
    label: &mut [u8],
) -> Option<Vec<usize>> {
    let node = &f.nodes[t];
    if node.leaf {
        let (mut s1, mut s2) = (Vec::new(), Vec::new());
        for (v, &l) in label.iter().enumerate() {
            match l {
                S1 => s1.push(v),
                S2 => s2.push(v),
                _ => {}
            }
        }
        return leaf_abc(g, &node.bag, &s1, &s2, depth[t]);
    }
    let v = node.bag[0];
    let mut best: Option<Vec<usize>> = None;
    for l in [S1, S2, SX] {
        if l != SX && g.neighbors(v).iter().any(|&w| label[w] == l) {
            continue;
        }
        label[v] = l;
        let mut acc = if l == SX { Some(vec![v]) } else { Some(Vec::new()) };
        for &c in &ch[t] {
            // ⊥ absorbs: one infeasible subtree kills the branch.
            acc = match (acc, elim(g, f, ch, depth, c, label)) {
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
        if let Some(a) = acc {
            if best.as_ref().is_none_or(|b| a.len() < b.len()) {
                best = Some(a);
            }
        }
    }
    label[v] = u8::MAX;
    best
}

struct Oct {
    budget: Option<usize>,
}

impl LabelProblem for Oct {
    const LABELS: usize = 3;

    fn deleted(label: u8) -> bool {
        label == SX
    }

    fn compatible(a: u8, b: u8) -> bool {
        a == SX || a != b
    }

    fn leaf(&self, g: &Graph, q: &[usize], labels: &[u8], base: &[usize]) -> Option<Vec<usize>> {
        let pick = |want: u8| -> Vec<usize> { q.iter().zip(labels).filter(|&(_, &l)| l == want).map(|(&v, _)| v).collect() };
        leaf_abc(g, base, &pick(S1), &pick(S2), self.budget.unwrap_or(base.len()))
    }
}

/// Minimum odd cycle transversal by dynamic programming over a nice tree
/// bip-decomposition. Returns the size and a witness.
pub fn solve_oct_dp(g: &Graph, nd: &NiceTreeHDecomposition) -> Result<(usize, Vec<usize>)> {
    solve_oct_dp_with_budget(g, nd, None)
}

/// As [`solve_oct_dp`] with the leaf ABC budget capped (the full base size when `None`).
pub fn solve_oct_dp_with_budget(g: &Graph, nd: &NiceTreeHDecomposition, budget: Option<usize>) -> Result<(usize, Vec<usize>)> {
    require_bip(&nd.tree.class)?;
    check_nice(g, nd)?;
    dp::solve(g, nd, &Oct { budget })
}
