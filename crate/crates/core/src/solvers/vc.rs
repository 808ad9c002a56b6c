//! Vertex Cover on H-elimination forests and nice tree H-decompositions.

use super::dp::{self, LabelProblem};
use super::{check_forest, check_nice, roots, BaseVc};
use crate::decomposition::{EliminationForest, NiceTreeHDecomposition};
use crate::error::Result;
use crate::graph::{difference, Graph};

const OUT: u8 = 0;
const IN: u8 = 1;

/// Exact vertex cover by branching on a maximum-degree vertex; usable as a base solver
/// for any class on small inputs.
pub fn vc_branching(g: &Graph) -> Result<Vec<usize>> {
    let mut alive = vec![true; g.n()];
    let mut best: Vec<usize> = (0..g.n()).collect();
    let mut cur = Vec::new();
    branch(g, &mut alive, &mut cur, &mut best);
    best.sort_unstable();
    Ok(best)
}

fn branch(g: &Graph, alive: &mut [bool], cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cur.len() >= best.len() {
        return;
    }
    let deg = |v: usize, alive: &[bool]| g.neighbors(v).iter().filter(|&&w| alive[w]).count();
    let pick = (0..g.n()).filter(|&v| alive[v]).max_by_key(|&v| (deg(v, alive), std::cmp::Reverse(v)));
    let v = match pick {
        Some(v) if deg(v, alive) > 0 => v,
        _ => {
            *best = cur.clone();
            return;
        }
    };
    // Take v.
    alive[v] = false;
    cur.push(v);
    branch(g, alive, cur, best);
    cur.pop();
    // Leave v: all its neighbours join the cover.
    let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
    for &w in &nb {
        alive[w] = false;
    }
    cur.extend_from_slice(&nb);
    branch(g, alive, cur, best);
    cur.truncate(cur.len() - nb.len());
    for &w in &nb {
        alive[w] = true;
    }
    alive[v] = true;
}

/// Forced neighbours of the kept vertices plus a base cover of the rest of `base`.
fn leaf_cover(g: &Graph, base: &[usize], kept: &[usize], solver: BaseVc) -> Result<Vec<usize>> {
    let mut forced: Vec<usize> = kept.iter().flat_map(|&s| g.neighbors(s)).copied().filter(|w| base.binary_search(w).is_ok()).collect();
    forced.sort_unstable();
    forced.dedup();
    let rest = difference(base, &forced);
    let (sub, map) = g.induced(&rest);
    forced.extend(solver(&sub)?.into_iter().map(|i| map[i]));
    Ok(forced)
}

/// Minimum vertex cover by 2-way branching over internal vertices of an elimination
/// forest, with `base` solving the remaining part of each leaf.
pub fn solve_vc_elim(g: &Graph, f: &EliminationForest, base: BaseVc) -> Result<Vec<usize>> {
    check_forest(g, f)?;
    let ch = f.children();
    let mut label = vec![u8::MAX; g.n()];
    let mut kept = Vec::new();
    let mut out = Vec::new();
    for r in roots(f) {
        out.extend(elim(g, f, &ch, r, &mut label, &mut kept, base)?.expect("covering every internal vertex is feasible"));
    }
    out.sort_unstable();
    Ok(out)
}

fn elim(
    g: &Graph,
    f: &EliminationForest,
    ch: &[Vec<usize>],
    t: usize,
    label: &mut [u8],
    kept: &mut Vec<usize>,
    base: BaseVc,
) -> Result<Option<Vec<usize>>> {
    let node = &f.nodes[t];
    if node.leaf {
        return leaf_cover(g, &node.bag, kept, base).map(Some);
    }
    let v = node.bag[0];
    let mut best: Option<Vec<usize>> = None;
    for l in [IN, OUT] {
        if l == OUT && g.neighbors(v).iter().any(|&w| label[w] == OUT) {
            continue;
        }
        label[v] = l;
        if l == OUT {
            kept.push(v);
        }
        let mut acc = Some(if l == IN { vec![v] } else { Vec::new() });
        for &c in &ch[t] {
            acc = match (acc, elim(g, f, ch, c, label, kept, base)?) {
                (Some(mut a), Some(b)) => {
                    a.extend(b);
                    Some(a)
                }
                _ => None,
            };
        }
        if l == OUT {
            kept.pop();
        }
        if let Some(a) = acc {
            if best.as_ref().is_none_or(|b| a.len() < b.len()) {
                best = Some(a);
            }
        }
    }
    label[v] = u8::MAX;
    Ok(best)
}

struct Vc<'a> {
    base: BaseVc<'a>,
}

impl LabelProblem for Vc<'_> {
    const LABELS: usize = 2;

    fn deleted(label: u8) -> bool {
        label == IN
    }

    fn compatible(a: u8, b: u8) -> bool {
        a == IN || b == IN
    }

    fn leaf(&self, g: &Graph, q: &[usize], labels: &[u8], base: &[usize]) -> Option<Vec<usize>> {
        let kept: Vec<usize> = q.iter().zip(labels).filter(|&(_, &l)| l == OUT).map(|(&v, _)| v).collect();
        // Edges inside the kept part are checked by the engine.
        leaf_cover(g, base, &kept, self.base).ok()
    }
}

/// Minimum vertex cover by dynamic programming over a nice tree H-decomposition.
pub fn solve_vc_dp(g: &Graph, nd: &NiceTreeHDecomposition, base: BaseVc) -> Result<(usize, Vec<usize>)> {
    check_nice(g, nd)?;
    dp::solve(g, nd, &Vc { base })
}
