//! Dynamic programming over nice tree H-decompositions.
//!
//! A state labels every non-base vertex of a bag. Labels with positive weight mark
//! deleted vertices; certain label pairs may not meet on an edge. Edges between non-base
//! vertices are checked at the deepest node containing both ends (smallest id on ties),
//! while base vertices are handled by the problem's leaf rule.

use crate::decomposition::nice::{NiceKind, NiceTreeHDecomposition};
use crate::decomposition::depths_of;
use crate::error::{Error, Result};
use crate::graph::{difference, intersection, Graph};

const INF: u32 = u32::MAX;

/// Largest table accepted (states per node).
pub(crate) const STATE_LIMIT: usize = 1 << 22;

pub(crate) trait LabelProblem {
    const LABELS: usize;
    /// Whether the label is a deletion (counts towards the solution).
    fn deleted(label: u8) -> bool;
    /// Whether two adjacent vertices may carry these labels.
    fn compatible(a: u8, b: u8) -> bool;
    /// Cost and solution of the base part `base` of a leaf given labels on `q`.
    fn leaf(&self, g: &Graph, q: &[usize], labels: &[u8], base: &[usize]) -> Option<Vec<usize>>;
}

fn decode(mut s: usize, len: usize, r: usize) -> Vec<u8> {
    let mut out = vec![0u8; len];
    for x in out.iter_mut() {
        *x = (s % r) as u8;
        s /= r;
    }
    out
}

fn encode(labels: &[u8], r: usize) -> usize {
    labels.iter().rev().fold(0, |acc, &l| acc * r + l as usize)
}

pub(crate) fn solve<P: LabelProblem>(g: &Graph, nd: &NiceTreeHDecomposition, p: &P) -> Result<(usize, Vec<usize>)> {
    let r = P::LABELS;
    let tree = &nd.tree;
    let len = tree.nodes.len();
    let ch = nd.children();
    let mut kinds = Vec::with_capacity(len);
    for t in 0..len {
        kinds.push(nd.kind(t, &ch[t]).ok_or_else(|| Error::InvalidDecomposition(format!("node {t} is not nice")))?);
    }
    let qs: Vec<Vec<usize>> = tree.nodes.iter().map(|n| difference(&n.bag, &tree.base)).collect();
    if qs.iter().any(|q| r.checked_pow(q.len() as u32).is_none_or(|s| s > STATE_LIMIT)) {
        return Err(Error::TooLarge("decomposition too wide for the dynamic program".into()));
    }
    let depth = depths_of(&tree.nodes.iter().map(|n| n.parent).collect::<Vec<_>>()).expect("validated");

    // Edges between non-base vertices, grouped by their checking node.
    let mut assigned: Vec<Vec<(usize, usize)>> = vec![Vec::new(); len];
    let base_mask = crate::graph::to_mask(g.n(), &tree.base);
    for (u, v) in g.edges() {
        if base_mask[u] || base_mask[v] {
            continue;
        }
        let t = (0..len)
            .filter(|&t| qs[t].binary_search(&u).is_ok() && qs[t].binary_search(&v).is_ok())
            .max_by_key(|&t| (depth[t], std::cmp::Reverse(t)))
            .ok_or_else(|| Error::InvalidDecomposition(format!("edge {u}-{v} in no bag")))?;
        let pu = qs[t].binary_search(&u).unwrap();
        let pv = qs[t].binary_search(&v).unwrap();
        assigned[t].push((pu, pv));
    }

    // Post-order.
    let mut order = Vec::with_capacity(len);
    let mut stack = vec![nd.root];
    while let Some(t) = stack.pop() {
        order.push(t);
        stack.extend_from_slice(&ch[t]);
    }
    order.reverse();

    let mut costs: Vec<Vec<u32>> = vec![Vec::new(); len];
    // Label chosen for the forgotten vertex, per state of a forget node.
    let mut choices: Vec<Vec<u8>> = vec![Vec::new(); len];
    for &t in &order {
        let q = &qs[t];
        let size = r.pow(q.len() as u32);
        let mut cost = vec![INF; size];
        let base_part = intersection(&tree.nodes[t].bag, &tree.base);
        match kinds[t] {
            NiceKind::Leaf => {
                for (s, c) in cost.iter_mut().enumerate() {
                    let labels = decode(s, q.len(), r);
                    if let Some(x) = p.leaf(g, q, &labels, &base_part) {
                        *c = (labels.iter().filter(|&&l| P::deleted(l)).count() + x.len()) as u32;
                    }
                }
            }
            NiceKind::Strip => {
                cost = std::mem::take(&mut costs[ch[t][0]]);
            }
            NiceKind::Introduce(v) => {
                let child = std::mem::take(&mut costs[ch[t][0]]);
                let pos = q.binary_search(&v).unwrap();
                for (s, c) in cost.iter_mut().enumerate() {
                    let mut labels = decode(s, q.len(), r);
                    let lv = labels.remove(pos);
                    let sub = child[encode(&labels, r)];
                    if sub != INF {
                        *c = sub + P::deleted(lv) as u32;
                    }
                }
            }
            NiceKind::Forget(v) => {
                let child = std::mem::take(&mut costs[ch[t][0]]);
                let pos = qs[ch[t][0]].binary_search(&v).unwrap();
                let mut choice = vec![0u8; size];
                for s in 0..size {
                    let mut labels = decode(s, q.len(), r);
                    labels.insert(pos, 0);
                    for l in 0..r as u8 {
                        labels[pos] = l;
                        let sub = child[encode(&labels, r)];
                        if sub < cost[s] {
                            cost[s] = sub;
                            choice[s] = l;
                        }
                    }
                }
                choices[t] = choice;
            }
            NiceKind::Join => {
                let a = std::mem::take(&mut costs[ch[t][0]]);
                let b = std::mem::take(&mut costs[ch[t][1]]);
                for (s, c) in cost.iter_mut().enumerate() {
                    if a[s] != INF && b[s] != INF {
                        let labels = decode(s, q.len(), r);
                        let shared = labels.iter().filter(|&&l| P::deleted(l)).count() as u32;
                        *c = a[s] + b[s] - shared;
                    }
                }
            }
        }
        if !assigned[t].is_empty() {
            for (s, c) in cost.iter_mut().enumerate() {
                if *c != INF {
                    let labels = decode(s, q.len(), r);
                    if assigned[t].iter().any(|&(a, b)| !P::compatible(labels[a], labels[b])) {
                        *c = INF;
                    }
                }
            }
        }
        costs[t] = cost;
    }

    let (best_state, &best) = costs[nd.root]
        .iter().enumerate().min_by_key(|&(_, c)| *c).expect("nonempty table");
    if best == INF {
        return Err(Error::InvalidDecomposition("no feasible labelling (class mismatch?)".into()));
    }

    // Walk down choosing the recorded states.
    let mut solution = Vec::new();
    let mut stack = vec![(nd.root, decode(best_state, qs[nd.root].len(), r))];
    while let Some((t, labels)) = stack.pop() {
        let q = &qs[t];
        for (i, &l) in labels.iter().enumerate() {
            if P::deleted(l) {
                solution.push(q[i]);
            }
        }
        match kinds[t] {
            NiceKind::Leaf => {
                let base_part = intersection(&tree.nodes[t].bag, &tree.base);
                solution.extend(p.leaf(g, q, &labels, &base_part).expect("feasible state"));
            }
            NiceKind::Strip | NiceKind::Join => {
                for &c in &ch[t] {
                    stack.push((c, labels.clone()));
                }
            }
            NiceKind::Introduce(v) => {
                let mut sub = labels;
                sub.remove(q.binary_search(&v).unwrap());
                stack.push((ch[t][0], sub));
            }
            NiceKind::Forget(v) => {
                let c = ch[t][0];
                let l = choices[t][encode(&labels, r)];
                let mut sub = labels;
                sub.insert(qs[c].binary_search(&v).unwrap(), l);
                stack.push((c, sub));
            }
        }
    }
    solution.sort_unstable();
    solution.dedup();
    debug_assert_eq!(solution.len(), best as usize);
    Ok((best as usize, solution))
}
