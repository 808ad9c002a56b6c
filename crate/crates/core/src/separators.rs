//! Minimum vertex separators and important separators.
//!
//! An `(X,Y)`-separator is a set `S ⊆ V \ (X ∪ Y)` such that no path joins `X` and `Y` in
//! `G − S`. It is important when it is inclusion-minimal and no separator of at most the
//! same size has a strictly larger region `R_S(X)` reachable from `X`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::flow::VertexFlow;
use crate::graph::{from_mask, to_mask, Graph};

/// Vertices reachable from `X \ S` in `G − S`, sorted.
pub fn reachable(g: &Graph, x: &[usize], s: &[usize]) -> Vec<usize> {
    let mut alive = vec![true; g.n()];
    for &v in s {
        alive[v] = false;
    }
    from_mask(&reach_mask(g, &alive, x))
}

/// Reachability from the alive members of `x` inside `G[alive]`.
pub(crate) fn reach_mask(g: &Graph, alive: &[bool], x: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for &v in x {
        if alive[v] && !seen[v] {
            seen[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if alive[w] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Outcome of a bounded minimum-cut computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Cut {
    /// An edge joins X and Y.
    Adjacent,
    /// Every separator is larger than the cap.
    TooLarge,
    Separator(Vec<usize>),
}

fn adjacent(g: &Graph, alive: &[bool], x: &[usize], y_mask: &[bool]) -> bool {
    x.iter().any(|&v| alive[v] && (y_mask[v] || g.neighbors(v).iter().any(|&w| alive[w] && y_mask[w])))
}

fn terminal_mask(n: usize, x: &[usize], y: &[usize]) -> Vec<bool> {
    let mut m = to_mask(n, x);
    for &v in y {
        m[v] = true;
    }
    m
}

/// Minimum `(X,Y)`-separator in `G[alive]` of size at most `cap`, farthest from `X`.
pub(crate) fn farthest_min_cut(g: &Graph, alive: &[bool], x: &[usize], y: &[usize], cap: usize) -> Cut {
    let y_mask = to_mask(g.n(), y);
    if adjacent(g, alive, x, &y_mask) {
        return Cut::Adjacent;
    }
    let mut flow = VertexFlow::new(g, alive, x, y, &terminal_mask(g.n(), x, y));
    if flow.max_flow(cap) > cap {
        return Cut::TooLarge;
    }
    Cut::Separator(flow.cut_near_sink())
}

/// Size of a minimum `(X,Y)`-separator in `G[alive]` if it is at most `limit`.
pub(crate) fn min_cut_size(g: &Graph, alive: &[bool], x: &[usize], y: &[usize], limit: usize) -> Option<usize> {
    let y_mask = to_mask(g.n(), y);
    if adjacent(g, alive, x, &y_mask) {
        return None;
    }
    let mut flow = VertexFlow::new(g, alive, x, y, &terminal_mask(g.n(), x, y));
    let value = flow.max_flow(limit);
    (value <= limit).then_some(value)
}

fn check_terminals(g: &Graph, x: &[usize], y: &[usize]) -> Result<()> {
    if x.iter().chain(y).any(|&v| v >= g.n()) {
        return Err(Error::InvalidSet("terminal out of range".into()));
    }
    let xm = to_mask(g.n(), x);
    if y.iter().any(|&v| xm[v]) {
        return Err(Error::InvalidSet("X and Y intersect".into()));
    }
    Ok(())
}

/// Minimum `(X,Y)`-separator of size at most `cap`, chosen farthest from `X`.
/// `Ok(None)` when the minimum exceeds `cap`; `Err(Adjacent)` when an edge joins X and Y.
pub fn min_vertex_separator(g: &Graph, x: &[usize], y: &[usize], cap: usize) -> Result<Option<Vec<usize>>> {
    check_terminals(g, x, y)?;
    match farthest_min_cut(g, &vec![true; g.n()], x, y, cap) {
        Cut::Adjacent => Err(Error::Adjacent),
        Cut::TooLarge => Ok(None),
        Cut::Separator(s) => Ok(Some(s)),
    }
}

/// Whether `s` is an important `(X,Y)`-separator in `G[alive]`.
pub(crate) fn is_important_in(g: &Graph, alive: &[bool], x: &[usize], y: &[usize], s: &[usize]) -> bool {
    let n = g.n();
    let terminals = terminal_mask(n, x, y);
    if s.iter().any(|&v| terminals[v] || !alive[v]) {
        return false;
    }
    let mut rest = alive.to_vec();
    for &v in s {
        rest[v] = false;
    }
    let from_x = reach_mask(g, &rest, x);
    if y.iter().any(|&v| from_x[v]) {
        return false;
    }
    let from_y = reach_mask(g, &rest, y);
    let minimal = s.iter().all(|&v| {
        let nb = g.neighbors(v);
        nb.iter().any(|&w| from_x[w]) && nb.iter().any(|&w| from_y[w])
    });
    if !minimal {
        return false;
    }
    let region = from_mask(&from_x);
    s.iter().all(|&v| {
        let mut bigger = region.clone();
        bigger.push(v);
        min_cut_size(g, alive, &bigger, y, s.len()).is_none()
    })
}

/// Whether `s` is an important `(X,Y)`-separator in `G`.
pub fn is_important(g: &Graph, x: &[usize], y: &[usize], s: &[usize]) -> bool {
    is_important_in(g, &vec![true; g.n()], x, y, s)
}

/// Emits every important `(X,Y)`-separator of size at most `k` exactly once and returns
/// how many were emitted. Emitted sets are sorted.
pub fn enumerate_important_separators(
    g: &Graph,
    x: &[usize],
    y: &[usize],
    k: usize,
    emit: &mut dyn FnMut(&[usize]),
) -> Result<usize> {
    check_terminals(g, x, y)?;
    Ok(enumerate_in(g, &vec![true; g.n()], x, y, k, emit))
}

/// Collecting form of [`enumerate_important_separators`].
pub fn important_separators(g: &Graph, x: &[usize], y: &[usize], k: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    enumerate_important_separators(g, x, y, k, &mut |s| out.push(s.to_vec()))?;
    Ok(out)
}

/// Enumeration inside `G[alive]`.
pub(crate) fn enumerate_in(
    g: &Graph,
    alive: &[bool],
    x: &[usize],
    y: &[usize],
    k: usize,
    emit: &mut dyn FnMut(&[usize]),
) -> usize {
    let mut state = Enum { g, outer: alive, x0: x, y, emit, count: 0 };
    let mut work = alive.to_vec();
    let mut chosen = Vec::new();
    state.branch(&mut work, x.to_vec(), k, &mut chosen);
    state.count
}

struct Enum<'a, 'e> {
    g: &'a Graph,
    outer: &'a [bool],
    x0: &'a [usize],
    y: &'a [usize],
    emit: &'e mut dyn FnMut(&[usize]),
    count: usize,
}

impl Enum<'_, '_> {
    // Branch on the smallest vertex `v` of the farthest minimum cut: either `v` joins the
    // separator (budget drops, cut value drops by one) or `v` joins the source side (cut
    // value strictly grows). Candidates are filtered against the definition.
    fn branch(&mut self, alive: &mut Vec<bool>, x: Vec<usize>, k: usize, chosen: &mut Vec<usize>) {
        let s = match farthest_min_cut(self.g, alive, &x, self.y, k) {
            Cut::Adjacent | Cut::TooLarge => return,
            Cut::Separator(s) => s,
        };
        let Some(&v) = s.first() else {
            let mut cand = chosen.clone();
            cand.sort_unstable();
            if is_important_in(self.g, self.outer, self.x0, self.y, &cand) {
                (self.emit)(&cand);
                self.count += 1;
            }
            return;
        };
        alive[v] = false;
        chosen.push(v);
        self.branch(alive, x.clone(), k - 1, chosen);
        chosen.pop();
        alive[v] = true;

        let mut cut = alive.clone();
        for &w in &s {
            cut[w] = false;
        }
        let mut grown = from_mask(&reach_mask(self.g, &cut, &x));
        grown.push(v);
        grown.sort_unstable();
        self.branch(alive, grown, k, chosen);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn broom() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn reachable_examples() {
        assert_eq!(reachable(&Graph::path(3), &[0], &[1]), vec![0]);
        let g = diamond();
        assert_eq!(reachable(&g, &[0, 1, 2, 3], &[]), vec![0, 1, 2, 3]);
        assert_eq!(reachable(&g, &[0], &[1]), vec![0, 2, 3]);
    }

    #[test]
    fn min_separator_examples() {
        assert_eq!(min_vertex_separator(&Graph::path(3), &[0], &[2], 1).unwrap(), Some(vec![1]));
        assert_eq!(min_vertex_separator(&diamond(), &[0], &[3], 2).unwrap(), Some(vec![1, 2]));
        assert_eq!(min_vertex_separator(&diamond(), &[0], &[3], 1).unwrap(), None);
        assert_eq!(min_vertex_separator(&Graph::path(2), &[0], &[1], 3), Err(Error::Adjacent));
        assert!(min_vertex_separator(&Graph::path(2), &[0], &[0], 3).is_err());
    }

    #[test]
    fn farthest_cut_is_chosen() {
        // 0 - 1 - 2 - 3: both {1} and {2} are minimum; farthest from 0 is {2}.
        assert_eq!(min_vertex_separator(&Graph::path(4), &[0], &[3], 1).unwrap(), Some(vec![2]));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(important_separators(&Graph::path(3), &[0], &[2], 1).unwrap(), vec![vec![1]]);
        assert_eq!(important_separators(&diamond(), &[0], &[3], 2).unwrap(), vec![vec![1, 2]]);
        let mut got = important_separators(&broom(), &[0], &[4], 2).unwrap();
        got.sort();
        assert_eq!(got, vec![vec![1], vec![2, 3]]);
        let two = Graph::empty(2);
        assert_eq!(important_separators(&two, &[0], &[1], 0).unwrap(), vec![Vec::<usize>::new()]);
        assert!(important_separators(&Graph::path(2), &[0], &[1], 3).unwrap().is_empty());
    }

    #[test]
    fn path_keeps_only_farthest() {
        // On a path every single inner vertex separates, but only the one next to Y is important.
        assert_eq!(important_separators(&Graph::path(5), &[0], &[4], 1).unwrap(), vec![vec![3]]);
    }

    #[test]
    fn emitted_sets_are_neighbourhoods_of_their_region() {
        let g = broom();
        for s in important_separators(&g, &[0], &[4], 3).unwrap() {
            let r = reachable(&g, &[0], &s);
            assert_eq!(g.neighborhood(&r), s);
        }
    }
}
