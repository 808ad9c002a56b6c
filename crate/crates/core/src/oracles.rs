//! Brute-force ground truth on small graphs.
//!
//! These routines work on bitmasks and share no search code with the algorithms they
//! check. Each one enforces a size guard and returns [`Error::TooLarge`] beyond it.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphClassSpec};
use crate::separation::Separation;

pub const DELETION_GUARD: usize = 12;
pub const ED_GUARD: usize = 10;
pub const SEPARABLE_GUARD: usize = 10;
pub const ABC_GUARD: usize = 12;
pub const IMPSEP_GUARD: usize = 16;

fn guard(g: &Graph, limit: usize, what: &str) -> Result<()> {
    if g.n() > limit {
        Err(Error::TooLarge(format!("{what} accepts at most {limit} vertices, got {}", g.n())))
    } else {
        Ok(())
    }
}

struct Bits {
    n: usize,
    adj: Vec<u32>,
}

impl Bits {
    fn new(g: &Graph) -> Bits {
        let adj = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
        Bits { n: g.n(), adj }
    }

    fn full(&self) -> u32 {
        if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 }
    }

    fn reach(&self, from: u32, within: u32) -> u32 {
        let mut seen = from & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in ones(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    fn components(&self, within: u32) -> Vec<u32> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left & left.wrapping_neg(), within);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// 2-colouring of `G[within]` as (side-1 mask), or None.
    fn two_color(&self, within: u32) -> Option<u32> {
        let mut one = 0u32;
        let mut colored = 0u32;
        for comp in self.components(within) {
            let root = comp & comp.wrapping_neg();
            one |= root;
            colored |= root;
            let mut frontier = root;
            while frontier != 0 {
                let mut next = 0;
                for v in ones(frontier) {
                    let nb = self.adj[v] & within;
                    let same = if one >> v & 1 == 1 { one } else { colored & !one };
                    if nb & same != 0 {
                        return None;
                    }
                    let fresh = nb & !colored;
                    if one >> v & 1 == 0 {
                        one |= fresh;
                    }
                    colored |= fresh;
                    next |= fresh;
                }
                frontier = next;
            }
        }
        Some(one)
    }

    fn has_induced(&self, within: u32, f: &Graph) -> bool {
        let q = f.n();
        if (within.count_ones() as usize) < q {
            return false;
        }
        let fadj: Vec<u32> = (0..q).map(|v| f.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
        let verts: Vec<usize> = ones(within).collect();
        let mut found = false;
        subsets_of_size(&verts, q, &mut |set| {
            found = permutations(q).any(|p| {
                (0..q).all(|i| (0..q).all(|j| (fadj[i] >> j & 1 == 1) == (self.adj[set[p[i]]] >> set[p[j]] & 1 == 1)))
            });
            found
        });
        found
    }

    fn member(&self, within: u32, class: &GraphClassSpec) -> bool {
        match class {
            GraphClassSpec::Bipartite => self.two_color(within).is_some(),
            GraphClassSpec::ForbiddenInduced(fam) => fam.iter().all(|f| !self.has_induced(within, f)),
        }
    }
}

fn ones(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

fn to_bits(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

fn to_vec(m: u32) -> Vec<usize> {
    ones(m).collect()
}

/// All permutations of `0..q` (q ≤ 6) in lexicographic order.
fn permutations(q: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut out = Vec::new();
    fn go(cur: &mut Vec<usize>, used: u32, q: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in 0..q {
            if used >> i & 1 == 0 {
                cur.push(i);
                go(cur, used | 1 << i, q, out);
                cur.pop();
            }
        }
    }
    go(&mut Vec::new(), 0, q, &mut out);
    out.into_iter()
}

/// Visits the `size`-subsets of `pool` in lexicographic order until `visit` returns true.
fn subsets_of_size(pool: &[usize], size: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(pool: &[usize], size: usize, from: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == size {
            return visit(cur);
        }
        for i in from..pool.len() {
            if pool.len() - i < size - cur.len() {
                break;
            }
            cur.push(pool[i]);
            if go(pool, size, i + 1, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(pool, size, 0, &mut Vec::with_capacity(size), visit)
}

/// Visits subsets of `pool` by increasing size, lexicographically within a size.
fn subsets_up_to(pool: &[usize], max: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    (0..=max.min(pool.len())).any(|s| subsets_of_size(pool, s, visit))
}

/// Minimum H-deletion set: smallest size, lexicographically smallest witness.
pub fn brute_min_deletion(g: &Graph, class: &GraphClassSpec) -> Result<(usize, Vec<usize>)> {
    guard(g, DELETION_GUARD, "brute_min_deletion")?;
    let b = Bits::new(g);
    let all: Vec<usize> = (0..g.n()).collect();
    let mut best = None;
    subsets_up_to(&all, g.n(), &mut |x| {
        if b.member(b.full() & !to_bits(x), class) {
            best = Some(x.to_vec());
            true
        } else {
            false
        }
    });
    let x = best.expect("deleting everything always works");
    Ok((x.len(), x))
}

/// Minimum vertex cover, lexicographically smallest witness.
pub fn brute_min_vertex_cover(g: &Graph) -> Result<Vec<usize>> {
    guard(g, DELETION_GUARD, "brute_min_vertex_cover")?;
    let b = Bits::new(g);
    let all: Vec<usize> = (0..g.n()).collect();
    let mut best = None;
    subsets_up_to(&all, g.n(), &mut |x| {
        let rest = b.full() & !to_bits(x);
        if ones(rest).all(|v| b.adj[v] & rest == 0) {
            best = Some(x.to_vec());
            true
        } else {
            false
        }
    });
    Ok(best.expect("all vertices form a cover"))
}

/// H-elimination distance by its recursive definition, memoized on vertex subsets.
pub fn brute_ed(g: &Graph, class: &GraphClassSpec) -> Result<usize> {
    guard(g, ED_GUARD, "brute_ed")?;
    let b = Bits::new(g);
    let mut memo = HashMap::new();
    Ok(ed_rec(&b, b.full(), class, &mut memo))
}

fn ed_rec(b: &Bits, mask: u32, class: &GraphClassSpec, memo: &mut HashMap<u32, usize>) -> usize {
    if mask == 0 {
        return 0;
    }
    if let Some(&v) = memo.get(&mask) {
        return v;
    }
    let comps = b.components(mask);
    let value = if comps.len() > 1 {
        comps.iter().map(|&c| ed_rec(b, c, class, memo)).max().unwrap()
    } else if b.member(mask, class) {
        0
    } else {
        1 + ones(mask).map(|v| ed_rec(b, mask & !(1 << v), class, memo)).min().unwrap()
    };
    memo.insert(mask, value);
    value
}

/// An `(H,k)`-separation covering (or weakly covering) `Z`, if one exists.
pub fn brute_separable(
    g: &Graph,
    z: &[usize],
    k: usize,
    class: &GraphClassSpec,
    weak: bool,
) -> Result<Option<Separation>> {
    guard(g, SEPARABLE_GUARD, "brute_separable")?;
    let b = Bits::new(g);
    let zb = to_bits(z);
    let pool: Vec<usize> = (0..g.n()).filter(|&v| weak || zb >> v & 1 == 0).collect();
    let mut found = None;
    subsets_up_to(&pool, k, &mut |s| {
        let sb = to_bits(s);
        let rest = b.full() & !sb;
        let c = b.reach(zb & !sb, rest);
        if b.member(c, class) {
            found = Some(Separation::new(to_vec(c), s.to_vec()));
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// Minimum annotated-bipartite-colouring deletion set of size at most `k`.
pub fn brute_abc(g: &Graph, b1: &[usize], b2: &[usize], k: usize) -> Result<Option<Vec<usize>>> {
    guard(g, ABC_GUARD, "brute_abc")?;
    let b = Bits::new(g);
    if b.two_color(b.full()).is_none() {
        return Err(Error::InvalidGraph("ABC needs a bipartite graph".into()));
    }
    let (m1, m2) = (to_bits(b1), to_bits(b2));
    let all: Vec<usize> = (0..g.n()).collect();
    let mut found = None;
    subsets_up_to(&all, k, &mut |x| {
        let rest = b.full() & !to_bits(x);
        let side = b.two_color(rest).expect("subgraph of bipartite");
        let ok = b.components(rest).into_iter().all(|c| {
            let (p1, p2) = (m1 & c, m2 & c);
            let other = c & !side;
            // Either B1 on `side` and B2 off it, or the flipped assignment.
            (p1 & !side == 0 && p2 & !other == 0) || (p1 & !other == 0 && p2 & !side == 0)
        });
        if ok {
            found = Some(x.to_vec());
        }
        ok
    });
    Ok(found)
}

/// All important `(X,Y)`-separators of size at most `k`, by direct definitional check.
pub fn brute_important_separators(g: &Graph, x: &[usize], y: &[usize], k: usize) -> Result<Vec<Vec<usize>>> {
    guard(g, IMPSEP_GUARD, "brute_important_separators")?;
    let b = Bits::new(g);
    let (xb, yb) = (to_bits(x), to_bits(y));
    if xb & yb != 0 {
        return Err(Error::InvalidSet("X and Y intersect".into()));
    }
    let pool: Vec<usize> = (0..g.n()).filter(|&v| (xb | yb) >> v & 1 == 0).collect();
    // Every separator of size ≤ k together with its X-side region.
    let mut seps: Vec<(u32, u32)> = Vec::new();
    subsets_up_to(&pool, k, &mut |s| {
        let sb = to_bits(s);
        let r = b.reach(xb, b.full() & !sb);
        if r & yb == 0 {
            seps.push((sb, r));
        }
        false
    });
    let is_sep = |sb: u32| b.reach(xb, b.full() & !sb) & yb == 0;
    let mut out = Vec::new();
    for &(sb, r) in &seps {
        let minimal = ones(sb).all(|v| !is_sep(sb & !(1 << v)));
        if !minimal {
            continue;
        }
        let size = sb.count_ones();
        let dominated = seps
            .iter()
            .any(|&(s2, r2)| s2.count_ones() <= size && r2 != r && r2 & r == r);
        if !dominated {
            out.push(to_vec(sb));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bip() -> GraphClassSpec {
        GraphClassSpec::Bipartite
    }

    fn k3free() -> GraphClassSpec {
        GraphClassSpec::clique_free(3).unwrap()
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(brute_min_deletion(&Graph::cycle(6), &bip()).unwrap(), (0, vec![]));
        assert_eq!(brute_min_deletion(&Graph::cycle(5), &bip()).unwrap(), (1, vec![0]));
        assert_eq!(brute_min_deletion(&Graph::complete(4), &k3free()).unwrap(), (2, vec![0, 1]));
        assert_eq!(brute_min_deletion(&Graph::complete(5), &bip()).unwrap().0, 3);
        assert!(brute_min_deletion(&Graph::empty(13), &bip()).is_err());
    }

    #[test]
    fn ed_examples() {
        assert_eq!(brute_ed(&Graph::cycle(6), &bip()).unwrap(), 0);
        assert_eq!(brute_ed(&Graph::complete(3), &bip()).unwrap(), 1);
        assert_eq!(brute_ed(&Graph::complete(5), &bip()).unwrap(), 3);
        assert!(brute_ed(&Graph::empty(11), &bip()).is_err());
    }

    #[test]
    fn ed_components_take_max() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(5));
        assert_eq!(brute_ed(&g, &bip()).unwrap(), 3);
    }

    #[test]
    fn separable_examples() {
        let c6 = Graph::cycle(6);
        assert_eq!(brute_separable(&c6, &[0], 0, &bip(), false).unwrap(), Some(Separation::new((0..6).collect(), vec![])));
        assert_eq!(brute_separable(&Graph::complete(5), &[0], 2, &bip(), false).unwrap(), None);
        assert!(brute_separable(&Graph::complete(3), &[0], 1, &bip(), false).unwrap().is_some());
    }

    #[test]
    fn abc_examples() {
        let e = Graph::path(2);
        assert_eq!(brute_abc(&e, &[0], &[1], 0).unwrap(), Some(vec![]));
        assert_eq!(brute_abc(&e, &[0, 1], &[], 1).unwrap(), Some(vec![0]));
        assert_eq!(brute_abc(&e, &[0, 1], &[], 0).unwrap(), None);
        assert_eq!(brute_abc(&Graph::empty(1), &[0], &[0], 1).unwrap(), Some(vec![0]));
        assert!(brute_abc(&Graph::complete(3), &[], &[], 3).is_err());
    }

    #[test]
    fn impsep_examples() {
        assert_eq!(brute_important_separators(&Graph::path(3), &[0], &[2], 1).unwrap(), vec![vec![1]]);
        let broom = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(brute_important_separators(&broom, &[0], &[4], 2).unwrap(), vec![vec![1], vec![2, 3]]);
        assert_eq!(brute_important_separators(&Graph::empty(2), &[0], &[1], 0).unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn vc_examples() {
        assert_eq!(brute_min_vertex_cover(&Graph::complete(4)).unwrap().len(), 3);
        assert_eq!(brute_min_vertex_cover(&Graph::path(3)).unwrap(), vec![1]);
    }
}
