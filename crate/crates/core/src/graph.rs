//! Undirected simple graphs, target classes and basic structural queries.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest forbidden induced subgraph accepted in a family.
pub const MAX_OBSTRUCTION_SIZE: usize = 6;

/// Immutable undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("parallel edge at {v}")));
            }
        }
        Ok(Graph { adj, m: edges.len() })
    }

    /// Builds a graph from a list that may contain duplicates in either orientation.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut list: Vec<(usize, usize)> =
            edges.iter().filter(|(u, v)| u != v).map(|&(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        Graph::new(n, &list).expect("deduplicated edge list")
    }

    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((0, n - 1));
        Graph::new(n, &e).unwrap()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Induced subgraph on `vs` (any order). Returns the subgraph and the map new id → old id,
    /// where new ids follow ascending old ids.
    pub fn induced(&self, vs: &[usize]) -> (Graph, Vec<usize>) {
        let mut map: Vec<usize> = vs.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![Vec::new(); map.len()];
        let mut m = 0;
        for (i, &v) in map.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    adj[i].push(pos[w]);
                    if pos[w] > i {
                        m += 1;
                    }
                }
            }
        }
        (Graph { adj, m }, map)
    }

    /// Open neighbourhood N(S), sorted.
    pub fn neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for &v in set {
            for &w in &self.adj[v] {
                if !inside[w] && !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether `set` is independent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mask = to_mask(self.n(), set);
        set.iter().all(|&v| self.adj[v].iter().all(|&w| !mask[w]))
    }

    /// Whether `G[set]` is connected (the empty set counts as connected).
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return true;
        }
        let mask = to_mask(self.n(), set);
        component_of(self, &mask, set[0]).len() == count_distinct(set)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || component_of(self, &vec![true; self.n()], 0).len() == self.n()
    }

    /// Disjoint union: vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut e = self.edges();
        e.extend(other.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::new(off + other.n(), &e).unwrap()
    }
}

fn count_distinct(set: &[usize]) -> usize {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Boolean membership mask of `set` over `0..n`.
pub fn to_mask(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Sorted members of a mask.
pub fn from_mask(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// Sorted union of two sorted sets.
pub fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Elements of `a` not in `b` (both sorted).
pub fn difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

/// Elements of `a` also in `b` (both sorted).
pub fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// Whether sorted `a` is a subset of sorted `b`.
pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Vertices of the component of `start` inside the alive vertices, sorted.
pub fn component_of(g: &Graph, alive: &[bool], start: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut out = vec![start];
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if alive[w] && !seen[w] {
                seen[w] = true;
                out.push(w);
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Connected components of `G[alive]`, each sorted, ordered by smallest member.
pub fn components_within(g: &Graph, alive: &[bool]) -> Vec<Vec<usize>> {
    let mut done = vec![false; g.n()];
    let mut out = Vec::new();
    for v in 0..g.n() {
        if alive[v] && !done[v] {
            let c = component_of(g, alive, v);
            for &w in &c {
                done[w] = true;
            }
            out.push(c);
        }
    }
    out
}

/// Connected components of `G`, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    components_within(g, &vec![true; g.n()])
}

/// Proper 2-colouring of `G[within]` by BFS from the smallest vertex of each component
/// (roots get colour 1). Entry `v` is 0 when `v ∉ within`. `None` if an odd cycle exists.
pub fn proper_2_coloring(g: &Graph, within: &[usize]) -> Option<Vec<u8>> {
    let alive = to_mask(g.n(), within);
    let mut color = vec![0u8; g.n()];
    let mut order: Vec<usize> = within.to_vec();
    order.sort_unstable();
    for &r in &order {
        if color[r] != 0 {
            continue;
        }
        color[r] = 1;
        let mut queue = VecDeque::from([r]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !alive[w] {
                    continue;
                }
                if color[w] == 0 {
                    color[w] = 3 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

/// Target graph class H.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphClassSpec {
    Bipartite,
    /// Graphs with no induced copy of any member of the family.
    ForbiddenInduced(Vec<Graph>),
}

impl GraphClassSpec {
    /// Validated forbidden-induced-subgraph class: members connected, 2..=6 vertices.
    pub fn forbidden(family: Vec<Graph>) -> Result<GraphClassSpec> {
        if family.is_empty() {
            return Err(Error::InvalidClass("empty family".into()));
        }
        for (i, f) in family.iter().enumerate() {
            if f.n() < 2 || f.n() > MAX_OBSTRUCTION_SIZE {
                return Err(Error::InvalidClass(format!(
                    "member {i} has {} vertices, need 2..={MAX_OBSTRUCTION_SIZE}",
                    f.n()
                )));
            }
            if !f.is_connected() {
                return Err(Error::InvalidClass(format!("member {i} is disconnected")));
            }
        }
        Ok(GraphClassSpec::ForbiddenInduced(family))
    }

    /// K_ℓ-free graphs.
    pub fn clique_free(l: usize) -> Result<GraphClassSpec> {
        GraphClassSpec::forbidden(vec![Graph::complete(l)])
    }

    /// Largest family member size `c` (0 for bipartite).
    pub fn max_obstruction_size(&self) -> usize {
        match self {
            GraphClassSpec::Bipartite => 0,
            GraphClassSpec::ForbiddenInduced(f) => f.iter().map(Graph::n).max().unwrap_or(0),
        }
    }

    /// Separation-finding blow-up `h(k)`: `2k` for bipartite, `k` for forbidden classes.
    pub fn h(&self, k: usize) -> usize {
        match self {
            GraphClassSpec::Bipartite => 2 * k,
            GraphClassSpec::ForbiddenInduced(_) => k,
        }
    }

    /// Short display name.
    pub fn name(&self) -> String {
        match self {
            GraphClassSpec::Bipartite => "bip".into(),
            GraphClassSpec::ForbiddenInduced(f) => {
                let parts: Vec<String> =
                    f.iter().map(|g| format!("F{}m{}", g.n(), g.m())).collect();
                format!("forbid[{}]", parts.join(","))
            }
        }
    }
}

/// Whether `G ∈ H`.
pub fn is_member(g: &Graph, class: &GraphClassSpec) -> bool {
    let all: Vec<usize> = (0..g.n()).collect();
    is_member_within(g, class, &all)
}

/// Whether `G[within] ∈ H`.
pub fn is_member_within(g: &Graph, class: &GraphClassSpec, within: &[usize]) -> bool {
    match class {
        GraphClassSpec::Bipartite => proper_2_coloring(g, within).is_some(),
        GraphClassSpec::ForbiddenInduced(_) => {
            find_induced_obstruction(g, class, within).is_none()
        }
    }
}

/// Vertex set of an induced copy of a family member in `G[within]`: members are scanned in
/// order and, per member, the lexicographically smallest image set is returned.
pub fn find_induced_obstruction(
    g: &Graph,
    class: &GraphClassSpec,
    within: &[usize],
) -> Option<Vec<usize>> {
    let family = match class {
        GraphClassSpec::Bipartite => return None,
        GraphClassSpec::ForbiddenInduced(f) => f,
    };
    let mut pool: Vec<usize> = within.to_vec();
    pool.sort_unstable();
    pool.dedup();
    for f in family {
        if let Some(found) = smallest_induced_copy(g, &pool, f) {
            return Some(found);
        }
    }
    None
}

fn smallest_induced_copy(g: &Graph, pool: &[usize], f: &Graph) -> Option<Vec<usize>> {
    let q = f.n();
    if q > pool.len() {
        return None;
    }
    let mut fdeg: Vec<usize> = (0..q).map(|v| f.degree(v)).collect();
    fdeg.sort_unstable();
    let mut chosen = Vec::with_capacity(q);
    let mut found = None;
    combos(pool, q, 0, &mut chosen, &mut |set| {
        // Degree-sequence filter, then a full injective-mapping search.
        let mut deg: Vec<usize> = set
            .iter()
            .map(|&v| set.iter().filter(|&&w| g.has_edge(v, w)).count())
            .collect();
        deg.sort_unstable();
        if deg != fdeg {
            return false;
        }
        if embeds_exactly(g, set, f) {
            found = Some(set.to_vec());
            true
        } else {
            false
        }
    });
    found
}

/// Calls `visit` on each `q`-subset of `pool` in lexicographic order until it returns true.
fn combos(
    pool: &[usize],
    q: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == q {
        return visit(chosen);
    }
    let need = q - chosen.len();
    for i in from..=pool.len() - need {
        chosen.push(pool[i]);
        if combos(pool, q, i + 1, chosen, visit) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Whether some bijection `V(F) → set` is an isomorphism onto `G[set]`.
fn embeds_exactly(g: &Graph, set: &[usize], f: &Graph) -> bool {
    fn go(g: &Graph, set: &[usize], f: &Graph, image: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = image.len();
        if i == f.n() {
            return true;
        }
        for (j, &v) in set.iter().enumerate() {
            if used[j] {
                continue;
            }
            let ok = (0..i).all(|p| f.has_edge(p, i) == g.has_edge(image[p], v));
            if ok {
                used[j] = true;
                image.push(v);
                if go(g, set, f, image, used) {
                    return true;
                }
                image.pop();
                used[j] = false;
            }
        }
        false
    }
    go(g, set, f, &mut Vec::with_capacity(f.n()), &mut vec![false; set.len()])
}

/// Contracts each part of a partition of `V(G)` into connected sets. Vertex `i` of the
/// quotient is part `i`; the second value maps old vertex → part index.
pub fn contract_sets(g: &Graph, parts: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, p) in parts.iter().enumerate() {
        if p.is_empty() {
            return Err(Error::InvalidPartition(format!("part {i} is empty")));
        }
        for &v in p {
            if v >= g.n() {
                return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
            }
            if owner[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} in two parts")));
            }
            owner[v] = i;
        }
        if !g.is_connected_set(p) {
            return Err(Error::InvalidPartition(format!("part {i} is disconnected")));
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| owner[u] != owner[v])
        .map(|(u, v)| (owner[u], owner[v]))
        .collect();
    Ok((Graph::from_edges_dedup(parts.len(), &edges), owner))
}

/// Splits a sorted set into two sorted sets according to a predicate.
pub fn partition_by(set: &[usize], pred: impl Fn(usize) -> bool) -> (Vec<usize>, Vec<usize>) {
    set.iter().partition(|&&v| pred(v))
}

/// Partition `(A, X, B)` of `V(G)` with no edge between `A` and `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriSeparation {
    pub a: Vec<usize>,
    pub x: Vec<usize>,
    pub b: Vec<usize>,
}

impl TriSeparation {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut owner = vec![u8::MAX; g.n()];
        for (tag, part) in [(0u8, &self.a), (1, &self.x), (2, &self.b)] {
            for &v in part.iter() {
                if v >= g.n() || owner[v] != u8::MAX {
                    return false;
                }
                owner[v] = tag;
            }
        }
        owner.iter().all(|&o| o != u8::MAX)
            && g.edges().iter().all(|&(u, v)| owner[u] ^ owner[v] != 2)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(2, &[(0, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn components_examples() {
        assert!(connected_components(&Graph::empty(0)).is_empty());
        assert_eq!(connected_components(&k(3)), vec![vec![0, 1, 2]]);
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(connected_components(&g), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn membership_examples() {
        let k3 = GraphClassSpec::clique_free(3).unwrap();
        assert!(is_member(&Graph::cycle(4), &GraphClassSpec::Bipartite));
        assert!(!is_member(&k(3), &GraphClassSpec::Bipartite));
        assert!(!is_member(&k(4), &k3));
        assert_eq!(find_induced_obstruction(&k(4), &k3, &[0, 1, 2, 3]), Some(vec![0, 1, 2]));
        assert_eq!(find_induced_obstruction(&Graph::cycle(4), &k3, &[0, 1, 2, 3]), None);
    }

    #[test]
    fn obstruction_is_induced() {
        // P3 is not an induced subgraph of K3.
        let p3 = GraphClassSpec::forbidden(vec![Graph::path(3)]).unwrap();
        assert!(is_member(&k(3), &p3));
        assert_eq!(find_induced_obstruction(&Graph::cycle(4), &p3, &[0, 1, 2, 3]), Some(vec![0, 1, 2]));
    }

    #[test]
    fn coloring_examples() {
        assert_eq!(proper_2_coloring(&Graph::path(3), &[0, 1, 2]), Some(vec![1, 2, 1]));
        assert_eq!(proper_2_coloring(&k(3), &[0, 1, 2]), None);
        assert_eq!(proper_2_coloring(&Graph::empty(2), &[0, 1]), Some(vec![1, 1]));
    }

    #[test]
    fn contraction_examples() {
        let (q, _) = contract_sets(&k(3), &[vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(q, k(3));
        let (q, map) = contract_sets(&k(3), &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(q, k(2));
        assert_eq!(map, vec![0, 0, 1]);
        let (q, _) = contract_sets(&k(3), &[vec![0, 1, 2]]).unwrap();
        assert_eq!((q.n(), q.m()), (1, 0));
        assert!(contract_sets(&Graph::path(3), &[vec![0, 2], vec![1]]).is_err());
        assert!(contract_sets(&k(3), &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn family_validation() {
        assert!(GraphClassSpec::forbidden(vec![Graph::empty(2)]).is_err());
        assert!(GraphClassSpec::forbidden(vec![Graph::complete(7)]).is_err());
        assert!(GraphClassSpec::forbidden(vec![Graph::path(4)]).is_ok());
    }

    #[test]
    fn triseparation_check() {
        let p = Graph::path(3);
        assert!(TriSeparation { a: vec![0], x: vec![1], b: vec![2] }.is_valid(&p));
        assert!(!TriSeparation { a: vec![0], x: vec![2], b: vec![1] }.is_valid(&p));
    }

    /// Random graphs whose edges only join vertices of different parity classes.
    pub(crate) fn arb_bipartite(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, any::<u64>()).prop_flat_map(|(n, salt)| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let side = |v: usize| (salt >> (v % 64)) & 1;
                let mut e = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] && side(u) != side(v) {
                            e.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::new(n, &e).unwrap()
            })
        })
    }

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut e = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[i] {
                            e.push((u, v));
                        }
                        i += 1;
                    }
                }
                Graph::new(n, &e).unwrap()
            })
        })
    }

    fn brute_has_copy(g: &Graph, f: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|mask| {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            set.len() == f.n() && embeds_exactly(g, &set, f)
        })
    }

    proptest! {
        #[test]
        fn membership_is_hereditary(g in arb_graph(6), pick in 0usize..6) {
            let v = pick % g.n();
            let rest: Vec<usize> = (0..g.n()).filter(|&w| w != v).collect();
            let (h, _) = g.induced(&rest);
            let classes = [
                GraphClassSpec::Bipartite,
                GraphClassSpec::clique_free(3).unwrap(),
                GraphClassSpec::forbidden(vec![Graph::path(3)]).unwrap(),
            ];
            for c in &classes {
                prop_assert!(!is_member(&g, c) || is_member(&h, c));
            }
        }

        #[test]
        fn coloring_iff_bipartite(g in arb_graph(8)) {
            let all: Vec<usize> = (0..g.n()).collect();
            match proper_2_coloring(&g, &all) {
                Some(c) => prop_assert!(g.edges().iter().all(|&(u, v)| c[u] != c[v])),
                None => prop_assert!(!is_member(&g, &GraphClassSpec::Bipartite)),
            }
        }

        #[test]
        fn obstruction_matches_brute(g in arb_graph(8)) {
            let fam = vec![Graph::complete(3), Graph::path(4)];
            let class = GraphClassSpec::forbidden(fam.clone()).unwrap();
            let all: Vec<usize> = (0..g.n()).collect();
            let expect = fam.iter().any(|f| brute_has_copy(&g, f));
            let got = find_induced_obstruction(&g, &class, &all);
            prop_assert_eq!(got.is_some(), expect);
            if let Some(set) = got {
                prop_assert!(fam.iter().any(|f| f.n() == set.len() && embeds_exactly(&g, &set, f)));
            }
        }

        #[test]
        fn contraction_keeps_connectivity(g in arb_graph(8)) {
            prop_assume!(g.is_connected());
            // Contract a BFS prefix and leave the rest as singletons.
            let first = component_of(&g, &vec![true; g.n()], 0);
            let take = first.len() / 2 + 1;
            let alive = to_mask(g.n(), &first[..take]);
            let blob = component_of(&g, &alive, first[0]);
            let mut parts = vec![blob.clone()];
            parts.extend((0..g.n()).filter(|v| !blob.contains(v)).map(|v| vec![v]));
            let (q, _) = contract_sets(&g, &parts).unwrap();
            prop_assert!(q.is_connected());
        }
    }
}
