//! Finding `(H,k)`-separations.
//!
//! A pair `(C, S)` is an `(H,k)`-separation when `C ∩ S = ∅`, `G[C] ∈ H`, `|S| ≤ k` and
//! `N(C) ⊆ S`. It covers `Z` when `Z ⊆ C` and weakly covers `Z` when `Z ⊆ C ∪ S`.
//!
//! All finders operate on `G[alive]` internally so that recursive calls can delete
//! vertices without rebuilding graphs.

use crate::error::{Error, Result};
use crate::graph::{
    component_of, find_induced_obstruction, from_mask, is_member_within, is_subset,
    proper_2_coloring, to_mask, union, Graph, GraphClassSpec,
};
use crate::separators::{enumerate_in, farthest_min_cut, Cut};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Separation {
    pub c: Vec<usize>,
    pub s: Vec<usize>,
}

impl Separation {
    pub fn new(mut c: Vec<usize>, mut s: Vec<usize>) -> Separation {
        c.sort_unstable();
        c.dedup();
        s.sort_unstable();
        s.dedup();
        Separation { c, s }
    }

    pub fn covers(&self, z: &[usize]) -> bool {
        z.iter().all(|v| self.c.binary_search(v).is_ok())
    }

    pub fn weakly_covers(&self, z: &[usize]) -> bool {
        z.iter().all(|v| self.c.binary_search(v).is_ok() || self.s.binary_search(v).is_ok())
    }

    /// Violations of the `(H, bound)`-separation conditions in `G`.
    pub fn violations(&self, g: &Graph, class: &GraphClassSpec, bound: usize) -> Vec<String> {
        let mut out = Vec::new();
        if self.c.iter().chain(&self.s).any(|&v| v >= g.n()) {
            out.push("vertex out of range".to_string());
            return out;
        }
        if self.c.iter().any(|v| self.s.binary_search(v).is_ok()) {
            out.push("C and S intersect".to_string());
        }
        if !is_member_within(g, class, &self.c) {
            out.push("G[C] is not in the class".to_string());
        }
        if self.s.len() > bound {
            out.push(format!("|S| = {} exceeds {bound}", self.s.len()));
        }
        if !is_subset(&g.neighborhood(&self.c), &self.s) {
            out.push("N(C) is not contained in S".to_string());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparationOutcome {
    Found(Separation),
    Inseparable,
}

impl SeparationOutcome {
    pub fn found(&self) -> Option<&Separation> {
        match self {
            SeparationOutcome::Found(s) => Some(s),
            SeparationOutcome::Inseparable => None,
        }
    }
}

/// Number of recursive calls (root excluded) made by the branching finders.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub forbidden_calls: usize,
    pub restricted_calls: usize,
}

fn check_z(g: &Graph, alive: &[bool], z: &[usize]) -> Result<()> {
    if z.is_empty() {
        return Err(Error::InvalidSet("Z is empty".into()));
    }
    if z.iter().any(|&v| v >= g.n() || !alive[v]) {
        return Err(Error::InvalidSet("Z has a vertex outside the graph".into()));
    }
    let mask = to_mask(g.n(), z);
    if component_of(g, &mask, z[0]).len() != from_mask(&mask).len() {
        return Err(Error::InvalidSet("G[Z] is disconnected".into()));
    }
    Ok(())
}

/// Bipartite separation finding with `h(k) = 2k`. A `Found` result covers `Z`;
/// `Inseparable` is a correct verdict that no `(bip,k)`-separation covers `Z`.
pub fn find_separation_bip(g: &Graph, z: &[usize], k: usize) -> Result<SeparationOutcome> {
    let alive = vec![true; g.n()];
    check_z(g, &alive, z)?;
    Ok(bip_in(g, &alive, z, k))
}

pub(crate) fn bip_in(g: &Graph, alive: &[bool], z: &[usize], k: usize) -> SeparationOutcome {
    let comp = component_of(g, alive, z[0]);
    if k == 0 {
        return if proper_2_coloring(g, &comp).is_some() {
            SeparationOutcome::Found(Separation::new(comp, vec![]))
        } else {
            SeparationOutcome::Inseparable
        };
    }
    let Some(color) = proper_2_coloring(g, z) else {
        return SeparationOutcome::Inseparable;
    };
    // Parity graph on the component: every vertex outside Z gets copies u' = 2i and
    // u'' = 2i + 1; the colour classes of Z become v1 and v2 with their own copies.
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    let outside: Vec<usize> = comp.iter().copied().filter(|v| !z.contains(v)).collect();
    for (i, &v) in outside.iter().enumerate() {
        index[v] = i;
    }
    let v1 = outside.len();
    let v2 = v1 + 1;
    for &v in z {
        index[v] = if color[v] == 1 { v1 } else { v2 };
    }
    let has_v2 = z.iter().any(|&v| color[v] == 2);
    let copies = 2 * (outside.len() + 2);
    let mut edges = Vec::new();
    for &u in &comp {
        for &w in g.neighbors(u) {
            if alive[w] && u < w {
                let (a, b) = (index[u], index[w]);
                edges.push((2 * a, 2 * b + 1));
                edges.push((2 * b, 2 * a + 1));
            }
        }
    }
    let parity = Graph::from_edges_dedup(copies, &edges);
    let (mut src, mut dst) = (vec![2 * v1], vec![2 * v1 + 1]);
    if has_v2 {
        src.push(2 * v2 + 1);
        dst.push(2 * v2);
    }
    let cut = match farthest_min_cut(&parity, &vec![true; copies], &src, &dst, 2 * k) {
        Cut::Separator(s) => s,
        // Adjacent terminals mean an odd path through Z's classes: no bipartite C ⊇ Z.
        Cut::Adjacent | Cut::TooLarge => return SeparationOutcome::Inseparable,
    };
    let mut rest = alive.to_vec();
    for c in cut {
        rest[outside[c / 2]] = false;
    }
    let c = component_of(g, &rest, z[0]);
    let s = neighborhood_in(g, alive, &c);
    debug_assert!(proper_2_coloring(g, &c).is_some());
    SeparationOutcome::Found(Separation::new(c, s))
}

fn neighborhood_in(g: &Graph, alive: &[bool], set: &[usize]) -> Vec<usize> {
    g.neighborhood(set).into_iter().filter(|&v| alive[v]).collect()
}

/// Exact separation finding for a forbidden-induced-subgraph class (`h(k) = k`).
pub fn find_separation_forbidden(
    g: &Graph,
    z: &[usize],
    k: usize,
    class: &GraphClassSpec,
) -> Result<SeparationOutcome> {
    find_separation_forbidden_with_stats(g, z, k, class).map(|(o, _)| o)
}

/// As [`find_separation_forbidden`], also reporting the number of recursive calls.
pub fn find_separation_forbidden_with_stats(
    g: &Graph,
    z: &[usize],
    k: usize,
    class: &GraphClassSpec,
) -> Result<(SeparationOutcome, usize)> {
    if !matches!(class, GraphClassSpec::ForbiddenInduced(_)) {
        return Err(Error::InvalidClass("expected a forbidden-induced-subgraph class".into()));
    }
    let alive = vec![true; g.n()];
    check_z(g, &alive, z)?;
    let mut stats = SearchStats::default();
    let out = forbidden_in(g, &alive, z, k, class, &mut stats);
    Ok((out, stats.forbidden_calls))
}

pub(crate) fn forbidden_in(
    g: &Graph,
    alive: &[bool],
    z: &[usize],
    k: usize,
    class: &GraphClassSpec,
    stats: &mut SearchStats,
) -> SeparationOutcome {
    let comp = component_of(g, alive, z[0]);
    let Some(obstruction) = find_induced_obstruction(g, class, &comp) else {
        return SeparationOutcome::Found(Separation::new(comp, vec![]));
    };
    let z_mask = to_mask(g.n(), z);
    let free: Vec<usize> = obstruction.iter().copied().filter(|&v| !z_mask[v]).collect();
    if free.is_empty() || k == 0 {
        return SeparationOutcome::Inseparable;
    }
    let comp_mask = to_mask(g.n(), &comp);
    for &u in &free {
        // (a) u itself goes into S.
        stats.forbidden_calls += 1;
        let mut rest = comp_mask.clone();
        rest[u] = false;
        if let SeparationOutcome::Found(sep) = forbidden_in(g, &rest, z, k - 1, class, stats) {
            return SeparationOutcome::Found(Separation::new(sep.c, union(&sep.s, &[u])));
        }
        // (b) an important (u, Z)-separator goes into S.
        let mut seps = Vec::new();
        enumerate_in(g, &comp_mask, &[u], z, k, &mut |s| seps.push(s.to_vec()));
        for s in seps {
            stats.forbidden_calls += 1;
            let mut rest = comp_mask.clone();
            for &v in &s {
                rest[v] = false;
            }
            if let SeparationOutcome::Found(sep) = forbidden_in(g, &rest, z, k - s.len(), class, stats) {
                return SeparationOutcome::Found(Separation::new(sep.c, union(&sep.s, &s)));
            }
        }
    }
    SeparationOutcome::Inseparable
}

/// Base finder used by the restricted wrapper and the decomposition builder.
#[derive(Clone, Debug)]
pub enum Finder {
    Bipartite,
    Forbidden(GraphClassSpec),
}

impl Finder {
    pub fn for_class(class: &GraphClassSpec) -> Finder {
        match class {
            GraphClassSpec::Bipartite => Finder::Bipartite,
            GraphClassSpec::ForbiddenInduced(_) => Finder::Forbidden(class.clone()),
        }
    }

    pub fn class(&self) -> GraphClassSpec {
        match self {
            Finder::Bipartite => GraphClassSpec::Bipartite,
            Finder::Forbidden(c) => c.clone(),
        }
    }

    /// Bound on `|S|` of a found separation: `h(k)`.
    pub fn h(&self, k: usize) -> usize {
        match self {
            Finder::Bipartite => 2 * k,
            Finder::Forbidden(_) => k,
        }
    }

    pub(crate) fn find_in(&self, g: &Graph, alive: &[bool], z: &[usize], k: usize, stats: &mut SearchStats) -> SeparationOutcome {
        match self {
            Finder::Bipartite => bip_in(g, alive, z, k),
            Finder::Forbidden(c) => forbidden_in(g, alive, z, k, c, stats),
        }
    }
}

/// Restricted separation finding: a found `(C,S)` has `|S| ≤ h(k) + k` and `C` contains at
/// most `k` members of `family`. `Inseparable` means no `(H,k)`-separation covers `Z`,
/// provided every family member is `(H,k)`-inseparable.
pub fn find_separation_restricted(
    g: &Graph,
    z: &[usize],
    k: usize,
    family: &[Vec<usize>],
    base: &Finder,
) -> Result<SeparationOutcome> {
    find_separation_restricted_with_stats(g, z, k, family, base).map(|(o, _)| o)
}

/// As [`find_separation_restricted`], also reporting recursion statistics.
pub fn find_separation_restricted_with_stats(
    g: &Graph,
    z: &[usize],
    k: usize,
    family: &[Vec<usize>],
    base: &Finder,
) -> Result<(SeparationOutcome, SearchStats)> {
    let alive = vec![true; g.n()];
    check_z(g, &alive, z)?;
    check_family(g, z, family)?;
    let mut stats = SearchStats::default();
    let out = restricted_in(g, &alive, z, k, family, base, &mut stats);
    Ok((out, stats))
}

fn check_family(g: &Graph, z: &[usize], family: &[Vec<usize>]) -> Result<()> {
    let mut owner = vec![false; g.n()];
    for &v in z {
        owner[v] = true;
    }
    for (i, f) in family.iter().enumerate() {
        if f.is_empty() || f.iter().any(|&v| v >= g.n()) {
            return Err(Error::InvalidSet(format!("family member {i} is empty or out of range")));
        }
        if !g.is_connected_set(f) {
            return Err(Error::InvalidSet(format!("family member {i} is disconnected")));
        }
        for &v in f {
            if owner[v] {
                return Err(Error::InvalidSet(format!("family member {i} overlaps Z or another member")));
            }
            owner[v] = true;
        }
    }
    Ok(())
}

pub(crate) fn restricted_in(
    g: &Graph,
    alive: &[bool],
    z: &[usize],
    k: usize,
    family: &[Vec<usize>],
    base: &Finder,
    stats: &mut SearchStats,
) -> SeparationOutcome {
    let comp = to_mask(g.n(), &component_of(g, alive, z[0]));
    let live: Vec<Vec<usize>> = family.iter().filter(|f| f.iter().all(|&v| comp[v])).cloned().collect();
    if live.len() <= k {
        return base.find_in(g, alive, z, k, stats);
    }
    for f in &live[..=k] {
        let mut seps = Vec::new();
        enumerate_in(g, &comp, f, z, k, &mut |s| seps.push(s.to_vec()));
        for s in seps {
            stats.restricted_calls += 1;
            let mut rest = comp.clone();
            for &v in &s {
                rest[v] = false;
            }
            let sub = restricted_in(g, &rest, z, k - s.len(), &live, base, stats);
            if let SeparationOutcome::Found(sep) = sub {
                return SeparationOutcome::Found(Separation::new(sep.c, union(&sep.s, &s)));
            }
        }
    }
    SeparationOutcome::Inseparable
}

/// Grows `Z` inside the connected region `region` until the finder reports it inseparable
/// or it swallows the region. Returns the final `Z'` and a separation weakly covering it
/// whose separator exceeds the finder's bound by at most one.
pub fn find_extremal_separation(
    g: &Graph,
    region: &[usize],
    z: &[usize],
    seed: Separation,
    finder: &mut dyn FnMut(&[usize]) -> SeparationOutcome,
) -> (Vec<usize>, Separation) {
    let region_mask = to_mask(g.n(), region);
    let mut z = z.to_vec();
    let mut current = seed;
    loop {
        let sep = match finder(&z) {
            SeparationOutcome::Inseparable => return (z, current),
            SeparationOutcome::Found(sep) => sep,
        };
        let mut inside = vec![false; g.n()];
        for &v in sep.c.iter().chain(&sep.s) {
            inside[v] = region_mask[v];
        }
        let grown = component_of(g, &inside, z[0]);
        if grown.len() == region.len() {
            return (grown, sep);
        }
        let v = g
            .neighborhood(&grown)
            .into_iter()
            .find(|&v| region_mask[v])
            .expect("region is connected");
        z = union(&grown, &[v]);
        current = Separation::new(sep.c, union(&sep.s, &[v]));
    }
}
