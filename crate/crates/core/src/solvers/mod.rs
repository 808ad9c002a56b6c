//! Vertex-deletion solvers running on elimination forests and nice tree H-decompositions.
//!
//! Returned sets are sorted and optimal. Among several optimal sets the choice is
//! deterministic but not necessarily the lexicographically smallest one.

mod abc;
mod dp;
mod klfree;
mod matching;
mod oct;
mod vc;

pub use abc::solve_abc;
pub use klfree::{find_clique, solve_klfree_elim, solve_klfree_fdfv};
pub use matching::{maximum_matching, vc_bipartite};
pub use oct::{solve_oct_dp, solve_oct_dp_with_budget, solve_oct_elim};
pub use vc::{solve_vc_dp, solve_vc_elim, vc_branching};

use crate::error::{Error, Result};
use crate::graph::{proper_2_coloring, Graph};

/// Minimum vertex cover routine for base components.
pub type BaseVc<'a> = &'a dyn Fn(&Graph) -> Result<Vec<usize>>;

fn remaining(g: &Graph, x: &[usize]) -> Vec<usize> {
    let mut gone = vec![false; g.n()];
    for &v in x {
        gone[v] = true;
    }
    (0..g.n()).filter(|&v| !gone[v]).collect()
}

pub fn is_odd_cycle_transversal(g: &Graph, x: &[usize]) -> bool {
    proper_2_coloring(g, &remaining(g, x)).is_some()
}

pub fn is_vertex_cover(g: &Graph, x: &[usize]) -> bool {
    let mut inx = vec![false; g.n()];
    for &v in x {
        inx[v] = true;
    }
    g.edges().iter().all(|&(u, v)| inx[u] || inx[v])
}

pub fn is_klfree_deletion(g: &Graph, x: &[usize], l: usize) -> bool {
    let mut alive = vec![true; g.n()];
    for &v in x {
        alive[v] = false;
    }
    find_clique(g, &alive, l).is_none()
}

fn check_forest(g: &Graph, f: &crate::decomposition::EliminationForest) -> Result<()> {
    let bad = f.validate(g);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition(bad.join("; ")))
    }
}

fn check_nice(g: &Graph, nd: &crate::decomposition::NiceTreeHDecomposition) -> Result<()> {
    let bad = nd.validate(g);
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidDecomposition(bad.join("; ")))
    }
}

/// Runs `visit` on every root of the forest (children lists precomputed).
fn roots(f: &crate::decomposition::EliminationForest) -> impl Iterator<Item = usize> + '_ {
    (0..f.nodes.len()).filter(|&t| f.nodes[t].parent.is_none())
}
