//! Decomposition structures, their validators and the construction pipelines.
//!
//! Depth of an elimination forest counts edges on a root-to-leaf path. Standard treedepth
//! counts vertices; forests produced by [`treedepth::exact_treedepth`] carry an empty leaf
//! under every vertex without children so the two numbers agree.

pub mod forest;
pub mod json;
pub mod nice;
pub mod sepdecomp;
pub mod tree;
pub mod treedepth;
pub mod treewidth;

use crate::graph::{components_within, Graph};

pub use forest::{build_ed_forest, ed_forest_from_sepdecomp, EliminationForest, ForestNode};
pub use nice::{kappa_pi, make_nice, NiceTreeHDecomposition, NICE_NODE_FACTOR};
pub use sepdecomp::{build_separation_decomposition, quotient, SepNode, SeparationDecomposition};
pub use tree::{
    build_tree_h_decomposition, ed_to_tree_decomposition, tree_decomp_from_sepdecomp, TdNode,
    TreeHDecomposition,
};
pub use treedepth::{exact_treedepth, TreedepthResult};
pub use treewidth::{exact_treewidth, TreewidthResult};

/// Output of a pipeline together with what it noticed along the way.
#[derive(Clone, Debug)]
pub struct Built<T> {
    pub value: T,
    /// Promise checks that failed (the output is still structurally valid).
    pub promise_violations: Vec<String>,
    /// Whether a heuristic replaced an exact quotient solver somewhere.
    pub heuristic: bool,
}

/// Children lists from parent pointers.
pub(crate) fn children_of(parents: impl Iterator<Item = Option<usize>>, len: usize) -> Vec<Vec<usize>> {
    let mut ch = vec![Vec::new(); len];
    for (i, p) in parents.enumerate() {
        if let Some(p) = p {
            if p < len {
                ch[p].push(i);
            }
        }
    }
    ch
}

/// Depth of every node, or `None` when parent pointers are out of range or cyclic.
pub(crate) fn depths_of(parents: &[Option<usize>]) -> Option<Vec<usize>> {
    let len = parents.len();
    let mut depth = vec![usize::MAX; len];
    for start in 0..len {
        let mut chain = Vec::new();
        let mut cur = start;
        loop {
            if depth[cur] != usize::MAX {
                break;
            }
            if chain.len() > len {
                return None;
            }
            chain.push(cur);
            match parents[cur] {
                None => {
                    depth[cur] = 0;
                    chain.pop();
                    break;
                }
                Some(p) if p < len => cur = p,
                Some(_) => return None,
            }
        }
        let mut d = depth[cur];
        while let Some(v) = chain.pop() {
            d += 1;
            depth[v] = d;
        }
    }
    Some(depth)
}

/// Connected components of `G` together with the induced subgraphs (new → old maps).
pub(crate) fn split_components(g: &Graph) -> Vec<(Graph, Vec<usize>)> {
    components_within(g, &vec![true; g.n()]).iter().map(|c| g.induced(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depths_detect_cycles() {
        assert_eq!(depths_of(&[None, Some(0), Some(1)]), Some(vec![0, 1, 2]));
        assert_eq!(depths_of(&[Some(1), Some(0)]), None);
        assert_eq!(depths_of(&[Some(5)]), None);
    }
}
