//! Graphviz rendering of decomposition trees. Nodes holding base vertices are boxed.

use std::fmt::Write;

use hdecomp::decomposition::json::Decomposition;
use hdecomp::decomposition::TdNode;

fn ids(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn tree_nodes(out: &mut String, nodes: &[TdNode], base: &[usize]) {
    for (t, node) in nodes.iter().enumerate() {
        let (inner, outer): (Vec<usize>, Vec<usize>) = node.bag.iter().partition(|v| base.binary_search(v).is_err());
        if outer.is_empty() {
            writeln!(out, "  n{t} [label=\"{}\"];", ids(&inner)).unwrap();
        } else {
            writeln!(out, "  n{t} [shape=box, label=\"{} | L: {}\"];", ids(&inner), ids(&outer)).unwrap();
        }
        if let Some(p) = node.parent {
            writeln!(out, "  n{p} -> n{t};").unwrap();
        }
    }
}

pub fn render(d: &Decomposition) -> String {
    let mut out = String::from("digraph decomposition {\n  node [fontname=\"monospace\"];\n");
    match d {
        Decomposition::Forest(f) => {
            for (t, node) in f.nodes.iter().enumerate() {
                let shape = if node.leaf { ", shape=box" } else { "" };
                writeln!(out, "  n{t} [label=\"{}\"{shape}];", ids(&node.bag)).unwrap();
                if let Some(p) = node.parent {
                    writeln!(out, "  n{p} -> n{t};").unwrap();
                }
            }
        }
        Decomposition::Tree(t) => tree_nodes(&mut out, &t.nodes, &t.base),
        Decomposition::Nice(n) => tree_nodes(&mut out, &n.tree.nodes, &n.tree.base),
    }
    out.push_str("}\n");
    out
}
