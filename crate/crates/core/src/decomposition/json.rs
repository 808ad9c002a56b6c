//! JSON form of decompositions. Vertex ids are 0-based; `parent` is `-1` at roots.
//!
//! ```json
//! {"kind":"elimination-forest","class":"bip",
//!  "nodes":[{"id":0,"parent":-1,"bag":[0],"leaf":false}, ...],
//!  "L":[1,2],"depth":1}
//! ```
//!
//! Forbidden classes are written as `{"forbidden":[{"n":3,"edges":[[0,1],[0,2],[1,2]]}]}`.

use serde::{Deserialize, Serialize};

use super::forest::{EliminationForest, ForestNode};
use super::nice::NiceTreeHDecomposition;
use super::tree::{TdNode, TreeHDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphClassSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Forest(EliminationForest),
    Tree(TreeHDecomposition),
    Nice(NiceTreeHDecomposition),
}

impl Decomposition {
    pub fn class(&self) -> &GraphClassSpec {
        match self {
            Decomposition::Forest(f) => &f.class,
            Decomposition::Tree(t) => &t.class,
            Decomposition::Nice(n) => &n.tree.class,
        }
    }

    pub fn validate(&self, g: &Graph) -> Vec<String> {
        match self {
            Decomposition::Forest(f) => f.validate(g),
            Decomposition::Tree(t) => t.validate(g),
            Decomposition::Nice(n) => n.validate(g),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Doc {
    kind: String,
    class: ClassDoc,
    nodes: Vec<NodeDoc>,
    #[serde(rename = "L")]
    base: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    width: Option<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ClassDoc {
    Name(String),
    Forbidden { forbidden: Vec<GraphDoc> },
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct NodeDoc {
    id: usize,
    parent: i64,
    bag: Vec<usize>,
    leaf: bool,
}

fn class_doc(c: &GraphClassSpec) -> ClassDoc {
    match c {
        GraphClassSpec::Bipartite => ClassDoc::Name("bip".into()),
        GraphClassSpec::ForbiddenInduced(f) => ClassDoc::Forbidden {
            forbidden: f.iter().map(|g| GraphDoc { n: g.n(), edges: g.edges() }).collect(),
        },
    }
}

fn class_from(doc: ClassDoc) -> Result<GraphClassSpec> {
    match doc {
        ClassDoc::Name(s) if s == "bip" => Ok(GraphClassSpec::Bipartite),
        ClassDoc::Name(s) => Err(Error::Parse(format!("unknown class {s:?}"))),
        ClassDoc::Forbidden { forbidden } => {
            let family = forbidden.iter().map(|g| Graph::new(g.n, &g.edges)).collect::<Result<Vec<_>>>()?;
            GraphClassSpec::forbidden(family)
        }
    }
}

fn node_docs<'a>(it: impl Iterator<Item = (&'a Vec<usize>, Option<usize>, bool)>) -> Vec<NodeDoc> {
    it.enumerate()
        .map(|(id, (bag, parent, leaf))| NodeDoc {
            id,
            parent: parent.map_or(-1, |p| p as i64),
            bag: bag.clone(),
            leaf,
        })
        .collect()
}

pub fn to_json(d: &Decomposition) -> String {
    let doc = match d {
        Decomposition::Forest(f) => Doc {
            kind: "elimination-forest".into(),
            class: class_doc(&f.class),
            nodes: node_docs(f.nodes.iter().map(|n| (&n.bag, n.parent, n.leaf))),
            base: f.base_vertices(),
            depth: Some(f.depth()),
            width: None,
        },
        Decomposition::Tree(t) | Decomposition::Nice(NiceTreeHDecomposition { tree: t, .. }) => {
            let ch = t.children();
            Doc {
                kind: if matches!(d, Decomposition::Tree(_)) { "tree-h-decomposition" } else { "nice" }.into(),
                class: class_doc(&t.class),
                nodes: node_docs(t.nodes.iter().enumerate().map(|(i, n)| (&n.bag, n.parent, ch[i].is_empty()))),
                base: t.base.clone(),
                depth: None,
                width: Some(t.width()),
            }
        }
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<Decomposition> {
    let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let class = class_from(doc.class)?;
    let len = doc.nodes.len();
    let mut parents = Vec::with_capacity(len);
    for (i, n) in doc.nodes.iter().enumerate() {
        if n.id != i {
            return Err(Error::Parse(format!("node ids must be 0..{len} in order")));
        }
        parents.push(match n.parent {
            -1 => None,
            p if p >= 0 && (p as usize) < len => Some(p as usize),
            p => return Err(Error::Parse(format!("node {i}: bad parent {p}"))),
        });
    }
    let sorted = |mut b: Vec<usize>| {
        b.sort_unstable();
        b.dedup();
        b
    };
    let out = match doc.kind.as_str() {
        "elimination-forest" => Decomposition::Forest(EliminationForest {
            nodes: doc
                .nodes
                .into_iter()
                .zip(parents)
                .map(|(n, parent)| ForestNode { bag: sorted(n.bag), parent, leaf: n.leaf })
                .collect(),
            class,
        }),
        kind @ ("tree-h-decomposition" | "nice") => {
            let tree = TreeHDecomposition {
                nodes: doc.nodes.into_iter().zip(parents).map(|(n, parent)| TdNode { bag: sorted(n.bag), parent }).collect(),
                base: sorted(doc.base),
                class,
            };
            if kind == "nice" {
                let root = tree.root().ok_or_else(|| Error::Parse("no root".into()))?;
                Decomposition::Nice(NiceTreeHDecomposition { tree, root })
            } else {
                Decomposition::Tree(tree)
            }
        }
        other => return Err(Error::Parse(format!("unknown kind {other:?}"))),
    };
    Ok(out)
}
