//! Hybrid graph decompositions for vertex-deletion problems.
//!
//! The crate builds H-elimination forests and tree H-decompositions for two kinds of
//! target class H (bipartite graphs, and classes defined by finitely many forbidden
//! connected induced subgraphs) and solves Odd Cycle Transversal, Vertex Cover and
//! K_ℓ-free Deletion on top of them. Brute-force oracles for every quantity live in
//! [`oracles`].

pub mod decomposition;
pub mod error;
mod flow;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod separation;
pub mod separators;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Graph, GraphClassSpec};
pub use separation::{Separation, SeparationOutcome};
