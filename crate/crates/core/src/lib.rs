//! Exact domination number γ(G) and independent domination number i(G),
//! and the construction showing `i(G) ≤ γ(G)·Δ(G)/2` for bipartite graphs.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod solvers;
pub mod transform;

pub use error::{Error, Result};
pub use graph::{Bipartition, Graph, OddCycle, SetRole, Side, VertexSet};
