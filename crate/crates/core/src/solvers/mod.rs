//! Exact solvers for the domination number and the independent domination
//! number.
//!
//! Two independent routes are provided: [`Oracle`] enumerates vertex subsets
//! by increasing size and is meant as ground truth on small graphs, while
//! [`gamma_bnb`] and [`i_bnb`] run a branch-and-bound search that scales to
//! the instances the tests and CLI need.

mod bnb;
mod oracle;

pub use bnb::{gamma_bnb, i_bnb};
pub use oracle::{gamma_oracle, i_oracle, Oracle, DEFAULT_ORACLE_CAP, ORACLE_CAP_ENV};

use crate::graph::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Domination,
    IndependentDomination,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Oracle,
    BranchAndBound,
}

/// A certified optimum: `witness` realizes `value` for `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub target: Target,
    pub method: Method,
    pub nodes_explored: u64,
}
