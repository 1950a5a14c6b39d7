//! Branch-and-bound search for γ(G) and i(G).
//!
//! Both solvers work one connected component at a time and sum the optima.
//! Within a component the search keeps, per vertex, how many chosen vertices
//! dominate it, and prunes a node when
//! `|partial| + ceil(undominated / (Δ + 1)) >= |incumbent|`.
//!
//! Sibling branches exclude the candidates tried before them: a completion
//! that contains an earlier candidate was already reachable in that
//! candidate's subtree.

use crate::graph::{Graph, VertexSet};

use super::{Method, SolveResult, Target};

/// Exact γ(G). Branches on the undominated vertex with the fewest remaining
/// candidates in its closed neighborhood (lowest id on ties).
pub fn gamma_bnb(g: &Graph) -> SolveResult {
    solve_by_components(g, Target::Domination)
}

/// Exact i(G). Branches on the lowest-id undominated vertex over the members
/// of its closed neighborhood that have no chosen neighbor.
pub fn i_bnb(g: &Graph) -> SolveResult {
    solve_by_components(g, Target::IndependentDomination)
}

fn solve_by_components(g: &Graph, target: Target) -> SolveResult {
    let mut witness = Vec::new();
    let mut nodes_explored = 0;
    for comp in g.components() {
        let h = g.induced_subgraph(&comp);
        let mut search = Search::new(&h, target);
        search.run();
        nodes_explored += search.nodes;
        witness.extend(search.best.iter().map(|&j| comp[j]));
    }
    let witness: VertexSet = witness.into();
    SolveResult {
        value: witness.len(),
        witness,
        target,
        method: Method::BranchAndBound,
        nodes_explored,
    }
}

struct Search<'a> {
    g: &'a Graph,
    target: Target,
    /// Δ + 1: most vertices any single pick can newly dominate.
    reach: usize,
    chosen: Vec<usize>,
    /// number of chosen vertices in N[v]
    dominators: Vec<u32>,
    undominated: usize,
    /// excluded by an earlier sibling branch
    forbidden: Vec<bool>,
    best: Vec<usize>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, target: Target) -> Self {
        let n = g.n();
        let mut s = Search {
            g,
            target,
            reach: g.max_degree() + 1,
            chosen: Vec::new(),
            dominators: vec![0; n],
            undominated: n,
            forbidden: vec![false; n],
            best: Vec::new(),
            nodes: 0,
        };
        s.best = s.greedy();
        s
    }

    fn closed(&self, v: usize) -> impl Iterator<Item = usize> + 'a {
        std::iter::once(v).chain(self.g.neighbors(v).iter().copied())
    }

    fn add(&mut self, v: usize) {
        self.chosen.push(v);
        for w in self.closed(v) {
            if self.dominators[w] == 0 {
                self.undominated -= 1;
            }
            self.dominators[w] += 1;
        }
    }

    fn remove_last(&mut self) {
        let v = self.chosen.pop().expect("remove_last on empty partial set");
        for w in self.closed(v) {
            self.dominators[w] -= 1;
            if self.dominators[w] == 0 {
                self.undominated += 1;
            }
        }
    }

    /// A vertex may be picked unless an earlier sibling excluded it or, for
    /// independent domination, it is already dominated (a dominated vertex
    /// outside the partial set has a chosen neighbor).
    fn allowed(&self, u: usize) -> bool {
        if self.forbidden[u] {
            return false;
        }
        match self.target {
            Target::Domination => true,
            Target::IndependentDomination => self.dominators[u] == 0,
        }
    }

    fn gain(&self, v: usize) -> usize {
        self.closed(v).filter(|&w| self.dominators[w] == 0).count()
    }

    /// Max-coverage greedy; for independent domination only undominated
    /// vertices are eligible, which yields a maximal independent set.
    fn greedy(&mut self) -> Vec<usize> {
        while self.undominated > 0 {
            let pick = (0..self.g.n())
                .filter(|&v| self.allowed(v))
                .max_by_key(|&v| (self.gain(v), std::cmp::Reverse(v)))
                .expect("an undominated vertex is always eligible");
            self.add(pick);
        }
        let found = self.chosen.clone();
        while !self.chosen.is_empty() {
            self.remove_last();
        }
        found
    }

    fn branch_vertex(&self) -> Option<usize> {
        let undominated = (0..self.g.n()).filter(|&v| self.dominators[v] == 0);
        match self.target {
            Target::Domination => undominated.min_by_key(|&v| {
                let residual = self.closed(v).filter(|&u| self.allowed(u)).count();
                (residual, v)
            }),
            Target::IndependentDomination => undominated.min(),
        }
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.undominated == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let lower = self.undominated.div_ceil(self.reach);
        if self.chosen.len() + lower >= self.best.len() {
            return;
        }
        let v = self.branch_vertex().expect("undominated vertices remain");
        let mut candidates: Vec<usize> = self.closed(v).filter(|&u| self.allowed(u)).collect();
        candidates.sort_unstable();
        for &u in &candidates {
            self.add(u);
            self.run();
            self.remove_last();
            self.forbidden[u] = true;
        }
        for &u in &candidates {
            self.forbidden[u] = false;
        }
    }
}
