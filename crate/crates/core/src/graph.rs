//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Every [`Graph`] keeps two views of its edges: sorted neighbor lists for
//! iteration and one adjacency bitset per vertex for constant-time edge tests
//! and set-at-a-time neighborhood unions.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range ids are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        let adjacency: Vec<Vec<usize>> = rows.iter().map(|r| r.ones().collect()).collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            n,
            adjacency,
            rows,
            edge_count,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is always valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Open neighborhood of `v` as a bitset over `0..n`.
    pub fn neighbor_bits(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Maximum degree; 0 for graphs without edges (including the empty graph).
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Union of `N(v)` over `v` in `s`. The result may intersect `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut acc = FixedBitSet::with_capacity(self.n);
        for v in s.iter() {
            acc.union_with(&self.rows[v]);
        }
        VertexSet(acc.ones().collect())
    }

    /// Lowest-id vertex outside `s` with no neighbor in `s`, if any.
    pub fn first_undominated(&self, s: &VertexSet) -> Option<usize> {
        let mut covered = FixedBitSet::with_capacity(self.n);
        for v in s.iter() {
            covered.insert(v);
            covered.union_with(&self.rows[v]);
        }
        covered.zeroes().next()
    }

    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        self.first_undominated(s).is_none()
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|v| self.adjacency[v].iter().all(|&w| w < v || !s.contains(w)))
    }

    pub fn classify(&self, s: &VertexSet) -> SetRole {
        match (self.is_dominating(s), self.is_independent(s)) {
            (true, true) => SetRole::IndependentDominating,
            (true, false) => SetRole::Dominating,
            _ => SetRole::Neither,
        }
    }

    /// Connected components, each sorted ascending, ordered by lowest id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`; vertex `vertices[j]` becomes `j`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (j, &v) in vertices.iter().enumerate() {
            index[v] = j;
        }
        let edges = vertices.iter().enumerate().flat_map(|(j, &v)| {
            let index = &index;
            self.adjacency[v].iter().filter_map(move |&w| {
                (index[w] != usize::MAX && index[w] > j).then_some((j, index[w]))
            })
        });
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Canonical 2-coloring: breadth-first from the lowest unvisited id of
    /// each component, that id colored [`Side::A`]. Returns an odd cycle
    /// when no 2-coloring exists.
    pub fn bipartition(&self) -> std::result::Result<Bipartition, OddCycle> {
        let mut color: Vec<Option<Side>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(Side::A);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].expect("queued vertices are colored");
                for &w in &self.adjacency[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(cv.other());
                            parent[w] = v;
                            depth[w] = depth[v] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => {
                            return Err(OddCycle(trace_cycle(v, w, &parent, &depth)));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let color: Vec<Side> = color.into_iter().map(|c| c.expect("all colored")).collect();
        Ok(Bipartition::from_colors(color))
    }
}

/// Walks BFS parents of the equal-depth endpoints `u`, `w` up to their
/// common ancestor and closes the cycle through edge `uw`.
fn trace_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    debug_assert_eq!(depth[u], depth[w]);
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    // both paths now end at the common ancestor
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A set of vertex ids, kept sorted and deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(ids: [usize; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(ids: Vec<usize>) -> Self {
        ids.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, v) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetRole {
    IndependentDominating,
    Dominating,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A 2-coloring of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    color: Vec<Side>,
    part_a: VertexSet,
    part_b: VertexSet,
}

impl Bipartition {
    pub fn from_colors(color: Vec<Side>) -> Self {
        let part_a = (0..color.len()).filter(|&v| color[v] == Side::A).collect();
        let part_b = (0..color.len()).filter(|&v| color[v] == Side::B).collect();
        Bipartition {
            color,
            part_a,
            part_b,
        }
    }

    /// Coloring with `part_a` on side A and every other vertex of `0..n` on B.
    pub fn from_part_a(n: usize, part_a: &VertexSet) -> Self {
        Bipartition::from_colors(
            (0..n)
                .map(|v| if part_a.contains(v) { Side::A } else { Side::B })
                .collect(),
        )
    }

    pub fn color(&self, v: usize) -> Side {
        self.color[v]
    }

    pub fn part_a(&self) -> &VertexSet {
        &self.part_a
    }

    pub fn part_b(&self) -> &VertexSet {
        &self.part_b
    }

    pub fn part(&self, side: Side) -> &VertexSet {
        match side {
            Side::A => &self.part_a,
            Side::B => &self.part_b,
        }
    }

    /// Same partition with the side labels exchanged.
    pub fn swapped(&self) -> Bipartition {
        Bipartition::from_colors(self.color.iter().map(|c| c.other()).collect())
    }

    /// Checks that this coloring covers `g` and that every edge crosses it.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.color.len() != g.n() {
            return Err(Error::InvalidParameter(format!(
                "bipartition covers {} vertices, graph has {}",
                self.color.len(),
                g.n()
            )));
        }
        match g.edges().find(|&(u, v)| self.color[u] == self.color[v]) {
            Some((u, v)) => Err(Error::InvalidBipartition(u, v)),
            None => Ok(()),
        }
    }
}

/// An odd cycle, as a vertex sequence whose consecutive entries (and the
/// last/first pair) are adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle(pub Vec<usize>);

impl OddCycle {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }
}
