//! Turning a dominating set of a bipartite graph into an independent
//! dominating set at most `Δ/2` times as large.
//!
//! With parts `A`, `B` and a dominating set `D`:
//!
//! 1. `I0` = vertices of `D` with no neighbor in `D`;
//! 2. `A0 = A ∩ I0`, `B0 = B ∩ I0`, `A1 = (D ∩ A) \ A0`, `B1 = (D ∩ B) \ B0`;
//! 3. if `|A1| < |B1|` the parts trade names;
//! 4. `A2 = A \ (A0 ∪ A1 ∪ N(B0))`;
//! 5. `I = A0 ∪ A1 ∪ A2 ∪ B0`.
//!
//! Each `A1` vertex has a neighbor in `B1`, and `A2 ⊆ N(B1)`, so
//! `|A2| ≤ (Δ−1)|B1|` and `|I| = |D| − |B1| + |A2| ≤ |D| + (Δ−2)|B1| ≤ |D|Δ/2`.
//! Nothing here needs `D` to be minimum; feeding a minimum dominating set
//! gives `i(G) ≤ γ(G)Δ/2`.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::solvers::{gamma_bnb, i_bnb};

/// Every intermediate set of one run. Sets named `a*` / `b*` are on the
/// A / B side *after* the optional renaming recorded in `swapped`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformTrace {
    pub i0: VertexSet,
    pub a0: VertexSet,
    pub a1: VertexSet,
    pub b0: VertexSet,
    pub b1: VertexSet,
    pub swapped: bool,
    pub a2: VertexSet,
    pub result: VertexSet,
    /// The A part used in step 4 (post-renaming).
    pub part_a: VertexSet,
    pub delta: usize,
}

/// Sizes appearing in the bound `|I| ≤ |D| + (Δ−2)|B1| ≤ ⌊|D|Δ/2⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeChain {
    pub result: usize,
    pub dominating: usize,
    pub b1: usize,
    pub a2: usize,
    pub delta: usize,
}

impl SizeChain {
    /// `|D| + (Δ−2)|B1|`
    pub fn middle(&self) -> usize {
        self.dominating + (self.delta - 2) * self.b1
    }

    /// `⌊|D|Δ/2⌋`
    pub fn half_bound(&self) -> usize {
        self.dominating * self.delta / 2
    }

    /// All links of the chain, in integer arithmetic.
    pub fn holds(&self) -> bool {
        self.a2 <= (self.delta - 1) * self.b1
            && 2 * self.b1 <= self.dominating
            && self.result == self.dominating - self.b1 + self.a2
            && self.result <= self.middle()
            && 2 * self.result <= self.dominating * self.delta
    }
}

impl TransformTrace {
    pub fn dominating_len(&self) -> usize {
        self.a0.len() + self.a1.len() + self.b0.len() + self.b1.len()
    }

    pub fn size_chain(&self) -> SizeChain {
        SizeChain {
            result: self.result.len(),
            dominating: self.dominating_len(),
            b1: self.b1.len(),
            a2: self.a2.len(),
            delta: self.delta,
        }
    }
}

pub fn independent_dominating_from(
    g: &Graph,
    parts: &Bipartition,
    d: &VertexSet,
) -> Result<TransformTrace> {
    parts.validate(g)?;
    g.check_set(d)?;
    let delta = g.max_degree();
    if delta < 2 {
        return Err(Error::DegreeTooSmall { delta, required: 2 });
    }
    if let Some(v) = g.first_undominated(d) {
        return Err(Error::NotDominating(v));
    }

    let i0: VertexSet = d
        .iter()
        .filter(|&v| g.neighbors(v).iter().all(|&w| !d.contains(w)))
        .collect();
    let split = |part: &VertexSet| {
        let isolated = part.intersection(&i0);
        let rest = d.intersection(part).difference(&isolated);
        (isolated, rest)
    };
    let (mut a0, mut a1) = split(parts.part_a());
    let (mut b0, mut b1) = split(parts.part_b());
    let mut part_a = parts.part_a().clone();

    let swapped = a1.len() < b1.len();
    if swapped {
        std::mem::swap(&mut a0, &mut b0);
        std::mem::swap(&mut a1, &mut b1);
        part_a = parts.part_b().clone();
    }

    let covered_by_b0 = g.open_neighborhood(&b0);
    let a2 = part_a.difference(&a0.union(&a1).union(&covered_by_b0));
    let result = a0.union(&a1).union(&a2).union(&b0);

    Ok(TransformTrace {
        i0,
        a0,
        a1,
        b0,
        b1,
        swapped,
        a2,
        result,
        part_a,
        delta,
    })
}

/// Outcome of checking `i(G) ≤ γ(G)Δ/2` on one bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem3Report {
    pub gamma: usize,
    pub i: usize,
    pub delta: usize,
    /// `⌊γΔ/2⌋`
    pub bound: usize,
    /// `2i ≤ γΔ`
    pub holds: bool,
    pub transform_size: usize,
    /// `i ≤ transform_size ≤ ⌊γΔ/2⌋`, the transform output is independent and
    /// dominating, and every link of its size chain holds
    pub transform_ok: bool,
    pub trace: TransformTrace,
}

impl Theorem3Report {
    pub fn is_violation(&self) -> bool {
        !(self.holds && self.transform_ok)
    }
}

/// Solves γ and i exactly and runs the transform on the solver's minimum
/// dominating set.
pub fn verify_theorem3(g: &Graph) -> Result<Theorem3Report> {
    let parts = g.bipartition().map_err(|c| Error::NotBipartite(c.0))?;
    let delta = g.max_degree();
    if delta < 2 {
        return Err(Error::DegreeTooSmall { delta, required: 2 });
    }
    let gamma = gamma_bnb(g);
    let i = i_bnb(g).value;
    let trace = independent_dominating_from(g, &parts, &gamma.witness)?;
    let gamma = gamma.value;
    let transform_size = trace.result.len();
    let transform_ok = g.is_independent(&trace.result)
        && g.is_dominating(&trace.result)
        && trace.size_chain().holds()
        && i <= transform_size
        && 2 * transform_size <= gamma * delta;
    Ok(Theorem3Report {
        gamma,
        i,
        delta,
        bound: gamma * delta / 2,
        holds: 2 * i <= gamma * delta,
        transform_size,
        transform_ok,
        trace,
    })
}
