//! Generators for the named graph families, with their vertex-id layouts
//! fixed as part of the API.

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `K_{m,m}`: side A is `0..m`, side B is `m..2m`.
pub fn complete_bipartite(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(invalid("complete_bipartite requires m >= 1"));
    }
    Graph::new(2 * m, (0..m).flat_map(|a| (m..2 * m).map(move |b| (a, b))))
}

/// Balanced double star: adjacent centers 0 and 1; leaves of center 0 are
/// `2..s+2`, leaves of center 1 are `s+2..2s+2`.
pub fn double_star(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(invalid("double_star requires s >= 1"));
    }
    let edges = std::iter::once((0, 1))
        .chain((0..s).map(|p| (0, 2 + p)))
        .chain((0..s).map(|p| (1, 2 + s + p)));
    Graph::new(2 * s + 2, edges)
}

/// The cycle `0, 1, ..., n-1`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle requires n >= 3"));
    }
    Graph::new(n, (0..n).map(|j| (j, (j + 1) % n)))
}

/// `C_{2k+1}` on ids `0..=2k` with `s` pendant leaves per cycle vertex; leaf
/// `p` of cycle vertex `j` has id `2k + 1 + j*s + p`.
pub fn odd_cycle_corona(k: usize, s: usize) -> Result<Graph> {
    if k == 0 || s == 0 {
        return Err(invalid("odd_cycle_corona requires k >= 1 and s >= 1"));
    }
    let len = 2 * k + 1;
    let edges = (0..len)
        .map(move |j| (j, (j + 1) % len))
        .chain((0..len).flat_map(move |j| (0..s).map(move |p| (j, len + j * s + p))));
    Graph::new(len * (s + 1), edges)
}

/// Random bipartite graph with side A `0..na` and side B `na..na+nb`.
///
/// The generator is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded through
/// `SeedableRng::seed_from_u64(seed)`. Cross pairs are visited A-major
/// (`(0,na), (0,na+1), ..., (na-1,na+nb-1)`); each consumes one `u64` draw
/// `x` and is kept iff `(x >> 11) as f64 * 2^-53 < p`. This procedure is
/// part of the output format and must not change.
pub fn random_bipartite(na: usize, nb: usize, p: f64, seed: u64) -> Result<Graph> {
    if na == 0 || nb == 0 {
        return Err(invalid("random_bipartite requires na, nb >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..na {
        for b in na..na + nb {
            if unit_draw(&mut rng) < p {
                edges.push((a, b));
            }
        }
    }
    Graph::new(na + nb, edges)
}

/// Uniform value in `[0, 1)` with 53 random bits.
pub(crate) fn unit_draw(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    CompleteBipartite {
        m: usize,
    },
    DoubleStar {
        s: usize,
    },
    Cycle {
        n: usize,
    },
    OddCycleCorona {
        k: usize,
        s: usize,
    },
    RandomBipartite {
        na: usize,
        nb: usize,
        p: f64,
        seed: u64,
    },
}

/// Closed-form `(γ, i, Δ)` of a family instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub gamma: usize,
    pub i: usize,
    pub delta: usize,
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::CompleteBipartite { m } => complete_bipartite(m),
            Family::DoubleStar { s } => double_star(s),
            Family::Cycle { n } => cycle(n),
            Family::OddCycleCorona { k, s } => odd_cycle_corona(k, s),
            Family::RandomBipartite { na, nb, p, seed } => random_bipartite(na, nb, p, seed),
        }
    }

    /// `None` for families without a known closed form (cycles, random
    /// graphs, and `K_{1,1}`).
    pub fn closed_forms(&self) -> Option<ClosedForms> {
        match *self {
            Family::OddCycleCorona { k, s } => Some(ClosedForms {
                gamma: 2 * k + 1,
                i: k + (k + 1) * s,
                delta: s + 2,
            }),
            Family::CompleteBipartite { m } if m >= 2 => Some(ClosedForms {
                gamma: 2,
                i: m,
                delta: m,
            }),
            Family::DoubleStar { s } => Some(ClosedForms {
                gamma: 2,
                i: s + 1,
                delta: s + 1,
            }),
            _ => None,
        }
    }
}
