use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{Method, SolveResult, Target};

pub const DEFAULT_ORACLE_CAP: usize = 24;

/// Environment variable overriding the oracle size cap.
pub const ORACLE_CAP_ENV: &str = "DOMKIT_ORACLE_CAP";

// subsets are u64 bitmasks
const HARD_CAP: usize = 64;

/// Brute-force subset enumeration.
///
/// Subsets are visited by cardinality, and within one cardinality in
/// lexicographic order of their sorted id tuples; the first feasible subset
/// is returned, so the witness is the lexicographically least optimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Result<Self> {
        if cap > HARD_CAP {
            return Err(Error::InvalidParameter(format!(
                "oracle cap {cap} exceeds the supported maximum {HARD_CAP}"
            )));
        }
        Ok(Oracle { cap })
    }

    /// Reads [`ORACLE_CAP_ENV`], falling back to [`DEFAULT_ORACLE_CAP`].
    pub fn from_env() -> Result<Self> {
        match std::env::var(ORACLE_CAP_ENV) {
            Ok(raw) => {
                let cap = raw.trim().parse().map_err(|_| {
                    Error::InvalidParameter(format!("{ORACLE_CAP_ENV}={raw:?} is not an integer"))
                })?;
                Oracle::new(cap)
            }
            Err(_) => Ok(Oracle::default()),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        g.n() <= self.cap
    }

    pub fn gamma(&self, g: &Graph) -> Result<SolveResult> {
        self.solve(g, Target::Domination)
    }

    pub fn independent(&self, g: &Graph) -> Result<SolveResult> {
        self.solve(g, Target::IndependentDomination)
    }

    fn solve(&self, g: &Graph, target: Target) -> Result<SolveResult> {
        let n = g.n();
        if n > self.cap {
            return Err(Error::OracleTooLarge { n, cap: self.cap });
        }
        let open: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        let mut search = Enumeration {
            n,
            open: &open,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            independent: target == Target::IndependentDomination,
            chosen: Vec::with_capacity(n),
            tested: 0,
        };
        for k in 0..=n {
            if search.run(0, k, 0, 0) {
                return Ok(SolveResult {
                    value: k,
                    witness: search.chosen.iter().copied().collect(),
                    target,
                    method: Method::Oracle,
                    nodes_explored: search.tested,
                });
            }
        }
        unreachable!("the full vertex set dominates, and some maximal independent set exists")
    }
}

struct Enumeration<'a> {
    n: usize,
    open: &'a [u64],
    full: u64,
    independent: bool,
    chosen: Vec<usize>,
    tested: u64,
}

impl Enumeration<'_> {
    /// Extends `chosen` by `remaining` ids from `start..n` in lexicographic
    /// order; stops at the first dominating completion.
    fn run(&mut self, start: usize, remaining: usize, covered: u64, picked: u64) -> bool {
        if remaining == 0 {
            self.tested += 1;
            return covered == self.full;
        }
        for v in start..=self.n - remaining {
            if self.independent && self.open[v] & picked != 0 {
                continue;
            }
            self.chosen.push(v);
            let bit = 1u64 << v;
            if self.run(
                v + 1,
                remaining - 1,
                covered | bit | self.open[v],
                picked | bit,
            ) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

/// γ(G) by enumeration with the default cap.
pub fn gamma_oracle(g: &Graph) -> Result<SolveResult> {
    Oracle::default().gamma(g)
}

/// i(G) by enumeration with the default cap.
pub fn i_oracle(g: &Graph) -> Result<SolveResult> {
    Oracle::default().independent(g)
}
