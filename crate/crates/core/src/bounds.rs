//! Upper bounds on `i(G)/γ(G)` in terms of the maximum degree, evaluated as
//! exact rationals. No floating-point value takes part in any comparison.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{gamma_bnb, i_bnb};

/// Reduced fraction with positive denominator.
pub type Rational = Ratio<i64>;

fn int(v: usize) -> i64 {
    i64::try_from(v).expect("graph quantity fits in i64")
}

fn require_delta(delta: usize, required: usize) -> Result<()> {
    if delta < required {
        Err(Error::DegreeTooSmall { delta, required })
    } else {
        Ok(())
    }
}

/// `Δ/2` for `3 ≤ Δ ≤ 5`, `Δ − 3 + 2/(Δ−1)` for `Δ ≥ 6`.
pub fn rad_volkmann_bound(delta: usize) -> Result<Rational> {
    require_delta(delta, 3)?;
    let d = int(delta);
    Ok(if delta <= 5 {
        Rational::new(d, 2)
    } else {
        Rational::from_integer(d - 3) + Rational::new(2, d - 1)
    })
}

/// `Δ/2`.
pub fn conjecture_bound(delta: usize) -> Result<Rational> {
    require_delta(delta, 2)?;
    Ok(Rational::new(int(delta), 2))
}

/// Whether `Δ − 2√Δ + 2 > Δ/2`.
///
/// Rearranged to `(Δ+4)/2 > 2√Δ`; both sides are positive so squaring gives
/// the integer test `(Δ+4)² > 16Δ`, i.e. `(Δ−4)² > 0`.
pub fn furuya_exceeds_half_delta(delta: usize) -> Result<bool> {
    require_delta(delta, 3)?;
    let d = delta as u128;
    Ok((d + 4) * (d + 4) > 16 * d)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioReport {
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub i: usize,
    pub delta: usize,
    pub ratio: Rational,
    pub conjecture_bound: Rational,
    /// absent when `Δ = 2`
    pub rv_bound: Option<Rational>,
    pub furuya_bound_sq_check: Option<bool>,
    pub within_conjecture: bool,
    pub within_rv: Option<bool>,
}

pub const CSV_HEADER: &str = "n,m,delta,gamma,i,ratio_num,ratio_den,conj_bound_num,conj_bound_den,within_conjecture,within_rv,ratio_approx";

impl RatioReport {
    /// Builds the report from already-solved values.
    pub fn from_values(n: usize, m: usize, gamma: usize, i: usize, delta: usize) -> Result<Self> {
        let conj = conjecture_bound(delta)?;
        if gamma == 0 {
            return Err(Error::InvalidParameter(
                "ratio undefined for the empty graph".into(),
            ));
        }
        let ratio = Rational::new(int(i), int(gamma));
        let rv_bound = (delta >= 3)
            .then(|| rad_volkmann_bound(delta))
            .transpose()?;
        let furuya_bound_sq_check = (delta >= 3)
            .then(|| furuya_exceeds_half_delta(delta))
            .transpose()?;
        Ok(RatioReport {
            n,
            m,
            gamma,
            i,
            delta,
            ratio,
            conjecture_bound: conj,
            within_conjecture: ratio <= conj,
            within_rv: rv_bound.map(|b| ratio <= b),
            rv_bound,
            furuya_bound_sq_check,
        })
    }

    /// One CSV row matching [`CSV_HEADER`]; `within_rv` is `na` when `Δ = 2`.
    /// The trailing decimal column is for reading only.
    pub fn csv_row(&self) -> String {
        let within_rv = match self.within_rv {
            Some(b) => b.to_string(),
            None => "na".to_string(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{:.6}",
            self.n,
            self.m,
            self.delta,
            self.gamma,
            self.i,
            self.ratio.numer(),
            self.ratio.denom(),
            self.conjecture_bound.numer(),
            self.conjecture_bound.denom(),
            self.within_conjecture,
            within_rv,
            *self.ratio.numer() as f64 / *self.ratio.denom() as f64,
        )
    }
}

/// Solves `g` exactly and evaluates both bounds. Requires `Δ ≥ 2`.
pub fn ratio_report(g: &Graph) -> Result<RatioReport> {
    require_delta(g.max_degree(), 2)?;
    RatioReport::from_values(
        g.n(),
        g.edge_count(),
        gamma_bnb(g).value,
        i_bnb(g).value,
        g.max_degree(),
    )
}

pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
