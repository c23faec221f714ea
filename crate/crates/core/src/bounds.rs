//! Upper and lower bounds on the approximation ratio of anonymous pricing,
//! for MHR (`λ = 0`) and λ-regular valuations.
//!
//! Every value is clipped below at 1.

use std::f64::consts::E;
use std::fmt;

use crate::objectives::{
    maximize_g_n, one_minus_pow_complement, sup_g_lambda, sup_g_n_lambda, Domain, HnLambdaProfile,
};
use crate::optimize::{golden_section_max, linear_grid, Maximizer};
use crate::special::{
    a_n_lambda, beta_n_lambda_minus_one, check_lambda, harmonic_sum, partial_harmonic_sum,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundName {
    MhrUpperAsym,
    MhrUpperSmall,
    MhrUpperBest,
    MhrLower,
    PriorIndepUpper,
    LambdaUpper,
    LambdaLower,
    Asymptotic,
}

impl BoundName {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::MhrUpperAsym => "mhr_upper_asym",
            BoundName::MhrUpperSmall => "mhr_upper_small",
            BoundName::MhrUpperBest => "mhr_upper_best",
            BoundName::MhrLower => "mhr_lower",
            BoundName::PriorIndepUpper => "prior_indep_upper",
            BoundName::LambdaUpper => "lambda_upper",
            BoundName::LambdaLower => "lambda_lower",
            BoundName::Asymptotic => "asymptotic",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    pub name: BoundName,
    /// `None` for the `n → ∞` bound.
    pub n: Option<u32>,
    /// `None` for the MHR bounds.
    pub lambda: Option<f64>,
    pub value: f64,
    /// The maximizer behind the bound, when there is one.
    pub witness: Option<Maximizer>,
}

impl BoundResult {
    fn new(name: BoundName, n: Option<u32>, lambda: Option<f64>, value: f64) -> Self {
        BoundResult {
            name,
            n,
            lambda,
            value: value.max(1.0),
            witness: None,
        }
    }

    fn with_witness(mut self, witness: Maximizer) -> Self {
        self.witness = Some(witness);
        self
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(format!("bounds need n >= 2, got {n}")));
    }
    Ok(())
}

/// `(e−1)^{n−1} / (e^n − (e−1)^n)`.
fn asymptotic_tail_term(n: u32) -> f64 {
    let nf = n as f64;
    let ln_em1 = (E - 1.0).ln();
    ((nf - 1.0) * ln_em1 - nf).exp() / -(nf * (ln_em1 - 1.0)).exp_m1()
}

/// Upper bound `1/max_{c∈[0,1]} g_n(c) + (e−1)^{n−1}/(e^n − (e−1)^n)`,
/// asymptotically tight as `n → ∞`.
pub fn mhr_upper_asymptotic(n: u32) -> Result<BoundResult> {
    check_n(n)?;
    let g = maximize_g_n(n, Domain::UnitInterval)?;
    let value = 1.0 / g.value + asymptotic_tail_term(n);
    Ok(BoundResult::new(BoundName::MhrUpperAsym, Some(n), None, value).with_witness(g))
}

/// Points scanned over `q ∈ [1/e, 1]` before refinement.
pub const SMALL_N_GRID_POINTS: usize = 10_000;

/// Upper bound for small `n`: the worst case over the monopoly quantile
/// `q ∈ [1/e, 1]` of the better of two pricing strategies.
pub fn mhr_upper_small_n(n: u32) -> Result<BoundResult> {
    check_n(n)?;
    let nf = n as f64;
    let order_stat_ratio = 1.0 / one_minus_pow_complement((1.0 - harmonic_sum(n as u64)).exp(), nf);
    let objective = |q: f64| {
        let sold = one_minus_pow_complement(q, nf);
        let order_stat = order_stat_ratio + q * (1.0 - q).powi(n as i32 - 1) / sold;
        let reserve = partial_harmonic_sum(n, q) / sold;
        order_stat.min(reserve)
    };
    let grid = linear_grid(1.0 / E, 1.0, SMALL_N_GRID_POINTS);
    let (mut best_i, mut best_v) = (0, f64::NEG_INFINITY);
    for (i, &q) in grid.iter().enumerate() {
        let v = objective(q);
        if v > best_v {
            best_i = i;
            best_v = v;
        }
    }
    let lo = grid[best_i.saturating_sub(1)];
    let hi = grid[(best_i + 1).min(grid.len() - 1)];
    // The objective is a minimum of two curves, so it is unimodal between
    // neighbours but may have a kink at the optimum; golden search handles it.
    let refined = golden_section_max(objective, lo, hi, 1e-12)?;
    let witness = if refined.value > best_v {
        refined
    } else {
        Maximizer {
            argmax: grid[best_i],
            value: best_v,
            ..refined
        }
    };
    Ok(
        BoundResult::new(BoundName::MhrUpperSmall, Some(n), None, witness.value)
            .with_witness(witness),
    )
}

/// The smaller of [`mhr_upper_asymptotic`] and [`mhr_upper_small_n`].
pub fn mhr_upper_best(n: u32) -> Result<BoundResult> {
    let asym = mhr_upper_asymptotic(n)?;
    let small = mhr_upper_small_n(n)?;
    let best = if small.value <= asym.value {
        small
    } else {
        asym
    };
    Ok(BoundResult {
        name: BoundName::MhrUpperBest,
        ..best
    })
}

/// Lower bound from i.i.d. exponential bidders: `max(1, 1/max_{c≥0} g_n(c))`.
pub fn mhr_lower_exponential(n: u32) -> Result<BoundResult> {
    check_n(n)?;
    let g = maximize_g_n(n, Domain::HalfLine)?;
    Ok(BoundResult::new(BoundName::MhrLower, Some(n), None, 1.0 / g.value).with_witness(g))
}

/// Ratio achieved by the prior-independent price `c_n · E[X_{n−1:n}]`.
pub fn prior_independent_bound(n: u32) -> Result<BoundResult> {
    check_n(n)?;
    let nf = n as f64;
    let g = maximize_g_n(n, Domain::UnitInterval)?;
    let h = harmonic_sum(n as u64);
    let factor = 1.0 + (nf - 1.0) / (nf - h) * ((nf - 2.0) * (1.0 - 1.0 / E).ln() - 1.0).exp();
    Ok(
        BoundResult::new(BoundName::PriorIndepUpper, Some(n), None, factor / g.value)
            .with_witness(g),
    )
}

/// Upper bound for λ-regular valuations: `1/sup g_{n,λ} + a_{n,λ}`.
pub fn lambda_upper(n: u32, lambda: f64) -> Result<BoundResult> {
    check_n(n)?;
    check_lambda(lambda)?;
    let g = sup_g_n_lambda(n, lambda)?;
    let value = 1.0 / g.value + a_n_lambda(n, lambda)?;
    Ok(BoundResult::new(BoundName::LambdaUpper, Some(n), Some(lambda), value).with_witness(g))
}

/// Points in the uniform `r` grid scanned before refinement.
pub const R_GRID_POINTS: usize = 1001;

/// Lower bound for λ-regular valuations from the rescaled Pareto family:
/// `sup_r (1 + r(β_{n,λ} − 1)) / sup_q H_{n,λ}(r, q)`.
pub fn lambda_lower(n: u32, lambda: f64) -> Result<BoundResult> {
    check_n(n)?;
    check_lambda(lambda)?;
    let profile = HnLambdaProfile::new(n, lambda)?;
    let beta_m1 = beta_n_lambda_minus_one(n, lambda);
    let ratio = |r: f64| match profile.sup_over_q(r) {
        Ok(m) => (1.0 + r * beta_m1) / m.value,
        Err(_) => f64::NAN,
    };
    let grid = linear_grid(0.0, 1.0, R_GRID_POINTS);
    let (mut best_i, mut best_v) = (0, f64::NEG_INFINITY);
    for (i, &r) in grid.iter().enumerate() {
        let v = ratio(r);
        if v.is_nan() {
            return Err(Error::Numerical(format!(
                "lower-bound ratio is NaN at r = {r}"
            )));
        }
        if v > best_v {
            best_i = i;
            best_v = v;
        }
    }
    let lo = grid[best_i.saturating_sub(1)];
    let hi = grid[(best_i + 1).min(grid.len() - 1)];
    let refined = golden_section_max(ratio, lo, hi, 1e-10)?;
    let witness = if refined.value > best_v {
        refined
    } else {
        Maximizer {
            argmax: grid[best_i],
            value: best_v,
            ..refined
        }
    };
    Ok(
        BoundResult::new(BoundName::LambdaLower, Some(n), Some(lambda), witness.value)
            .with_witness(witness),
    )
}

/// `lim_{n→∞}` ratio for λ-regular valuations: `1/sup_{c≥0} g_λ(c)`.
pub fn asymptotic_ratio(lambda: f64) -> Result<BoundResult> {
    let g = sup_g_lambda(lambda)?;
    Ok(BoundResult::new(BoundName::Asymptotic, None, Some(lambda), 1.0 / g.value).with_witness(g))
}

/// All MHR bounds for one `n`, in a fixed order.
pub fn mhr_family(n: u32) -> Result<Vec<BoundResult>> {
    Ok(vec![
        mhr_upper_asymptotic(n)?,
        mhr_upper_small_n(n)?,
        mhr_upper_best(n)?,
        mhr_lower_exponential(n)?,
        prior_independent_bound(n)?,
    ])
}

/// All λ-regular bounds for one `(n, λ)`, in a fixed order.
pub fn lambda_family(n: u32, lambda: f64) -> Result<Vec<BoundResult>> {
    Ok(vec![
        lambda_upper(n, lambda)?,
        lambda_lower(n, lambda)?,
        asymptotic_ratio(lambda)?,
    ])
}
