//! Continuous valuation distributions, their order statistics and virtual
//! valuations, λ-regularity certificates, and order-statistic tail bounds.
//!
//! All integrals are taken in quantile space, `u = F(x)`, and further mapped
//! through `t = −ln(1 − u)` so that unbounded supports become smooth,
//! exponentially decaying integrands.

use std::fmt;
use std::str::FromStr;

use crate::quadrature::integrate_to_upper_tail;
use crate::rng::CounterRng;
use crate::special::{check_lambda, harmonic_sum, ln_gamma};
use crate::{Error, Result};

/// Support interval `[low, high]`; `high` may be `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Support {
    pub low: f64,
    pub high: f64,
}

/// A continuous valuation distribution on `[0, ∞)`.
pub trait Distribution: Send + Sync {
    fn cdf(&self, x: f64) -> f64;

    /// `1 − F(x)`; implementors override this when they can avoid the
    /// cancellation.
    fn survival(&self, x: f64) -> f64 {
        1.0 - self.cdf(x)
    }

    fn pdf(&self, x: f64) -> f64;

    /// Inverse cdf on `[0, 1]`.
    fn quantile(&self, u: f64) -> f64;

    /// `F^{−1}(1 − q)`, the price that sells with probability `q`.
    fn upper_quantile(&self, q: f64) -> f64 {
        self.quantile(1.0 - q)
    }

    fn support(&self) -> Support;

    /// `lim_{x→∞} x (1 − F(x))`, i.e. the revenue curve at `q = 0`.
    fn tail_revenue_limit(&self) -> f64 {
        0.0
    }
}

/// Unit-rate exponential.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Exponential;

impl Distribution for Exponential {
    fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            0.0
        } else {
            -(-x).exp_m1()
        }
    }

    fn survival(&self, x: f64) -> f64 {
        if x <= 0.0 {
            1.0
        } else {
            (-x).exp()
        }
    }

    fn pdf(&self, x: f64) -> f64 {
        if x < 0.0 {
            0.0
        } else {
            (-x).exp()
        }
    }

    fn quantile(&self, u: f64) -> f64 {
        -(-u).ln_1p()
    }

    fn upper_quantile(&self, q: f64) -> f64 {
        -q.ln()
    }

    fn support(&self) -> Support {
        Support {
            low: 0.0,
            high: f64::INFINITY,
        }
    }
}

/// Uniform on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Uniform01;

impl Distribution for Uniform01 {
    fn cdf(&self, x: f64) -> f64 {
        x.clamp(0.0, 1.0)
    }

    fn pdf(&self, x: f64) -> f64 {
        if (0.0..=1.0).contains(&x) {
            1.0
        } else {
            0.0
        }
    }

    fn quantile(&self, u: f64) -> f64 {
        u.clamp(0.0, 1.0)
    }

    fn upper_quantile(&self, q: f64) -> f64 {
        (1.0 - q).clamp(0.0, 1.0)
    }

    fn support(&self) -> Support {
        Support {
            low: 0.0,
            high: 1.0,
        }
    }
}

/// Rescaled Pareto `F_{λ,r}(x) = 1 − [1 + (x − 1)/r]^{−1/λ}` on `[1, ∞)`.
///
/// It is λ-regular but not λ'-regular for any λ' < λ, and reduces to the
/// standard Pareto `1 − x^{−1/λ}` at `r = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RescaledPareto {
    lambda: f64,
    r: f64,
}

impl RescaledPareto {
    pub fn new(lambda: f64, r: f64) -> Result<Self> {
        check_lambda(lambda)?;
        if !(r > 0.0 && r <= 1.0) {
            return Err(Error::invalid(format!("r must lie in (0, 1], got {r}")));
        }
        Ok(RescaledPareto { lambda, r })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    #[inline]
    fn scaled(&self, x: f64) -> f64 {
        1.0 + (x - 1.0) / self.r
    }
}

impl Distribution for RescaledPareto {
    fn cdf(&self, x: f64) -> f64 {
        if x <= 1.0 {
            0.0
        } else {
            -(-self.scaled(x).ln() / self.lambda).exp_m1()
        }
    }

    fn survival(&self, x: f64) -> f64 {
        if x <= 1.0 {
            1.0
        } else {
            (-self.scaled(x).ln() / self.lambda).exp()
        }
    }

    fn pdf(&self, x: f64) -> f64 {
        if x < 1.0 {
            0.0
        } else {
            let s = self.scaled(x);
            (-(1.0 / self.lambda + 1.0) * s.ln()).exp() / (self.lambda * self.r)
        }
    }

    fn quantile(&self, u: f64) -> f64 {
        self.upper_quantile(1.0 - u)
    }

    fn upper_quantile(&self, q: f64) -> f64 {
        1.0 + self.r * (-self.lambda * q.ln()).exp_m1()
    }

    fn support(&self) -> Support {
        Support {
            low: 1.0,
            high: f64::INFINITY,
        }
    }

    fn tail_revenue_limit(&self) -> f64 {
        // x (1 − F(x)) → r when λ = 1 and → 0 for lighter tails.
        if self.lambda == 1.0 {
            self.r
        } else {
            0.0
        }
    }
}

/// A built-in distribution named on the command line as `exponential`,
/// `uniform` or `pareto:<lambda>:<r>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistSpec {
    Exponential,
    Uniform,
    Pareto(RescaledPareto),
}

impl DistSpec {
    fn inner(&self) -> &dyn Distribution {
        match self {
            DistSpec::Exponential => &Exponential,
            DistSpec::Uniform => &Uniform01,
            DistSpec::Pareto(p) => p,
        }
    }
}

impl Distribution for DistSpec {
    fn cdf(&self, x: f64) -> f64 {
        self.inner().cdf(x)
    }
    fn survival(&self, x: f64) -> f64 {
        self.inner().survival(x)
    }
    fn pdf(&self, x: f64) -> f64 {
        self.inner().pdf(x)
    }
    fn quantile(&self, u: f64) -> f64 {
        self.inner().quantile(u)
    }
    fn upper_quantile(&self, q: f64) -> f64 {
        self.inner().upper_quantile(q)
    }
    fn support(&self) -> Support {
        self.inner().support()
    }
    fn tail_revenue_limit(&self) -> f64 {
        self.inner().tail_revenue_limit()
    }
}

impl FromStr for DistSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["exponential"] => Ok(DistSpec::Exponential),
            ["uniform"] => Ok(DistSpec::Uniform),
            ["pareto", lambda, r] => {
                let parse = |v: &str| {
                    v.parse::<f64>()
                        .map_err(|_| Error::invalid(format!("not a number: {v:?}")))
                };
                Ok(DistSpec::Pareto(RescaledPareto::new(
                    parse(lambda)?,
                    parse(r)?,
                )?))
            }
            _ => Err(Error::invalid(format!(
                "unknown distribution {s:?}; expected exponential, uniform or pareto:<lambda>:<r>"
            ))),
        }
    }
}

impl fmt::Display for DistSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistSpec::Exponential => f.write_str("exponential"),
            DistSpec::Uniform => f.write_str("uniform"),
            DistSpec::Pareto(p) => write!(f, "pareto:{}:{}", p.lambda, p.r),
        }
    }
}

/// `φ_λ(x) = λx − (1 − F(x))/f(x)`.
pub fn virtual_valuation<D>(dist: &D, lambda: f64, x: f64) -> Result<f64>
where
    D: Distribution + ?Sized,
{
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::invalid(format!(
            "lambda must lie in [0, 1], got {lambda}"
        )));
    }
    let density = dist.pdf(x);
    if !(density > 0.0) {
        return Err(Error::ZeroDensity(x));
    }
    Ok(lambda * x - dist.survival(x) / density)
}

/// Outcome of a grid-based λ-regularity check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularityReport {
    pub lambda: f64,
    pub passed: bool,
    /// Largest relative slope decrease (convexity) or increase (concavity,
    /// λ = 0) between neighbouring grid cells; ≤ 0 means none was seen.
    pub worst_violation: f64,
    pub grid_size: usize,
}

/// Relative slope violation tolerated by [`check_lambda_regularity`].
pub const REGULARITY_TOLERANCE: f64 = 1e-7;

/// Grid certificate that `(1 − F)^{−λ}` is convex (λ > 0) or that
/// `ln(1 − F)` is concave (λ = 0).
///
/// The grid is uniform in quantile over `[1e−6, 1 − 1e−6]`; slopes between
/// consecutive points must be monotone up to a tolerance relative to their
/// magnitude.
pub fn check_lambda_regularity<D>(
    dist: &D,
    lambda: f64,
    grid_size: usize,
) -> Result<RegularityReport>
where
    D: Distribution + ?Sized,
{
    if grid_size < 3 {
        return Err(Error::invalid(
            "regularity check needs at least 3 grid points",
        ));
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::invalid(format!(
            "lambda must lie in [0, 1], got {lambda}"
        )));
    }
    let (u_lo, u_hi) = (1e-6, 1.0 - 1e-6);
    let points: Vec<(f64, f64)> = (0..grid_size)
        .map(|i| {
            let u = u_lo + (u_hi - u_lo) * i as f64 / (grid_size - 1) as f64;
            let x = dist.quantile(u);
            let s = dist.survival(x);
            let transform = if lambda == 0.0 {
                s.ln()
            } else {
                (-lambda * s.ln()).exp()
            };
            (x, transform)
        })
        .collect();
    let slopes: Vec<f64> = points
        .windows(2)
        .filter(|w| w[1].0 > w[0].0)
        .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
        .collect();
    let mut worst = f64::NEG_INFINITY;
    for w in slopes.windows(2) {
        let scale = w[0].abs() + w[1].abs();
        if scale == 0.0 {
            continue;
        }
        let drop = if lambda == 0.0 {
            w[1] - w[0]
        } else {
            w[0] - w[1]
        };
        worst = worst.max(drop / scale);
    }
    Ok(RegularityReport {
        lambda,
        passed: worst <= REGULARITY_TOLERANCE,
        worst_violation: worst,
        grid_size,
    })
}

/// Absolute quadrature target for bounded supports.
const ORDER_STAT_ABS_TOL: f64 = 1e-8;
/// Relative quadrature target for unbounded supports.
const ORDER_STAT_REL_TOL: f64 = 1e-7;

/// `E[X_{k:n}]`, the mean of the `k`-th lowest of `n` draws:
/// `k C(n,k) ∫_0^1 F^{−1}(u) u^{k−1} (1 − u)^{n−k} du`.
pub fn order_statistic_expectation<D>(dist: &D, k: u32, n: u32) -> Result<f64>
where
    D: Distribution + ?Sized,
{
    if k == 0 || k > n {
        return Err(Error::invalid(format!(
            "need 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    let (kf, nf) = (k as f64, n as f64);
    let ln_coeff = ln_gamma(nf + 1.0) - ln_gamma(kf) - ln_gamma(nf - kf + 1.0);
    // In t = −ln(1 − u): u = 1 − e^{−t}, (1 − u)^{n−k} du = e^{−(n−k+1)t} dt.
    let integrand = |t: f64| {
        let u = -(-t).exp_m1();
        let x = dist.upper_quantile((-t).exp());
        let log_weight = ln_coeff + (kf - 1.0) * u.ln() - (nf - kf + 1.0) * t;
        if k == 1 {
            x * (ln_coeff - nf * t).exp()
        } else {
            x * log_weight.exp()
        }
    };
    let tol = if dist.support().high.is_finite() {
        ORDER_STAT_ABS_TOL
    } else {
        // Scale the target by a cheap magnitude estimate of the mean.
        let scale = dist.quantile(1.0 - 0.5_f64.powf(1.0 / nf)).abs().max(1.0);
        ORDER_STAT_REL_TOL * scale * 1e-2
    };
    integrate_to_upper_tail(integrand, 0.0, tol)
}

/// `E[X]`.
pub fn mean<D>(dist: &D) -> Result<f64>
where
    D: Distribution + ?Sized,
{
    order_statistic_expectation(dist, 1, 1)
}

/// Inverse-transform draw `F^{−1}(u)` with `u` uniform on `(0, 1)`.
pub fn sample<D>(dist: &D, rng: &mut CounterRng) -> f64
where
    D: Distribution + ?Sized,
{
    dist.quantile(rng.next_open01())
}

fn check_order(n: u32, k: u32) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!(
            "need 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    Ok(())
}

fn check_c_unit(c: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&c) {
        return Err(Error::invalid(format!("c must lie in [0, 1], got {c}")));
    }
    Ok(())
}

/// For MHR `X`: `P[X < c·E[X_{k:n}]] ≤ 1 − e^{−c(H_n − H_{n−k})}`.
pub fn mhr_tail_bound(n: u32, k: u32, c: f64) -> Result<f64> {
    check_order(n, k)?;
    check_c_unit(c)?;
    let spread = harmonic_sum(n as u64) - harmonic_sum((n - k) as u64);
    Ok(-(-c * spread).exp_m1())
}

/// For λ-regular `X`:
/// `P[X ≤ c·E[X_{k:n}]] ≤ 1 − (1 + c(ρ − 1))^{−1/λ}` with
/// `ρ = n! Γ(n+1−k−λ) / ((n−k)! Γ(n+1−λ))` (equal to `β_{n,λ}` at `k = n−1`).
pub fn lambda_tail_bound(n: u32, k: u32, lambda: f64, c: f64) -> Result<f64> {
    check_order(n, k)?;
    check_lambda(lambda)?;
    check_c_unit(c)?;
    let (nf, kf) = (n as f64, k as f64);
    let shifted = nf + 1.0 - kf - lambda;
    if !(shifted > 0.0) {
        return Err(Error::invalid(format!(
            "gamma argument n + 1 - k - lambda = {shifted} must be positive"
        )));
    }
    let ln_ratio = ln_gamma(nf + 1.0) + ln_gamma(shifted)
        - ln_gamma(nf - kf + 1.0)
        - ln_gamma(nf + 1.0 - lambda);
    let ratio_m1 = ln_ratio.exp_m1();
    Ok(-(-(c * ratio_m1).ln_1p() / lambda).exp_m1())
}
