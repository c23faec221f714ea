//! Anonymous pricing revenue, the monopoly reserve, the revenue curve and
//! Myerson's optimal auction revenue.

use std::cell::Cell;

use crate::distributions::{order_statistic_expectation, virtual_valuation, Distribution};
use crate::objectives::{maximize_g_n, one_minus_pow_complement, Domain, Q_GRID_POINTS, Q_MIN};
use crate::optimize::{bisect, geometric_grid, grid_then_golden, Maximizer};
use crate::quadrature::integrate_to_upper_tail;
use crate::{Error, Result};

/// Relative golden-section bracket used when refining a `q` grid optimum.
const Q_REFINE_REL_TOL: f64 = 1e-10;

/// Absolute revenue gap under which two candidates count as tied.
const TIE_TOLERANCE: f64 = 1e-10;

/// Relative gap within which grid values count as part of a flat maximum.
const PLATEAU_TOLERANCE: f64 = 1e-12;

/// Absolute quadrature target for revenue integrals.
const REVENUE_ABS_TOL: f64 = 1e-9;

/// Virtual valuations above the reserve more negative than this are taken
/// as evidence of an irregular distribution.
const REGULARITY_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReservePoint {
    pub reserve_price: f64,
    pub reserve_quantile: f64,
    pub monopoly_revenue: f64,
    /// The revenue curve does not have a unique, interior maximizer (it is
    /// flat towards `q → 0`, the `r* = ∞` case).
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RevenueReport {
    pub price: f64,
    pub revenue: f64,
    pub n: u32,
    /// The supremum is approached as the price grows without bound, or the
    /// objective is flat; `price` is then `∞` or the smallest optimal price.
    pub degenerate: bool,
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("need at least one bidder"));
    }
    Ok(())
}

/// `Price(F, n; p) = p (1 − F(p)^n)`.
pub fn pricing_revenue<D>(dist: &D, n: u32, p: f64) -> Result<f64>
where
    D: Distribution + ?Sized,
{
    check_n(n)?;
    if !(p >= 0.0) {
        return Err(Error::invalid(format!(
            "price must be nonnegative, got {p}"
        )));
    }
    if p == f64::INFINITY {
        return Ok(n as f64 * dist.tail_revenue_limit());
    }
    Ok(p * one_minus_pow_complement(dist.survival(p), n as f64))
}

/// `R(q) = q F^{−1}(1 − q)`; at `q = 0` the limit `lim x (1 − F(x))`.
pub fn revenue_curve<D>(dist: &D, q: f64) -> Result<f64>
where
    D: Distribution + ?Sized,
{
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::invalid(format!(
            "quantile must lie in [0, 1], got {q}"
        )));
    }
    if q == 0.0 {
        return Ok(dist.tail_revenue_limit());
    }
    Ok(q * dist.upper_quantile(q))
}

/// Maximize `f` over the geometric quantile grid, then move to the largest
/// quantile whose value ties with the maximum (the smallest optimal price).
fn maximize_over_quantiles<F>(f: F) -> Result<Maximizer>
where
    F: Fn(f64) -> f64,
{
    let grid = geometric_grid(Q_MIN, 1.0, Q_GRID_POINTS);
    let best = grid_then_golden(&f, &grid, Q_REFINE_REL_TOL)?;
    let tied = grid
        .iter()
        .rev()
        .find(|&&q| f(q) >= best.value - PLATEAU_TOLERANCE * best.value.abs().max(1.0));
    match tied {
        Some(&q) if q > best.bracket.1 => Ok(Maximizer {
            argmax: q,
            value: f(q),
            ..best
        }),
        _ => Ok(best),
    }
}

/// `Price(F, n) = sup_p Price(F, n; p)`, searched over sale quantiles.
pub fn optimal_price<D>(dist: &D, n: u32) -> Result<RevenueReport>
where
    D: Distribution + ?Sized,
{
    check_n(n)?;
    let nf = n as f64;
    let best =
        maximize_over_quantiles(|q| dist.upper_quantile(q) * one_minus_pow_complement(q, nf))?;
    let limit = nf * dist.tail_revenue_limit();
    let scale = best.value.abs().max(1.0);
    let at_scan_edge = best.bracket.0 <= Q_MIN;
    if limit > best.value + TIE_TOLERANCE * scale
        || (at_scan_edge && limit >= best.value - TIE_TOLERANCE * scale)
    {
        return Ok(RevenueReport {
            price: f64::INFINITY,
            revenue: limit.max(best.value),
            n,
            degenerate: true,
        });
    }
    Ok(RevenueReport {
        price: dist.upper_quantile(best.argmax),
        revenue: best.value,
        n,
        degenerate: limit >= best.value - TIE_TOLERANCE * scale,
    })
}

/// The monopoly reserve: the largest maximizer `q*` of the revenue curve.
pub fn monopoly_reserve<D>(dist: &D) -> Result<ReservePoint>
where
    D: Distribution + ?Sized,
{
    let best = maximize_over_quantiles(|q| q * dist.upper_quantile(q))?;
    let q_star = polish_reserve_quantile(dist, &best).unwrap_or(best.argmax);
    let r_star = dist.upper_quantile(q_star);
    let monopoly_revenue = q_star * r_star;
    let tenth = q_star / 10.0;
    let floor = monopoly_revenue - TIE_TOLERANCE;
    let degenerate =
        tenth * dist.upper_quantile(tenth) >= floor || dist.tail_revenue_limit() >= floor;
    Ok(ReservePoint {
        reserve_price: r_star,
        reserve_quantile: q_star,
        monopoly_revenue,
        degenerate,
    })
}

/// Root of `φ(F^{−1}(1 − q)) = 0` inside the refinement bracket, when the
/// virtual valuation changes sign there.
fn polish_reserve_quantile<D>(dist: &D, best: &Maximizer) -> Option<f64>
where
    D: Distribution + ?Sized,
{
    let phi = |q: f64| virtual_valuation(dist, 1.0, dist.upper_quantile(q)).unwrap_or(f64::NAN);
    let (lo, hi) = best.bracket;
    if !(phi(lo) > 0.0 && phi(hi) < 0.0) {
        return None;
    }
    let q = bisect(phi, lo, hi, 0.0).ok()?;
    (q * dist.upper_quantile(q) >= best.value - PLATEAU_TOLERANCE * best.value.abs().max(1.0))
        .then_some(q)
}

/// `Myerson(F, n) = E[max(0, φ(X_{n:n}))]` for a regular `F`.
///
/// Computed as `n ∫_{F(r*)}^1 φ(F^{−1}(u)) u^{n−1} du` plus the boundary
/// term `n · lim x(1 − F(x))`, which is nonzero only for tails as heavy as
/// the λ = 1 Pareto.
pub fn myerson_revenue<D>(dist: &D, n: u32) -> Result<f64>
where
    D: Distribution + ?Sized,
{
    check_n(n)?;
    let reserve = monopoly_reserve(dist)?;
    let nf = n as f64;
    let worst: Cell<Option<(f64, f64)>> = Cell::new(None);
    let density_fault: Cell<Option<f64>> = Cell::new(None);
    let integrand = |t: f64| {
        let q = (-t).exp();
        let x = dist.upper_quantile(q);
        let phi = match virtual_valuation(dist, 1.0, x) {
            Ok(v) => v,
            Err(_) => {
                density_fault.set(Some(x));
                return 0.0;
            }
        };
        if phi < -REGULARITY_SLACK * x.abs().max(1.0) && worst.get().is_none_or(|(_, v)| phi < v) {
            worst.set(Some((x, phi)));
        }
        let u = -(-t).exp_m1();
        nf * phi * u.powi(n as i32 - 1) * q
    };
    let t_lo = -reserve.reserve_quantile.ln();
    let body = integrate_to_upper_tail(integrand, t_lo, REVENUE_ABS_TOL)?;
    if let Some(x) = density_fault.get() {
        return Err(Error::ZeroDensity(x));
    }
    if let Some((x, value)) = worst.get() {
        return Err(Error::NotRegular { x, value });
    }
    Ok(body + nf * dist.tail_revenue_limit())
}

/// Expected revenue of the second-price auction with reserve `reserve`:
/// `r n (1 − F(r)) F(r)^{n−1} + ∫_{F(r)}^1 F^{−1}(u) n(n−1) u^{n−2}(1 − u) du`.
pub fn second_price_reserve_revenue<D>(dist: &D, n: u32, reserve: f64) -> Result<f64>
where
    D: Distribution + ?Sized,
{
    check_n(n)?;
    if !(reserve >= 0.0) || !reserve.is_finite() {
        return Err(Error::invalid(format!(
            "reserve must be finite and nonnegative, got {reserve}"
        )));
    }
    let nf = n as f64;
    let s = dist.survival(reserve);
    let f = dist.cdf(reserve);
    let reserve_term = if n == 1 {
        reserve * s
    } else {
        reserve * nf * s * f.powi(n as i32 - 1)
    };
    if n == 1 || s == 0.0 {
        return Ok(reserve_term);
    }
    let coeff = nf * (nf - 1.0);
    let integrand = |t: f64| {
        let u = -(-t).exp_m1();
        let x = dist.upper_quantile((-t).exp());
        x * coeff * u.powi(n as i32 - 2) * (-2.0 * t).exp()
    };
    let t_lo = -s.ln();
    Ok(reserve_term + integrate_to_upper_tail(integrand, t_lo, REVENUE_ABS_TOL)?)
}

/// `Apx(F, n) = Myerson(F, n) / Price(F, n)`.
pub fn approximation_ratio<D>(dist: &D, n: u32) -> Result<f64>
where
    D: Distribution + ?Sized,
{
    let myerson = myerson_revenue(dist, n)?;
    let price = optimal_price(dist, n)?;
    if !(price.revenue > 0.0) || !price.revenue.is_finite() || !myerson.is_finite() {
        return Err(Error::Numerical(format!(
            "approximation ratio undefined: Myerson {myerson}, Price {}",
            price.revenue
        )));
    }
    Ok(myerson / price.revenue)
}

/// Pricing at `c_n · E[X_{n−1:n}]`, where `c_n` maximizes `g_n` on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderStatPrice {
    pub report: RevenueReport,
    pub c_n: f64,
    pub second_highest_mean: f64,
}

/// The prior-light price `c_n · ν`, where `ν = E[X_{n−1:n}]` is supplied or
/// computed from `dist`.
pub fn second_order_stat_price<D>(dist: &D, n: u32, nu: Option<f64>) -> Result<OrderStatPrice>
where
    D: Distribution + ?Sized,
{
    if n < 2 {
        return Err(Error::invalid("the second-highest value needs n >= 2"));
    }
    let nu = match nu {
        Some(v) if v >= 0.0 && v.is_finite() => v,
        Some(v) => {
            return Err(Error::invalid(format!(
                "nu must be finite and nonnegative, got {v}"
            )))
        }
        None => order_statistic_expectation(dist, n - 1, n)?,
    };
    let c_n = maximize_g_n(n, Domain::UnitInterval)?.argmax;
    let price = c_n * nu;
    Ok(OrderStatPrice {
        report: RevenueReport {
            price,
            revenue: pricing_revenue(dist, n, price)?,
            n,
            degenerate: false,
        },
        c_n,
        second_highest_mean: nu,
    })
}
