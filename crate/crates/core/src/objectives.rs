//! Auxiliary objective functions behind the approximation-ratio bounds and
//! their maximizers.
//!
//! * `g_n(c) = c [1 − (1 − e^{−c(H_n − 1)})^n]` (MHR pricing at `c·E[X_{n−1:n}]`)
//! * `g_{n,λ}(c) = c [1 − [1 − [1 + c(β_{n,λ} − 1)]^{−1/λ}]^n]`
//! * `g_λ(c) = c (1 − e^{−(cΓ(2 − λ))^{−1/λ}})`, the `n → ∞` limit
//! * `H_{n,λ}(r, q) = (1 + r(q^{−λ} − 1)) (1 − (1 − q)^n)`, the rescaled
//!   Pareto pricing revenue at quantile `q`

use std::sync::OnceLock;

use crate::optimize::{
    bisect, geometric_grid, golden_section_max, grid_then_golden, linear_grid, Maximizer,
    BRACKET_TOLERANCE, MAX_ITERATIONS,
};
use crate::special::{beta_n_lambda_minus_one, check_lambda, gamma, harmonic_sum};
use crate::{Error, Result};

/// Search domain for [`maximize_g_n`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    UnitInterval,
    HalfLine,
}

/// `1 − (1 − p)^n` evaluated without cancellation.
#[inline]
pub(crate) fn one_minus_pow_complement(p: f64, n: f64) -> f64 {
    -(n * (-p).ln_1p()).exp_m1()
}

fn check_c(c: f64) -> Result<()> {
    if !(c >= 0.0) || !c.is_finite() {
        return Err(Error::invalid(format!(
            "c must be a finite nonnegative real, got {c}"
        )));
    }
    Ok(())
}

/// `g_n(c)`.
pub fn g_n(n: u32, c: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("g_n needs n >= 1"));
    }
    check_c(c)?;
    Ok(g_n_raw(n, harmonic_sum(n as u64) - 1.0, c))
}

#[inline]
fn g_n_raw(n: u32, h_minus_one: f64, c: f64) -> f64 {
    c * one_minus_pow_complement((-c * h_minus_one).exp(), n as f64)
}

/// `g_n'(c) = 1 − (1 − e^{−x})^n (1 + n x / (e^x − 1))` with `x = c(H_n − 1)`.
pub fn g_n_derivative(n: u32, c: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("g_n needs n >= 1"));
    }
    check_c(c)?;
    let x = c * (harmonic_sum(n as u64) - 1.0);
    if x == 0.0 {
        return Ok(1.0);
    }
    let pow = (n as f64 * (-(-x).exp()).ln_1p()).exp();
    Ok(1.0 - pow * (1.0 + n as f64 * x / x.exp_m1()))
}

/// Maximizer of `g_n` over `[0, 1]` or `[0, ∞)`.
///
/// On the half-line the bracket is grown by doubling `c` until `g_n`
/// decreases twice in a row. `g_1(c) = c` is unbounded, so the half-line
/// search fails for `n = 1`.
pub fn maximize_g_n(n: u32, domain: Domain) -> Result<Maximizer> {
    if n == 0 {
        return Err(Error::invalid("g_n needs n >= 1"));
    }
    let hm1 = harmonic_sum(n as u64) - 1.0;
    let f = |c: f64| g_n_raw(n, hm1, c);
    match domain {
        Domain::UnitInterval => golden_section_max(f, 0.0, 1.0, BRACKET_TOLERANCE),
        Domain::HalfLine => {
            let mut points = vec![0.0, 1.0];
            let mut values = vec![0.0, f(1.0)];
            let mut decreases = 0;
            while decreases < 2 {
                if points.len() > MAX_ITERATIONS {
                    return Err(Error::NoConvergence {
                        method: "half-line bracketing of g_n",
                        iterations: MAX_ITERATIONS,
                    });
                }
                let next = 2.0 * points[points.len() - 1];
                let v = f(next);
                if v < values[values.len() - 1] {
                    decreases += 1;
                } else {
                    decreases = 0;
                }
                points.push(next);
                values.push(v);
            }
            // The peak precedes the first of the two decreases.
            let k = points.len() - 3;
            let lo = points[k.saturating_sub(1)];
            let hi = points[k + 1];
            golden_section_max(f, lo, hi, BRACKET_TOLERANCE * hi.max(1.0))
        }
    }
}

/// `g_{n,λ}(c)`.
pub fn g_n_lambda(n: u32, lambda: f64, c: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::invalid("g_{n,λ} needs n >= 2"));
    }
    check_lambda(lambda)?;
    check_c(c)?;
    Ok(g_n_lambda_raw(
        n,
        lambda,
        beta_n_lambda_minus_one(n, lambda),
        c,
    ))
}

#[inline]
fn g_n_lambda_raw(n: u32, lambda: f64, beta_m1: f64, c: f64) -> f64 {
    let survive = (-(c * beta_m1).ln_1p() / lambda).exp();
    c * one_minus_pow_complement(survive, n as f64)
}

/// `sup_{c ∈ [0,1]} g_{n,λ}(c)`: a coarse scan seeds golden-section search.
pub fn sup_g_n_lambda(n: u32, lambda: f64) -> Result<Maximizer> {
    if n < 2 {
        return Err(Error::invalid("g_{n,λ} needs n >= 2"));
    }
    check_lambda(lambda)?;
    let beta_m1 = beta_n_lambda_minus_one(n, lambda);
    let grid = linear_grid(0.0, 1.0, 101);
    let mut m = grid_then_golden(|c| g_n_lambda_raw(n, lambda, beta_m1, c), &grid, 1e-10)?;
    m.bracket = (0.0, 1.0);
    Ok(m)
}

/// `g_λ(c)`, continuously extended by `g_λ(0) = 0`.
pub fn g_lambda(lambda: f64, c: f64) -> Result<f64> {
    check_lambda(lambda)?;
    check_c(c)?;
    Ok(g_lambda_raw(lambda, gamma(2.0 - lambda), c))
}

#[inline]
fn g_lambda_raw(lambda: f64, gamma_2ml: f64, c: f64) -> f64 {
    if c == 0.0 {
        return 0.0;
    }
    let w = (-(c * gamma_2ml).ln() / lambda).exp();
    -c * (-w).exp_m1()
}

/// `sup_{c ∈ [0,1]} g_λ(c)` in closed form.
///
/// For λ ≤ λ* the maximum is interior, at `c = η^{−λ}/Γ(2 − λ)`, with value
/// `η^{1−λ} / (Γ(2 − λ)(λ + η))`; above λ* it sits at `c = 1`.
pub fn sup_g_lambda(lambda: f64) -> Result<Maximizer> {
    check_lambda(lambda)?;
    let g2 = gamma(2.0 - lambda);
    if lambda <= lambda_star() {
        let e = eta(lambda)?;
        let value = e.powf(1.0 - lambda) / (g2 * (lambda + e));
        let argmax = e.powf(-lambda) / g2;
        Ok(Maximizer::exact(argmax, value, (0.0, 1.0)))
    } else {
        let value = -(-g2.powf(-1.0 / lambda)).exp_m1();
        Ok(Maximizer::exact(1.0, value, (0.0, 1.0)))
    }
}

/// Numeric `sup_{c ∈ [0,1]} g_λ(c)` by grid scan and golden-section search.
pub fn sup_g_lambda_numeric(lambda: f64) -> Result<Maximizer> {
    check_lambda(lambda)?;
    let g2 = gamma(2.0 - lambda);
    let grid = linear_grid(0.0, 1.0, 1001);
    grid_then_golden(|c| g_lambda_raw(lambda, g2, c), &grid, 1e-10)
}

/// `η(λ)`: the unique positive root of `e^x = 1 + x/λ`, for λ ∈ (0, 1).
pub fn eta(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::invalid(format!(
            "eta needs lambda in (0, 1), got {lambda}"
        )));
    }
    let f = |x: f64| x.exp_m1() - x / lambda;
    // f < 0 just right of zero; grow the upper end until f turns positive.
    let mut hi = 1.0;
    let mut guard = 0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
        guard += 1;
        if guard > 64 {
            return Err(Error::NoConvergence {
                method: "eta bracketing",
                iterations: guard,
            });
        }
    }
    let lo = hi * 0.5_f64.powi(60);
    // f(lo) can round to zero for λ near 1; fall back to the open end.
    let lo = if f(lo) < 0.0 { lo } else { 0.0 };
    if lo == 0.0 {
        return bisect(|x| if x == 0.0 { -1.0 } else { f(x) }, 0.0, hi, 1e-15 * hi);
    }
    bisect(f, lo, hi, 1e-15 * hi)
}

/// `ξ(λ) = 1 − (1 + Γ(2−λ)^{−1/λ}/λ) e^{−Γ(2−λ)^{−1/λ}}`, whose root is λ*.
pub fn lambda_star_objective(lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    let t = gamma(2.0 - lambda).powf(-1.0 / lambda);
    Ok(1.0 - (1.0 + t / lambda) * (-t).exp())
}

/// λ* ≈ 0.4940, the branch point of [`sup_g_lambda`].
pub fn lambda_star() -> f64 {
    static LAMBDA_STAR: OnceLock<f64> = OnceLock::new();
    *LAMBDA_STAR.get_or_init(|| {
        let f = |l: f64| lambda_star_objective(l).expect("lambda in (0, 1]");
        debug_assert!(f(0.1) < 0.0 && f(1.0) > 0.0);
        bisect(f, 0.1, 1.0, 1e-14).expect("sign change on [0.1, 1]")
    })
}

/// Below this quantile `H_{n,λ}` is replaced by its limit at `q = 0`.
pub const Q_MIN: f64 = 1e-12;

fn check_unit(name: &str, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::invalid(format!(
            "{name} must lie in [0, 1], got {v}"
        )));
    }
    Ok(())
}

/// `H_{n,λ}(r, q)`, with the removable singularity at `q = 0` filled in.
pub fn h_n_lambda(n: u32, lambda: f64, r: f64, q: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::invalid("H_{n,λ} needs n >= 2"));
    }
    check_lambda(lambda)?;
    check_unit("r", r)?;
    check_unit("q", q)?;
    Ok(h_raw(n, lambda, r, q))
}

/// `lim_{q→0} H_{n,λ}(r, q)`: `n·r` at λ = 1, zero otherwise.
#[inline]
fn h_limit_at_zero(n: u32, lambda: f64, r: f64) -> f64 {
    if lambda == 1.0 {
        n as f64 * r
    } else {
        0.0
    }
}

#[inline]
fn h_raw(n: u32, lambda: f64, r: f64, q: f64) -> f64 {
    if q < Q_MIN {
        return h_limit_at_zero(n, lambda, r);
    }
    (1.0 + r * (-lambda * q.ln()).exp_m1()) * one_minus_pow_complement(q, n as f64)
}

/// Number of `q` grid points scanned before golden-section refinement.
pub const Q_GRID_POINTS: usize = 1000;

/// `H_{n,λ}(r, ·)` tabulated on a fixed geometric `q` grid so that scans for
/// many values of `r` cost one multiply-add per grid point.
#[derive(Debug, Clone)]
pub struct HnLambdaProfile {
    n: u32,
    lambda: f64,
    q: Vec<f64>,
    // q^{-λ} − 1
    price_excess: Vec<f64>,
    // 1 − (1 − q)^n
    sale_prob: Vec<f64>,
}

impl HnLambdaProfile {
    pub fn new(n: u32, lambda: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("H_{n,λ} needs n >= 2"));
        }
        check_lambda(lambda)?;
        let q = geometric_grid(Q_MIN, 1.0, Q_GRID_POINTS);
        let price_excess = q.iter().map(|&q| (-lambda * q.ln()).exp_m1()).collect();
        let sale_prob = q
            .iter()
            .map(|&q| one_minus_pow_complement(q, n as f64))
            .collect();
        Ok(HnLambdaProfile {
            n,
            lambda,
            q,
            price_excess,
            sale_prob,
        })
    }

    /// `sup_{q ∈ [0,1]} H_{n,λ}(r, q)`, including the `q → 0` limit.
    pub fn sup_over_q(&self, r: f64) -> Result<Maximizer> {
        check_unit("r", r)?;
        let (n, lambda) = (self.n, self.lambda);
        let mut best_i = 0;
        let mut best_v = f64::NEG_INFINITY;
        for (i, (a, b)) in self.price_excess.iter().zip(&self.sale_prob).enumerate() {
            let v = (1.0 + r * a) * b;
            if v >= best_v {
                best_v = v;
                best_i = i;
            }
        }
        let lo = self.q[best_i.saturating_sub(1)];
        let hi = self.q[(best_i + 1).min(self.q.len() - 1)];
        let f = |q: f64| h_raw(n, lambda, r, q);
        let refined = golden_section_max(f, lo, hi, 1e-10 * (hi - lo))?;
        let mut best = if refined.value >= best_v {
            refined
        } else {
            Maximizer {
                argmax: self.q[best_i],
                value: best_v,
                iterations: refined.iterations,
                bracket: (lo, hi),
            }
        };
        let limit = h_limit_at_zero(n, lambda, r);
        if limit > best.value {
            best = Maximizer::exact(0.0, limit, (0.0, self.q[0]));
        }
        best.bracket = (0.0, 1.0);
        Ok(best)
    }
}

/// `sup_{q ∈ [0,1]} H_{n,λ}(r, q)`.
pub fn sup_h_n_lambda_over_q(n: u32, lambda: f64, r: f64) -> Result<Maximizer> {
    HnLambdaProfile::new(n, lambda)?.sup_over_q(r)
}
