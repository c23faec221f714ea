//! Scalar special functions: harmonic numbers, log-gamma, and the
//! coefficients `β_{n,λ}`, `a_{n,λ}` used by the λ-regular bounds.

use crate::{Error, Result};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `H_n = Σ_{i=1..n} 1/i`, summed in increasing-`i` order.
pub fn harmonic(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("harmonic number needs n >= 1"));
    }
    Ok(harmonic_sum(n))
}

/// Harmonic sum with `H_0 = 0`.
pub(crate) fn harmonic_sum(n: u64) -> f64 {
    (1..=n).map(|i| 1.0 / i as f64).sum()
}

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

/// Natural logarithm of Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::invalid(format!("log_gamma needs x > 0, got {x}")));
    }
    Ok(ln_gamma(x))
}

/// Unchecked log-gamma; callers guarantee `x > 0`.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x keeps us on the accurate side of the series.
        return ln_gamma(x + 1.0) - x.ln();
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Γ(x) for moderate positive arguments.
pub(crate) fn gamma(x: f64) -> f64 {
    ln_gamma(x).exp()
}

fn check_n_lambda(n: u32, lambda: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(format!("need n >= 2, got {n}")));
    }
    check_lambda(lambda)
}

pub(crate) fn check_lambda(lambda: f64) -> Result<()> {
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::invalid(format!(
            "lambda must lie in (0, 1], got {lambda}"
        )));
    }
    Ok(())
}

/// `ln β_{n,λ} = ln n! + ln Γ(2 − λ) − ln Γ(n + 1 − λ)`.
pub(crate) fn ln_beta_n_lambda(n: u32, lambda: f64) -> f64 {
    let n = n as f64;
    ln_gamma(n + 1.0) + ln_gamma(2.0 - lambda) - ln_gamma(n + 1.0 - lambda)
}

/// `β_{n,λ} = n! Γ(2 − λ) / Γ(n + 1 − λ)`, evaluated in log space.
pub fn beta_n_lambda(n: u32, lambda: f64) -> Result<f64> {
    check_n_lambda(n, lambda)?;
    Ok(ln_beta_n_lambda(n, lambda).exp())
}

/// `β_{n,λ} − 1` without cancellation for small λ.
pub(crate) fn beta_n_lambda_minus_one(n: u32, lambda: f64) -> f64 {
    ln_beta_n_lambda(n, lambda).exp_m1()
}

/// The additive term `a_{n,λ}` of the λ-regular upper bound.
///
/// For λ < 1 this is `t (1 − t)^{n−1} / (1 − (1 − t)^n)` with
/// `t = (1 − λ)^{1/λ}`; at λ = 1 it is exactly `1/n`.
pub fn a_n_lambda(n: u32, lambda: f64) -> Result<f64> {
    check_n_lambda(n, lambda)?;
    if lambda == 1.0 {
        return Ok(1.0 / n as f64);
    }
    let t = ((-lambda).ln_1p() / lambda).exp();
    let ln_keep = (-t).ln_1p();
    let numerator = t * ((n as f64 - 1.0) * ln_keep).exp();
    let denominator = -(n as f64 * ln_keep).exp_m1();
    Ok(numerator / denominator)
}

/// `∫_0^q (1 − (1 − z)^n) / z dz = Σ_{j=1..n} (1 − (1 − q)^j) / j`.
pub fn partial_harmonic_integral(n: u32, q: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("partial harmonic integral needs n >= 1"));
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::invalid(format!("q must lie in [0, 1], got {q}")));
    }
    Ok(partial_harmonic_sum(n, q))
}

pub(crate) fn partial_harmonic_sum(n: u32, q: f64) -> f64 {
    let keep = 1.0 - q;
    let mut power = 1.0;
    let mut sum = 0.0;
    for j in 1..=n {
        power *= keep;
        sum += (1.0 - power) / j as f64;
    }
    sum
}
