//! Adaptive Simpson quadrature and quantile-space integration with tail
//! truncation.

use crate::{Error, Result};

/// Recursion depth cap for adaptive Simpson.
pub const MAX_DEPTH: u32 = 60;

/// Number of equal panels the interval is split into before adapting.
const INITIAL_PANELS: usize = 16;

/// Integral of `f` over `[a, b]` by adaptive Simpson with Richardson
/// correction, to absolute tolerance `tol`.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if a == b {
        return Ok(0.0);
    }
    let width = (b - a) / INITIAL_PANELS as f64;
    let panel_tol = tol / INITIAL_PANELS as f64;
    let mut total = 0.0;
    for i in 0..INITIAL_PANELS {
        let lo = a + width * i as f64;
        let hi = if i + 1 == INITIAL_PANELS {
            b
        } else {
            lo + width
        };
        let flo = f(lo);
        let fhi = f(hi);
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        let whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += simpson_step(&f, lo, hi, flo, fmid, fhi, whole, panel_tol, MAX_DEPTH);
    }
    if total.is_nan() {
        return Err(Error::Numerical(format!("integrand is NaN on [{a}, {b}]")));
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64
where
    F: Fn(f64) -> f64,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol || !delta.is_finite() {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Truncation points `t = −ln(1 − u)` for `u = 1 − 1e−8, 1 − 1e−9, 1 − 1e−10`.
const TAIL_CUTS: [f64; 3] = [
    18.420_680_743_952_367, // ln 1e8
    20.723_265_836_946_41,  // ln 1e9
    23.025_850_929_940_457, // ln 1e10
];

/// Increment ratio at or above which a tail is declared non-integrable.
const DIVERGENCE_RATIO: f64 = 0.9;

/// `∫_{u_lo}^{1} h(u) du` written in the variable `t = −ln(1 − u)`.
///
/// `integrand(t)` must already include the Jacobian `du = e^{−t} dt`. The
/// integral is truncated at `u = 1 − 1e−10`; the last two decades are used
/// for a geometric (one-step Richardson) estimate of the remaining tail, and
/// a tail whose decade increments fail to shrink is reported as divergent.
pub fn integrate_to_upper_tail<F>(integrand: F, t_lo: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if t_lo >= TAIL_CUTS[0] {
        // Whole range lies in the extreme tail; integrate it directly.
        return adaptive_simpson(&integrand, t_lo, t_lo.max(TAIL_CUTS[2]), tol);
    }
    let body = adaptive_simpson(&integrand, t_lo, TAIL_CUTS[0], tol)?;
    let d1 = adaptive_simpson(&integrand, TAIL_CUTS[0], TAIL_CUTS[1], tol * 1e-2)?;
    let d2 = adaptive_simpson(&integrand, TAIL_CUTS[1], TAIL_CUTS[2], tol * 1e-2)?;
    let mut total = body + d1 + d2;
    if d2.abs() <= tol * 1e-2 {
        return Ok(total);
    }
    let ratio = d2 / d1;
    if !(ratio.is_finite()) || ratio >= DIVERGENCE_RATIO {
        return Err(Error::Divergent(format!(
            "tail increments do not shrink (last two decades: {d1:e}, {d2:e})"
        )));
    }
    if ratio > 0.0 {
        total += d2 * ratio / (1.0 - ratio);
    }
    Ok(total)
}
