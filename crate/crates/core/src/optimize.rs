//! One-dimensional search: golden-section maximization and bracketed
//! bisection.

use crate::{Error, Result};

/// Iteration cap shared by every iterative search in the crate.
pub const MAX_ITERATIONS: usize = 200;

/// Default bracket width at which a search over `c` or `r` stops.
pub const BRACKET_TOLERANCE: f64 = 1e-12;

// 1/φ
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Location and value of a maximum found by a bracketing search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximizer {
    pub argmax: f64,
    pub value: f64,
    pub iterations: usize,
    pub bracket: (f64, f64),
}

impl Maximizer {
    /// A maximizer known in closed form.
    pub fn exact(argmax: f64, value: f64, bracket: (f64, f64)) -> Self {
        Maximizer {
            argmax,
            value,
            iterations: 0,
            bracket,
        }
    }
}

fn checked(value: f64, at: f64) -> Result<f64> {
    if value.is_nan() {
        Err(Error::Numerical(format!("objective is NaN at {at}")))
    } else {
        Ok(value)
    }
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`.
///
/// Stops once the bracket is narrower than `tol`. The endpoints are compared
/// against the interior optimum so that boundary maxima are reported exactly.
pub fn golden_section_max<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<Maximizer>
where
    F: Fn(f64) -> f64,
{
    if !(lo <= hi) {
        return Err(Error::invalid(format!("empty bracket [{lo}, {hi}]")));
    }
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = checked(f(c), c)?;
    let mut fd = checked(f(d), d)?;
    let mut iterations = 0;
    while b - a > tol {
        if iterations == MAX_ITERATIONS {
            return Err(Error::NoConvergence {
                method: "golden-section search",
                iterations,
            });
        }
        iterations += 1;
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = checked(f(c), c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = checked(f(d), d)?;
        }
    }
    let mut best = if fc >= fd { (c, fc) } else { (d, fd) };
    for x in [lo, hi] {
        let fx = checked(f(x), x)?;
        if fx > best.1 {
            best = (x, fx);
        }
    }
    Ok(Maximizer {
        argmax: best.0,
        value: best.1,
        iterations,
        bracket: (lo, hi),
    })
}

/// Maximize `f` by scanning `grid` (sorted ascending) and refining the best
/// grid point with golden-section search between its neighbours.
///
/// Ties on the grid go to the largest abscissa. `rel_tol` is the refinement
/// bracket width relative to the neighbour spacing.
pub fn grid_then_golden<F>(f: F, grid: &[f64], rel_tol: f64) -> Result<Maximizer>
where
    F: Fn(f64) -> f64,
{
    if grid.is_empty() {
        return Err(Error::invalid("empty search grid"));
    }
    let mut best_i = 0;
    let mut best_v = f64::NEG_INFINITY;
    for (i, &x) in grid.iter().enumerate() {
        let v = checked(f(x), x)?;
        if v >= best_v {
            best_v = v;
            best_i = i;
        }
    }
    let lo = grid[best_i.saturating_sub(1)];
    let hi = grid[(best_i + 1).min(grid.len() - 1)];
    let refined = golden_section_max(&f, lo, hi, rel_tol * (hi - lo))?;
    if refined.value > best_v {
        Ok(refined)
    } else {
        Ok(Maximizer {
            argmax: grid[best_i],
            value: best_v,
            iterations: refined.iterations,
            bracket: (lo, hi),
        })
    }
}

/// Points `lo, …, hi` spaced geometrically; `count ≥ 2`.
pub fn geometric_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let step = (hi / lo).ln() / (count - 1) as f64;
    let mut grid: Vec<f64> = (0..count).map(|i| lo * (step * i as f64).exp()).collect();
    grid[count - 1] = hi;
    grid
}

/// Points `lo, …, hi` spaced uniformly; `count ≥ 2`.
pub fn linear_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let step = (hi - lo) / (count - 1) as f64;
    let mut grid: Vec<f64> = (0..count).map(|i| lo + step * i as f64).collect();
    grid[count - 1] = hi;
    grid
}

/// Root of `f` in `[lo, hi]` by bisection; `f(lo)` and `f(hi)` must have
/// opposite signs (a zero at either end counts).
pub fn bisect<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let fa = checked(f(a), a)?;
    let fb = checked(f(b), b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::invalid(format!(
            "no sign change on [{lo}, {hi}]: f = {fa}, {fb}"
        )));
    }
    let a_negative = fa < 0.0;
    for _ in 0..MAX_ITERATIONS {
        let mid = 0.5 * (a + b);
        if b - a <= tol || mid == a || mid == b {
            return Ok(mid);
        }
        let fm = checked(f(mid), mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == a_negative {
            a = mid;
        } else {
            b = mid;
        }
    }
    Err(Error::NoConvergence {
        method: "bisection",
        iterations: MAX_ITERATIONS,
    })
}
