//! Seeded Monte Carlo estimates of mechanism revenue.
//!
//! Trial `i` draws its bidders from child stream `i` of the seed, and trials
//! are summarised in fixed-size blocks merged in block order, so a result is
//! a function of the configuration alone, whatever the thread count.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::distributions::{sample, DistSpec, Distribution};
use crate::rng::CounterRng;
use crate::{Error, Result};

/// Trials per summary block.
pub const BLOCK_SIZE: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mechanism {
    /// Anonymous posted price `p`.
    PostedPrice(f64),
    /// Second-price auction with reserve `r`.
    SecondPriceReserve(f64),
}

impl FromStr for Mechanism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, value) = s.split_once(':').ok_or_else(|| {
            Error::invalid(format!("mechanism {s:?} must be posted:<p> or spa:<r>"))
        })?;
        let v: f64 = value
            .parse()
            .map_err(|_| Error::invalid(format!("not a number: {value:?}")))?;
        if !(v >= 0.0) || !v.is_finite() {
            return Err(Error::invalid(format!(
                "price must be finite and nonnegative, got {v}"
            )));
        }
        match kind {
            "posted" => Ok(Mechanism::PostedPrice(v)),
            "spa" => Ok(Mechanism::SecondPriceReserve(v)),
            _ => Err(Error::invalid(format!(
                "unknown mechanism {kind:?}; expected posted or spa"
            ))),
        }
    }
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mechanism::PostedPrice(p) => write!(f, "posted:{p}"),
            Mechanism::SecondPriceReserve(r) => write!(f, "spa:{r}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub dist: DistSpec,
    pub n: u32,
    pub mechanism: Mechanism,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimResult {
    pub mean_revenue: f64,
    pub std_error: f64,
    pub trials: u64,
    pub sold_fraction: f64,
}

#[derive(Debug, Clone, Copy, Default)]
struct Summary {
    count: u64,
    mean: f64,
    m2: f64,
    sold: u64,
}

impl Summary {
    fn push(&mut self, revenue: f64, sold: bool) {
        self.count += 1;
        let delta = revenue - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (revenue - self.mean);
        self.sold += sold as u64;
    }

    fn merge(self, other: Summary) -> Summary {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let weight = other.count as f64 / count as f64;
        Summary {
            count,
            mean: self.mean + delta * weight,
            m2: self.m2 + other.m2 + delta * delta * self.count as f64 * weight,
            sold: self.sold + other.sold,
        }
    }
}

/// Revenue of one trial and whether the item sold.
fn run_trial<D>(dist: &D, n: u32, mechanism: Mechanism, rng: &mut CounterRng) -> (f64, bool)
where
    D: Distribution + ?Sized,
{
    let (mut highest, mut second) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for _ in 0..n {
        let v = sample(dist, rng);
        if v > highest {
            second = highest;
            highest = v;
        } else if v > second {
            second = v;
        }
    }
    match mechanism {
        Mechanism::PostedPrice(p) => {
            if highest >= p {
                (p, true)
            } else {
                (0.0, false)
            }
        }
        Mechanism::SecondPriceReserve(r) => {
            if highest >= r {
                (second.max(r), true)
            } else {
                (0.0, false)
            }
        }
    }
}

fn simulate_with<D>(
    dist: &D,
    n: u32,
    mechanism: Mechanism,
    trials: u64,
    seed: u64,
) -> Result<SimResult>
where
    D: Distribution + ?Sized,
{
    if trials == 0 {
        return Err(Error::invalid("need at least one trial"));
    }
    if n == 0 {
        return Err(Error::invalid("need at least one bidder"));
    }
    let root = CounterRng::new(seed);
    let blocks = trials.div_ceil(BLOCK_SIZE);
    let summaries: Vec<Summary> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut s = Summary::default();
            for i in b * BLOCK_SIZE..((b + 1) * BLOCK_SIZE).min(trials) {
                let mut rng = root.child(i);
                let (revenue, sold) = run_trial(dist, n, mechanism, &mut rng);
                s.push(revenue, sold);
            }
            s
        })
        .collect();
    let total = summaries
        .into_iter()
        .fold(Summary::default(), Summary::merge);
    let variance = if total.count > 1 {
        total.m2 / (total.count - 1) as f64
    } else {
        0.0
    };
    Ok(SimResult {
        mean_revenue: total.mean,
        std_error: (variance / total.count as f64).sqrt(),
        trials: total.count,
        sold_fraction: total.sold as f64 / total.count as f64,
    })
}

/// Monte Carlo revenue of the anonymous posted price `p`.
pub fn simulate_posted_price<D>(
    dist: &D,
    n: u32,
    p: f64,
    trials: u64,
    seed: u64,
) -> Result<SimResult>
where
    D: Distribution + ?Sized,
{
    simulate_with(dist, n, Mechanism::PostedPrice(p), trials, seed)
}

/// Monte Carlo revenue of the second-price auction with reserve `r`.
pub fn simulate_second_price_reserve<D>(
    dist: &D,
    n: u32,
    r: f64,
    trials: u64,
    seed: u64,
) -> Result<SimResult>
where
    D: Distribution + ?Sized,
{
    simulate_with(dist, n, Mechanism::SecondPriceReserve(r), trials, seed)
}

/// Runs `config` on the global thread pool.
pub fn simulate(config: &SimConfig) -> Result<SimResult> {
    simulate_with(
        &config.dist,
        config.n,
        config.mechanism,
        config.trials,
        config.seed,
    )
}

/// Runs `config` on a dedicated pool of `threads` workers.
pub fn simulate_on_threads(config: &SimConfig, threads: usize) -> Result<SimResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Numerical(format!("cannot start worker pool: {e}")))?;
    pool.install(|| simulate(config))
}

/// Empirical `P[X < threshold]` from `samples` draws.
pub fn empirical_cdf<D>(dist: &D, threshold: f64, samples: u64, seed: u64) -> f64
where
    D: Distribution + ?Sized,
{
    let root = CounterRng::new(seed);
    let hits: u64 = (0..samples.div_ceil(BLOCK_SIZE))
        .into_par_iter()
        .map(|b| {
            let mut rng = root.child(b);
            let len = BLOCK_SIZE.min(samples - b * BLOCK_SIZE);
            (0..len)
                .filter(|_| sample(dist, &mut rng) < threshold)
                .count() as u64
        })
        .sum();
    hits as f64 / samples as f64
}
