#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anonprice::bounds::{lambda_family, mhr_family, BoundResult};
use anonprice::distributions::DistSpec;
use anonprice::figures::{figure_tables, FigureId};
use anonprice::revenue::{
    monopoly_reserve, optimal_price, pricing_revenue, second_order_stat_price,
    second_price_reserve_revenue,
};
use anonprice::simulation::{simulate, simulate_on_threads, Mechanism, SimConfig};
use anonprice::Error;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "anonprice",
    version,
    about = "Anonymous pricing versus optimal auctions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Approximation-ratio bounds as CSV rows `name,n,lambda,value`.
    Bounds {
        #[arg(long, value_enum)]
        family: Family,
        /// A bidder count, an inclusive range `a..b`, or a list `a,b,c`.
        #[arg(long)]
        n: String,
        /// A value, a list `a,b,c`, or a grid `start:step:end` (lambda family only).
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Write the coordinate table of a figure as CSV.
    Figure {
        #[arg(value_parser = parse_with::<FigureId>)]
        id: FigureId,
        /// Output file; fig3 writes one file per n with `_n<n>` before the extension.
        #[arg(long)]
        out: PathBuf,
    },
    /// Recommend a posted price.
    Price {
        #[arg(long, value_parser = parse_with::<DistSpec>)]
        dist: DistSpec,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        mode: PriceMode,
        /// Mean of the second-highest value, used instead of the distribution
        /// by `second-order-stat`.
        #[arg(long)]
        nu: Option<f64>,
    },
    /// Monte Carlo revenue of a mechanism, with the analytic value and z-score.
    Simulate {
        #[arg(long, value_parser = parse_with::<DistSpec>)]
        dist: DistSpec,
        #[arg(long)]
        n: u32,
        /// `posted:<p>` or `spa:<r>`.
        #[arg(long, value_parser = parse_with::<Mechanism>)]
        mechanism: Mechanism,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Mhr,
    Lambda,
}

#[derive(Clone, Copy, ValueEnum)]
enum PriceMode {
    Optimal,
    Reserve,
    #[value(alias = "second_order_stat")]
    SecondOrderStat,
}

fn parse_with<T>(s: &str) -> Result<T, String>
where
    T: std::str::FromStr<Err = Error>,
{
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_n_list(s: &str) -> Result<Vec<u32>, Error> {
    let bad = || Error::InvalidArgument(format!("invalid --n {s:?}"));
    let one = |v: &str| v.trim().parse::<u32>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (one(a)?, one(b)?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(one).collect()
}

fn parse_lambda_list(s: &str) -> Result<Vec<f64>, Error> {
    let bad = || Error::InvalidArgument(format!("invalid --lambda {s:?}"));
    let one = |v: &str| v.trim().parse::<f64>().map_err(|_| bad());
    let parts: Vec<&str> = s.split(':').collect();
    if let [start, step, end] = parts.as_slice() {
        let (start, step, end) = (one(start)?, one(step)?, one(end)?);
        if !(step > 0.0) || end < start {
            return Err(bad());
        }
        let count = ((end - start) / step + 1e-9).floor() as usize + 1;
        return Ok((0..count).map(|i| start + step * i as f64).collect());
    }
    s.split(',').map(one).collect()
}

fn fmt_opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn bound_row(out: &mut String, b: &BoundResult) {
    let lambda = b.lambda.map(|l| format!("{l:.6}")).unwrap_or_default();
    writeln!(out, "{},{},{},{:.6}", b.name, fmt_opt(b.n), lambda, b.value).unwrap();
}

fn cmd_bounds(family: Family, n: &str, lambda: Option<&str>) -> Result<String, Error> {
    let ns = parse_n_list(n)?;
    let mut out = String::from("name,n,lambda,value\n");
    match family {
        Family::Mhr => {
            if lambda.is_some() {
                return Err(Error::InvalidArgument(
                    "--lambda applies to the lambda family only".into(),
                ));
            }
            for n in ns {
                mhr_family(n)?.iter().for_each(|b| bound_row(&mut out, b));
            }
        }
        Family::Lambda => {
            let lambdas = parse_lambda_list(lambda.unwrap_or("1.0"))?;
            for n in ns {
                for &l in &lambdas {
                    lambda_family(n, l)?
                        .iter()
                        .for_each(|b| bound_row(&mut out, b));
                }
            }
        }
    }
    Ok(out)
}

fn cmd_figure(id: FigureId, out: &std::path::Path) -> Result<String, CliError> {
    let mut written = String::new();
    for table in figure_tables(id)? {
        let path = table.output_path(out);
        std::fs::write(&path, table.to_csv())
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
        writeln!(written, "{}", path.display()).unwrap();
    }
    Ok(written)
}

fn cmd_price(dist: &DistSpec, n: u32, mode: PriceMode, nu: Option<f64>) -> Result<String, Error> {
    let mut out = String::from("field,value\n");
    let mut field = |k: &str, v: f64| writeln!(out, "{k},{v:.6}").unwrap();
    match mode {
        PriceMode::Optimal => {
            let rep = optimal_price(dist, n)?;
            field("price", rep.price);
            field("revenue", rep.revenue);
            field("degenerate", rep.degenerate as u8 as f64);
        }
        PriceMode::Reserve => {
            let rp = monopoly_reserve(dist)?;
            field("price", rp.reserve_price);
            field("revenue", pricing_revenue(dist, n, rp.reserve_price)?);
            field("reserve_quantile", rp.reserve_quantile);
            field("monopoly_revenue", rp.monopoly_revenue);
        }
        PriceMode::SecondOrderStat => {
            let rep = second_order_stat_price(dist, n, nu)?;
            field("price", rep.report.price);
            field("revenue", rep.report.revenue);
            field("c_n", rep.c_n);
            field("second_highest_mean", rep.second_highest_mean);
        }
    }
    Ok(out)
}

fn cmd_simulate(config: SimConfig, threads: Option<usize>) -> Result<String, Error> {
    let result = match threads {
        Some(0) => return Err(Error::InvalidArgument("--threads must be positive".into())),
        Some(t) => simulate_on_threads(&config, t)?,
        None => simulate(&config)?,
    };
    let analytic = match config.mechanism {
        Mechanism::PostedPrice(p) => pricing_revenue(&config.dist, config.n, p)?,
        Mechanism::SecondPriceReserve(r) => {
            second_price_reserve_revenue(&config.dist, config.n, r)?
        }
    };
    let diff = result.mean_revenue - analytic;
    let z = if result.std_error > 0.0 {
        diff / result.std_error
    } else if diff.abs() < 1e-12 {
        0.0
    } else {
        f64::INFINITY.copysign(diff)
    };
    let mut out = String::from("field,value\n");
    writeln!(out, "mean_revenue,{:.6}", result.mean_revenue).unwrap();
    writeln!(out, "std_error,{:.6}", result.std_error).unwrap();
    writeln!(out, "trials,{}", result.trials).unwrap();
    writeln!(out, "sold_fraction,{:.6}", result.sold_fraction).unwrap();
    writeln!(out, "analytic,{analytic:.6}").unwrap();
    writeln!(out, "z_score,{z:.3}").unwrap();
    Ok(out)
}

enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    Ok(match cli.command {
        Command::Bounds { family, n, lambda } => cmd_bounds(family, &n, lambda.as_deref())?,
        Command::Figure { id, out } => cmd_figure(id, &out)?,
        Command::Price { dist, n, mode, nu } => cmd_price(&dist, n, mode, nu)?,
        Command::Simulate {
            dist,
            n,
            mechanism,
            trials,
            seed,
            threads,
        } => cmd_simulate(
            SimConfig {
                dist,
                n,
                mechanism,
                trials,
                seed,
            },
            threads,
        )?,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidArgument(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
