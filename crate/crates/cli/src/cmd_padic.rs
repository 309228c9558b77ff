//! `nonarch padic` subcommands.

use clap::Subcommand;
use nonarch_core::series::{radius_of_convergence, SeriesSpec};
use nonarch_core::{expand, sum_series, Val};
use serde_json::json;

use crate::{emit, parse_rational, RunConfig};

#[derive(Subcommand)]
pub enum PadicCmd {
    /// Canonical digit expansion of a rational over {0,...,p-1}.
    Expand {
        /// Rational number, "n" or "n/d".
        #[arg(allow_hyphen_values = true)]
        value: String,
        #[arg(short = 'p', long, default_value_t = 5)]
        prime: u32,
        /// Number of significant digits (defaults to the global precision).
        #[arg(short = 'n', long)]
        digits: Option<usize>,
    },
    /// Sum the expansions of the given rationals and report convergence.
    /// Negative terms go after a `--` separator.
    Sum {
        values: Vec<String>,
        #[arg(short = 'p', long, default_value_t = 5)]
        prime: u32,
    },
    /// Radius of convergence estimate from a coefficient-valuation pattern.
    Radius {
        /// One of: factorial (a_n = 1/n!), unit (nu = 0), growth (nu = -n).
        #[arg(long)]
        pattern: String,
        #[arg(short = 'p', long, default_value_t = 5)]
        prime: u32,
        #[arg(short = 'N', long, default_value_t = 10_000)]
        bound: usize,
    },
}

pub fn run(cmd: &PadicCmd, config: &RunConfig) -> anyhow::Result<()> {
    match cmd {
        PadicCmd::Expand {
            value,
            prime,
            digits,
        } => {
            let q = parse_rational(value)?;
            let x = expand(&q, *prime, digits.unwrap_or(config.precision));
            emit(&serde_json::to_value(&x)?);
        }
        PadicCmd::Sum { values, prime } => {
            let terms = values
                .iter()
                .map(|v| Ok(expand(&parse_rational(v)?, *prime, config.precision)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            let (sum, verdict) = sum_series(&terms, *prime, config.precision);
            emit(&json!({
                "sum": serde_json::to_value(&sum)?,
                "verdict": serde_json::to_value(verdict)?,
            }));
        }
        PadicCmd::Radius {
            pattern,
            prime,
            bound,
        } => {
            let spec = match pattern.as_str() {
                "factorial" => SeriesSpec::factorial(*prime, *bound)?,
                "unit" => SeriesSpec::from_fn(*prime, *bound, |_| Val::Finite(0))?,
                "growth" => SeriesSpec::from_fn(*prime, *bound, |n| Val::Finite(-(n as i64)))?,
                other => {
                    return Err(nonarch_core::Error::invalid(format!(
                        "unknown pattern {other:?} (expected factorial, unit, or growth)"
                    ))
                    .into())
                }
            };
            let est = radius_of_convergence(&spec);
            emit(&json!({
                "pattern": pattern,
                "prime": prime,
                "bound": bound,
                "log_p_estimate": format!("{:.9}", est.log_p),
                "radius_estimate": format!("{:.9}", est.radius),
                "exact_log_p": est.exact_log_p,
                "exact_radius": est.exact_radius.map(|r| format!("{r:.9}")),
            }));
        }
    }
    Ok(())
}
