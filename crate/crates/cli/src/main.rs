//! Command-line frontend: p-adic expansions, extension-field utilities,
//! function-algebra checks, and the Swiss-cheese classicalisation engine.
//!
//! Exit codes: 0 success, 2 malformed input or schema violation, 3
//! mathematical precondition failure (delta <= 0, invalid (X, tau, g), ...).

mod cmd_alg;
mod cmd_cheese;
mod cmd_ext;
mod cmd_padic;

use clap::{Parser, Subcommand};
use nonarch_core::Error;

#[derive(Parser)]
#[command(name = "nonarch", version, about = "Exact non-Archimedean computation")]
struct Cli {
    /// Significant p-adic digits (env NONARCH_PRECISION overrides the default).
    #[arg(long, global = true)]
    precision: Option<usize>,
    /// Significant decimal digits for plane geometry.
    #[arg(long, global = true, default_value_t = 50)]
    geo_precision: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// p-adic arithmetic and series utilities.
    #[command(subcommand)]
    Padic(cmd_padic::PadicCmd),
    /// Field extensions: valuations, Galois data, stable representatives.
    #[command(subcommand)]
    Ext(cmd_ext::ExtCmd),
    /// Basic function algebras on finite spaces.
    #[command(subcommand)]
    Alg(cmd_alg::AlgCmd),
    /// Swiss cheese classicalisation.
    #[command(subcommand)]
    Cheese(cmd_cheese::CheeseCmd),
}

pub(crate) struct RunConfig {
    pub precision: usize,
    pub geo_precision: u64,
}

impl RunConfig {
    fn resolve(cli: &Cli) -> Result<Self, String> {
        let precision = match cli.precision {
            Some(p) => p,
            None => match std::env::var("NONARCH_PRECISION") {
                Ok(v) => v
                    .parse()
                    .map_err(|_| format!("NONARCH_PRECISION must be an integer, got {v:?}"))?,
                Err(_) => nonarch_core::DEFAULT_PRECISION,
            },
        };
        if precision < 8 {
            return Err("precision must be at least 8".into());
        }
        if cli.geo_precision < 8 {
            return Err("geo-precision must be at least 8".into());
        }
        Ok(RunConfig {
            precision,
            geo_precision: cli.geo_precision,
        })
    }
}

fn main() {
    let cli = Cli::parse();
    let config = match RunConfig::resolve(&cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };
    let result = match &cli.command {
        Command::Padic(cmd) => cmd_padic::run(cmd, &config),
        Command::Ext(cmd) => cmd_ext::run(cmd, &config),
        Command::Alg(cmd) => cmd_alg::run(cmd, &config),
        Command::Cheese(cmd) => cmd_cheese::run(cmd, &config),
    };
    match result {
        Ok(()) => {}
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code(&err));
        }
    }
}

fn exit_code(err: &anyhow::Error) -> i32 {
    if let Some(core) = err.downcast_ref::<Error>() {
        if core.is_math() {
            3
        } else {
            2
        }
    } else if err.downcast_ref::<serde_json::Error>().is_some()
        || err.downcast_ref::<std::num::ParseIntError>().is_some()
    {
        2
    } else if err.downcast_ref::<std::io::Error>().is_some() {
        1
    } else {
        2
    }
}

/// Parse "n/d" or "n" into an exact rational.
pub(crate) fn parse_rational(s: &str) -> anyhow::Result<num_rational::BigRational> {
    let parse_int = |t: &str| -> anyhow::Result<num_bigint::BigInt> {
        t.trim()
            .parse::<num_bigint::BigInt>()
            .map_err(|_| Error::invalid(format!("malformed rational {s:?}")).into())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == num_bigint::BigInt::from(0) {
                return Err(Error::invalid("rational with zero denominator").into());
            }
            Ok(num_rational::BigRational::new(parse_int(n)?, den))
        }
        None => Ok(num_rational::BigRational::from_integer(parse_int(s)?)),
    }
}

/// Print a JSON value followed by a newline; a closed pipe is not an error.
pub(crate) fn emit(value: &serde_json::Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(value).unwrap();
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        std::process::exit(0);
    }
}
