//! `nonarch cheese` subcommands.

use std::path::PathBuf;

use clap::Subcommand;
use nonarch_core::cheese::{classicalise, render_before_after, verify_certificate, Certificate};
use nonarch_core::gen::{random_cheese, rng};
use nonarch_core::geo::GeoCtx;
use nonarch_core::{Error, SwissCheese};
use rand::Rng;
use serde_json::json;

use crate::{emit, RunConfig};

#[derive(Subcommand)]
pub enum CheeseCmd {
    /// Rewrite a cheese into classical form, emitting a certificate.
    Classicalise {
        /// Input cheese JSON.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output JSON (cheese + certificate + step count).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Side-by-side SVG snapshot.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Re-verify the certificate; nonzero exit on violation.
        #[arg(long)]
        verify: bool,
    },
    /// Verify a previously produced result file against its input.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Result file produced by `classicalise --out`.
        #[arg(long)]
        result: PathBuf,
    },
    /// Run the seeded random classicalisation harness.
    Harness {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 5)]
        holes_min: usize,
        #[arg(long, default_value_t = 50)]
        holes_max: usize,
    },
}

fn load_cheese(path: &PathBuf) -> anyhow::Result<SwissCheese> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn run(cmd: &CheeseCmd, config: &RunConfig) -> anyhow::Result<()> {
    let ctx = GeoCtx::new(config.geo_precision)?;
    match cmd {
        CheeseCmd::Classicalise {
            input,
            out,
            svg,
            verify,
        } => {
            let cheese = load_cheese(input)?;
            let result = classicalise(&cheese, &ctx)?;
            if *verify
                && !verify_certificate(&result.certificate, &cheese, &result.cheese, &ctx)
            {
                return Err(Error::Precondition("certificate verification failed".into()).into());
            }
            let payload = json!({
                "cheese": serde_json::to_value(&result.cheese)?,
                "certificate": serde_json::to_value(&result.certificate)?,
                "steps": result.steps,
                "delta_in": cheese.delta().normalized().to_plain_string(),
                "delta_out": result.cheese.delta().normalized().to_plain_string(),
                "classical": result.cheese.is_classical(&ctx).0,
            });
            // All outputs are rendered before any file is written, so a
            // failure cannot leave partial files behind.
            let svg_text = svg
                .as_ref()
                .map(|_| render_before_after(&cheese, &result.cheese));
            if let Some(path) = out {
                std::fs::write(path, serde_json::to_string_pretty(&payload)?)?;
            }
            if let (Some(path), Some(text)) = (svg, svg_text) {
                std::fs::write(path, text)?;
            }
            emit(&json!({
                "steps": result.steps,
                "holes_in": cheese.holes.len(),
                "holes_out": result.cheese.holes.len(),
                "delta_in": payload["delta_in"],
                "delta_out": payload["delta_out"],
                "classical": true,
                "verified": verify,
            }));
        }
        CheeseCmd::Verify { input, result } => {
            let before = load_cheese(input)?;
            let text = std::fs::read_to_string(result)?;
            let payload: serde_json::Value = serde_json::from_str(&text)?;
            let after: SwissCheese = serde_json::from_value(
                payload
                    .get("cheese")
                    .ok_or_else(|| Error::invalid_at("/cheese", "missing"))?
                    .clone(),
            )?;
            let cert: Certificate = serde_json::from_value(
                payload
                    .get("certificate")
                    .ok_or_else(|| Error::invalid_at("/certificate", "missing"))?
                    .clone(),
            )?;
            let ok = verify_certificate(&cert, &before, &after, &ctx);
            emit(&json!({ "verified": ok }));
            if !ok {
                return Err(Error::Precondition("certificate verification failed".into()).into());
            }
        }
        CheeseCmd::Harness {
            count,
            seed,
            jobs,
            holes_min,
            holes_max,
        } => {
            // Generation is sequential in the seed; instances are verified
            // in parallel and reported in index order.
            let mut generator = rng(*seed);
            let cases: Vec<SwissCheese> = (0..*count)
                .map(|_| {
                    let holes = generator.gen_range(*holes_min..=*holes_max);
                    random_cheese(&mut generator, holes)
                })
                .collect();
            let jobs = (*jobs).max(1).min(cases.len().max(1));
            let results: Vec<serde_json::Value> = std::thread::scope(|scope| {
                let chunks: Vec<_> = cases.chunks(cases.len().div_ceil(jobs)).collect();
                let handles: Vec<_> = chunks
                    .into_iter()
                    .map(|chunk| {
                        let ctx = ctx.clone();
                        scope.spawn(move || {
                            chunk
                                .iter()
                                .map(|cheese| run_one(cheese, &ctx))
                                .collect::<Vec<_>>()
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("harness worker"))
                    .collect()
            });
            let all_ok = results
                .iter()
                .all(|r| r["classical"] == true && r["verified"] == true);
            emit(&json!({
                "count": count,
                "seed": seed,
                "all_classical_and_verified": all_ok,
                "cases": results,
            }));
            if !all_ok {
                return Err(Error::Precondition("harness case failed".into()).into());
            }
        }
    }
    Ok(())
}

fn run_one(cheese: &SwissCheese, ctx: &GeoCtx) -> serde_json::Value {
    match classicalise(cheese, ctx) {
        Ok(result) => {
            let verified = verify_certificate(&result.certificate, cheese, &result.cheese, ctx);
            json!({
                "holes": cheese.holes.len(),
                "steps": result.steps,
                "classical": result.cheese.is_classical(ctx).0,
                "verified": verified,
                "delta_in": cheese.delta().normalized().to_plain_string(),
                "delta_out": result.cheese.delta().normalized().to_plain_string(),
            })
        }
        Err(err) => json!({
            "holes": cheese.holes.len(),
            "classical": false,
            "verified": false,
            "error": err.to_string(),
        }),
    }
}
