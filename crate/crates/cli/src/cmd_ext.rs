//! `nonarch ext` subcommands.

use clap::Subcommand;
use nonarch_core::galois::{FieldId, GaloisAut, Value};
use nonarch_core::quadext::QuadExt;
use nonarch_core::reps::{residue_field_descriptor, residue_reduce, stable_reps};
use serde_json::json;

use crate::{emit, parse_rational, RunConfig};

#[derive(Subcommand)]
pub enum ExtCmd {
    /// Valuation of a + sqrt(2) b in Q_5(sqrt 2), by both routes.
    Valuation {
        #[arg(short = 'a', long, default_value = "0")]
        a: String,
        #[arg(short = 'b', long, default_value = "0")]
        b: String,
    },
    /// Galois group data: generator order and the orbit of the primitive
    /// element (or of a + sqrt(2) b over Q5_sqrt2).
    Galois {
        #[arg(long, default_value = "Q5_sqrt2")]
        field: String,
    },
    /// Galois-stable residue class representatives.
    Reps {
        #[arg(long, default_value = "Q5_sqrt2")]
        field: String,
    },
}

pub fn run(cmd: &ExtCmd, config: &RunConfig) -> anyhow::Result<()> {
    match cmd {
        ExtCmd::Valuation { a, b } => {
            let x = QuadExt::from_rationals(
                &parse_rational(a)?,
                &parse_rational(b)?,
                config.precision,
            );
            emit(&json!({
                "omega": x.omega().to_string(),
                "via_norm": x.extend_valuation().to_string(),
                "agree": x.omega() == x.extend_valuation(),
            }));
        }
        ExtCmd::Galois { field } => {
            let field = FieldId::parse(field)?;
            let g = GaloisAut::generator(field);
            let primitive = match field {
                FieldId::Q5Sqrt2 => Value::Quad(QuadExt::sqrt2(config.precision)),
                FieldId::F25 => Value::F25(nonarch_core::F25::SQRT2),
                _ => Value::Cyclo(nonarch_core::Cyclo::zeta(field.cyclo().unwrap())),
            };
            let mut orbit = Vec::new();
            let mut cur = primitive.clone();
            for _ in 0..g.ord() {
                orbit.push(cur.to_string());
                cur = g.apply(&cur);
            }
            emit(&json!({
                "field": field.name(),
                "generator": g.name(),
                "ord": g.ord(),
                "orbit_of_primitive": orbit,
            }));
        }
        ExtCmd::Reps { field } => {
            let field = FieldId::parse(field)?;
            if field != FieldId::Q5Sqrt2 {
                return Err(nonarch_core::Error::Unsupported(
                    "stable representatives are built over Q5_sqrt2".into(),
                )
                .into());
            }
            let g = GaloisAut::generator(field);
            let reps = stable_reps(&g, config.precision)?;
            let listed: Vec<serde_json::Value> = reps
                .iter()
                .map(|r| {
                    json!({
                        "class": residue_reduce(r).unwrap().to_string(),
                        "rep": serde_json::to_value(r).unwrap(),
                    })
                })
                .collect();
            emit(&json!({
                "field": field.name(),
                "residue_field": residue_field_descriptor(),
                "count": reps.len(),
                "g_closed": reps.is_stable(),
                "representatives": listed,
            }));
        }
    }
    Ok(())
}
