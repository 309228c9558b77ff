//! `nonarch alg` subcommands.

use std::path::PathBuf;

use clap::Subcommand;
use nonarch_core::algebra::{
    enumerate_members, gelfand_demo, is_member, lattice, member_count_formula, residue_algebra,
    separates, separating_function, table_from_json, table_to_json,
};
use nonarch_core::galois::{FieldId, GaloisAut, Value};
use nonarch_core::gen;
use nonarch_core::quadext::QuadExt;
use nonarch_core::reps::stable_reps;
use nonarch_core::{AlgebraSpec, Endo, Error, StoneSpace};
use serde_json::json;

use crate::{emit, RunConfig};

#[derive(Subcommand)]
pub enum AlgCmd {
    /// Membership check of a function table against a spec.
    Check {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long = "fn")]
        table: PathBuf,
    },
    /// Build a member separating two points.
    Separate {
        #[arg(long)]
        spec: PathBuf,
        #[arg(short = 'x')]
        x: String,
        #[arg(short = 'y')]
        y: String,
    },
    /// Enumerate all members (F25 specs with at most 4 points).
    Enumerate {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        count_only: bool,
    },
    /// Lattice of basic extensions, from a spec file or a canonical field.
    Lattice {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Residue algebra data and quotient-map checks for a Q5_sqrt2 spec.
    Residue {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Desk-scale Gelfand transform for the cyclic field case.
    Gelfand {
        #[arg(long, default_value = "Q5_sqrt2")]
        field: String,
        /// Optional element a + sqrt(2) b of Q_5(sqrt 2) to transform.
        #[arg(short = 'a', long)]
        a: Option<i64>,
        #[arg(short = 'b', long)]
        b: Option<i64>,
    },
}

fn load_spec(path: &PathBuf) -> anyhow::Result<AlgebraSpec> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn point_index(spec: &AlgebraSpec, label: &str) -> anyhow::Result<usize> {
    spec.space
        .index_of(label)
        .ok_or_else(|| Error::invalid(format!("unknown point {label:?}")).into())
}

/// The canonical spec for a field: one full tau-orbit of size ord(g).
fn canonical_spec(field: FieldId) -> AlgebraSpec {
    let d = field.galois_order();
    AlgebraSpec::new(
        StoneSpace::of_size(d),
        Endo::cycle(d),
        GaloisAut::generator(field),
    )
    .unwrap()
}

pub fn run(cmd: &AlgCmd, config: &RunConfig) -> anyhow::Result<()> {
    match cmd {
        AlgCmd::Check { spec, table } => {
            let spec = load_spec(spec)?;
            let text = std::fs::read_to_string(table)?;
            let js: serde_json::Value = serde_json::from_str(&text)?;
            let f = table_from_json(&js, &spec)?;
            let check = is_member(&f, &spec)?;
            emit(&json!({
                "member": check.ok,
                "witness": check.witness.map(|x| spec.space.labels()[x].clone()),
            }));
        }
        AlgCmd::Separate { spec, x, y } => {
            let spec = load_spec(spec)?;
            let xi = point_index(&spec, x)?;
            let yi = point_index(&spec, y)?;
            let f = separating_function(&spec, xi, yi)?;
            emit(&json!({
                "separates": true,
                "function": table_to_json(&f, &spec),
                "value_at_x": f.get(xi).to_string(),
                "value_at_y": f.get(yi).to_string(),
            }));
        }
        AlgCmd::Enumerate { spec, count_only } => {
            let spec = load_spec(spec)?;
            let members = enumerate_members(&spec)?;
            let formula = member_count_formula(&spec)?;
            let mut out = json!({
                "count": members.len(),
                "count_formula": formula,
                "separates": separates(&spec),
            });
            if !count_only {
                out["members"] = serde_json::Value::Array(
                    members.iter().map(|f| table_to_json(f, &spec)).collect(),
                );
            }
            emit(&out);
        }
        AlgCmd::Lattice { spec, field } => {
            let spec = match (spec, field) {
                (Some(path), _) => load_spec(path)?,
                (None, Some(name)) => canonical_spec(FieldId::parse(name)?),
                (None, None) => {
                    return Err(Error::invalid("provide --spec or --field").into());
                }
            };
            let lat = lattice(&spec)?;
            emit(&json!({
                "nodes": lat.nodes.iter().map(|n| json!({
                    "n": n.n,
                    "ord_tau": n.spec.tau.ord(),
                    "ord_g": n.spec.g.ord(),
                    "g": n.spec.g.name(),
                })).collect::<Vec<_>>(),
                "edges": lat.edges,
            }));
        }
        AlgCmd::Residue {
            spec,
            samples,
            seed,
        } => {
            let spec = load_spec(spec)?;
            if spec.field() != FieldId::Q5Sqrt2 {
                return Err(Error::Unsupported(
                    "residue algebra requires a Q5_sqrt2 spec".into(),
                )
                .into());
            }
            let reps = stable_reps(&spec.g, config.precision)?;
            let ra = residue_algebra(&spec, &reps)?;
            let mut rng = gen::rng(*seed);
            let mut hom_ok = true;
            let mut kernel_ok = true;
            for _ in 0..*samples {
                let f = gen::random_integral_member(&mut rng, &spec, config.precision);
                let h = gen::random_integral_member(&mut rng, &spec, config.precision);
                let sum_ok = ra
                    .phi(&f.add(&h))?
                    .eq_approx(&ra.phi(&f)?.add(&ra.phi(&h)?));
                let prod_ok = ra
                    .phi(&f.mul(&h))?
                    .eq_approx(&ra.phi(&f)?.mul(&ra.phi(&h)?));
                hom_ok &= sum_ok && prod_ok;
                let phi_zero = ra.phi(&f)?.values().iter().all(Value::is_zero);
                kernel_ok &= phi_zero == nonarch_core::algebra::in_j(&f, &spec)?;
            }
            emit(&json!({
                "reduced_field": "F25",
                "reduced_g": ra.reduced_spec.g.name(),
                "homomorphism_checks": hom_ok,
                "kernel_matches_j": kernel_ok,
                "samples": samples,
            }));
        }
        AlgCmd::Gelfand { field, a, b } => {
            let field = FieldId::parse(field)?;
            let demo = gelfand_demo(field)?;
            let mut out = json!({
                "field": field.name(),
                "characters": demo.characters.iter().map(|c| c.label.clone()).collect::<Vec<_>>(),
            });
            if field == FieldId::Q5Sqrt2 {
                let element = Value::Quad(QuadExt::from_i64(
                    a.unwrap_or(1),
                    b.unwrap_or(1),
                    config.precision,
                ));
                out["element"] = json!(element.to_string());
                out["transform"] = json!(demo
                    .transform(&element)
                    .iter()
                    .map(Value::to_string)
                    .collect::<Vec<_>>());
                out["isometric"] = json!(demo.is_isometric_at(&element));
                out["equivariant"] = json!(demo.is_equivariant_at(&element));
            }
            emit(&out);
        }
    }
    Ok(())
}
