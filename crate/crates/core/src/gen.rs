//! Seeded generators for the randomized harnesses. Everything here is
//! deterministic in the seed so harness outputs are reproducible.

use std::str::FromStr;

use bigdecimal::BigDecimal;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraSpec, FnTable};
use crate::cheese::SwissCheese;
use crate::cyclo::Cyclo;
use crate::galois::{FieldId, Value};
use crate::geo::{Disc, Point};
use crate::padic::PAdic;
use crate::quadext::QuadExt;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero p-adic with uniform valuation in the range and random digits.
pub fn random_padic(rng: &mut ChaCha8Rng, prime: u32, val_range: (i64, i64), prec: usize) -> PAdic {
    let val = rng.gen_range(val_range.0..=val_range.1);
    let mut digits: Vec<u32> = (0..prec).map(|_| rng.gen_range(0..prime)).collect();
    digits[0] = rng.gen_range(1..prime);
    PAdic::from_parts(prime, val, digits, prec).expect("generated digits are canonical")
}

/// Element of Q_5(sqrt 2) with each component either zero (rarely) or of
/// valuation in the given range.
pub fn random_quadext(rng: &mut ChaCha8Rng, val_range: (i64, i64), prec: usize) -> QuadExt {
    let a = if rng.gen_ratio(1, 20) {
        PAdic::zero(5, prec)
    } else {
        random_padic(rng, 5, val_range, prec)
    };
    let b = if rng.gen_ratio(1, 20) {
        PAdic::zero(5, prec)
    } else {
        random_padic(rng, 5, val_range, prec)
    };
    QuadExt::new(a, b)
}

/// Integral element (omega >= 0).
pub fn random_integral_quadext(rng: &mut ChaCha8Rng, prec: usize) -> QuadExt {
    random_quadext(rng, (0, 4), prec)
}

/// Random value of the field, suitable as an unconstrained member value.
pub fn random_value(rng: &mut ChaCha8Rng, field: FieldId, prec: usize) -> Value {
    match field {
        FieldId::Q5Sqrt2 => Value::Quad(random_quadext(rng, (-3, 3), prec)),
        FieldId::F25 => Value::F25(crate::f25::F25::new(
            rng.gen_range(0..5),
            rng.gen_range(0..5),
        )),
        FieldId::Zeta10 | FieldId::Zeta14 => {
            let cf = field.cyclo().unwrap();
            let coeffs = (0..cf.degree())
                .map(|_| {
                    num_rational::BigRational::new(
                        rng.gen_range(-9i64..=9).into(),
                        rng.gen_range(1i64..=4).into(),
                    )
                })
                .collect();
            Value::Cyclo(Cyclo::new(cf, coeffs).unwrap())
        }
    }
}

/// Random member of C(X, tau, g): pick a value on each orbit leader
/// constrained to be fixed by `g^(orbit length)` (enforced by averaging
/// over that subgroup), then propagate along the orbit by g.
pub fn random_member(rng: &mut ChaCha8Rng, spec: &AlgebraSpec, prec: usize) -> FnTable {
    let field = spec.field();
    let mut values = vec![Value::zero(field, prec); spec.space.len()];
    for orbit in spec.tau.orbits() {
        let len = orbit.len();
        let g_len = spec.g.pow(len);
        // Trace of a random value under <g^(len)> is g^(len)-fixed.
        let reps = spec.g.ord() / num_integer::gcd(spec.g.ord(), len.max(1));
        let raw = random_value(rng, field, prec);
        let mut leader = raw.clone();
        let mut cur = raw;
        for _ in 1..reps.max(1) {
            cur = g_len.apply(&cur);
            leader = leader.add(&cur);
        }
        let mut v = leader;
        for (k, &point) in orbit.iter().enumerate() {
            if k > 0 {
                v = spec.g.apply(&v);
            }
            values[point] = v.clone();
        }
    }
    FnTable::new(values)
}

/// Random integral member over Q_5(sqrt 2) (all omegas >= 0).
pub fn random_integral_member(rng: &mut ChaCha8Rng, spec: &AlgebraSpec, prec: usize) -> FnTable {
    debug_assert_eq!(spec.field(), FieldId::Q5Sqrt2);
    let mut values = vec![Value::zero(FieldId::Q5Sqrt2, prec); spec.space.len()];
    for orbit in spec.tau.orbits() {
        let len = orbit.len();
        let mut v = if len % spec.g.ord() == 0 {
            Value::Quad(random_integral_quadext(rng, prec))
        } else {
            // Leader must be fixed by g^(len): base-field value.
            Value::Quad(QuadExt::new(
                random_padic(rng, 5, (0, 4), prec),
                PAdic::zero(5, prec),
            ))
        };
        for (k, &point) in orbit.iter().enumerate() {
            if k > 0 {
                v = spec.g.apply(&v);
            }
            values[point] = v.clone();
        }
    }
    FnTable::new(values)
}

/// Random cheese with unit outer disc, the given hole count, and
/// delta > 0; hole centers may stick out past the boundary.
pub fn random_cheese(rng: &mut ChaCha8Rng, holes: usize) -> SwissCheese {
    let outer = Disc::closed(Point::origin(), BigDecimal::from(1)).unwrap();
    let delta_target = rng.gen_range(0.05..0.5);
    let raw: Vec<f64> = (0..holes).map(|_| rng.gen_range(0.05..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let scale = (1.0 - delta_target) / total;
    let hole_discs = raw
        .iter()
        .map(|r| {
            let radius = BigDecimal::from_str(&format!("{:.12}", (r * scale).max(1e-6))).unwrap();
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            let dist = rng.gen_range(0.0..1.15f64);
            let cx = BigDecimal::from_str(&format!("{:.12}", dist * angle.cos())).unwrap();
            let cy = BigDecimal::from_str(&format!("{:.12}", dist * angle.sin())).unwrap();
            Disc::open(Point::new(cx, cy), radius).unwrap()
        })
        .collect();
    SwissCheese::new(outer, hole_discs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_member, Endo, StoneSpace};
    use crate::galois::GaloisAut;
    use crate::padic::Val;

    #[test]
    fn random_members_pass_membership() {
        let mut rng = rng(7);
        for field in [FieldId::Q5Sqrt2, FieldId::F25, FieldId::Zeta10, FieldId::Zeta14] {
            let spec = AlgebraSpec::new(
                StoneSpace::of_size(4),
                Endo::new(vec![1, 0, 3, 2]).unwrap(),
                GaloisAut::generator(field),
            )
            .unwrap();
            for _ in 0..25 {
                let f = random_member(&mut rng, &spec, 12);
                assert!(is_member(&f, &spec).unwrap().ok, "field {field}");
            }
        }
    }

    #[test]
    fn integral_members_are_integral() {
        let mut rng = rng(11);
        let spec = AlgebraSpec::new(
            StoneSpace::of_size(2),
            Endo::cycle(2),
            GaloisAut::generator(FieldId::Q5Sqrt2),
        )
        .unwrap();
        for _ in 0..50 {
            let f = random_integral_member(&mut rng, &spec, 12);
            assert!(is_member(&f, &spec).unwrap().ok);
            assert!(f.values().iter().all(|v| v.omega() >= Val::Finite(0)));
        }
    }

    #[test]
    fn random_cheeses_have_positive_delta() {
        let mut rng = rng(3);
        for _ in 0..20 {
            let c = random_cheese(&mut rng, 12);
            assert!(c.delta() > BigDecimal::from(0));
            assert_eq!(c.holes.len(), 12);
        }
    }

    #[test]
    fn generation_is_deterministic_in_the_seed() {
        let a = random_cheese(&mut rng(42), 8);
        let b = random_cheese(&mut rng(42), 8);
        assert_eq!(a, b);
        let x = random_quadext(&mut rng(42), (-5, 5), 16);
        let y = random_quadext(&mut rng(42), (-5, 5), 16);
        assert_eq!(x, y);
    }
}
