//! Brute-force member enumeration over the finite value field F_25.
//!
//! This is the finite oracle used by the acceptance tests: every table is
//! generated and filtered through the membership predicate. The closed
//! count formula (product over tau-orbits of the number of values fixed by
//! `g^(orbit length)`) is checked against it.

use super::{is_member, AlgebraSpec, FnTable};
use crate::error::{Error, Result};
use crate::f25::F25;
use crate::galois::{FieldId, Value};

const MAX_POINTS: usize = 4;

/// All members of C(X, tau, g) for F_25-valued specs with at most 4 points.
pub fn enumerate_members(spec: &AlgebraSpec) -> Result<Vec<FnTable>> {
    if spec.field() != FieldId::F25 {
        return Err(Error::Unsupported(
            "enumeration requires the finite value field F25".into(),
        ));
    }
    let n = spec.space.len();
    if n > MAX_POINTS {
        return Err(Error::Unsupported(format!(
            "enumeration is limited to {MAX_POINTS} points"
        )));
    }
    let elements: Vec<F25> = F25::all().collect();
    let mut out = Vec::new();
    let mut counters = vec![0usize; n];
    loop {
        let table = FnTable::new(
            counters
                .iter()
                .map(|&i| Value::F25(elements[i]))
                .collect(),
        );
        if is_member(&table, spec)?.ok {
            out.push(table);
        }
        // Odometer increment.
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(out);
            }
            counters[pos] += 1;
            if counters[pos] < elements.len() {
                break;
            }
            counters[pos] = 0;
            pos += 1;
        }
    }
}

/// Closed-form member count: product over tau-orbits O of
/// `#{v : g^(|O|)(v) = v}`.
pub fn member_count_formula(spec: &AlgebraSpec) -> Result<usize> {
    if spec.field() != FieldId::F25 {
        return Err(Error::Unsupported(
            "count formula requires the finite value field F25".into(),
        ));
    }
    let mut count = 1usize;
    for orbit in spec.tau.orbits() {
        let g_pow = spec.g.pow(orbit.len());
        let fixed = F25::all()
            .filter(|v| {
                let v = Value::F25(*v);
                g_pow.apply(&v).eq_approx(&v)
            })
            .count();
        count *= fixed;
    }
    Ok(count)
}
