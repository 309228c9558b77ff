//! Point-separation constructions for basic function algebras.
//!
//! `C(X, tau, g)` separates X exactly when `ord(tau) | ord(g)`. The
//! witness constructions follow the case split in the equivalence proof:
//!
//! * Case 1 (`y` outside the tau-orbit of `x`): norm-style product of an
//!   indicator function over the sigma orbit, giving `f(x) = 1, f(y) = 0`.
//! * Case 2.1 (characteristic zero, `y = tau^(n)(x)`): a trace sum over
//!   sigma built from a probe element `a` with `ord(g, a) = ord(tau, x)`,
//!   giving `f(x) = m' a` and `f(y) = m' g^(n)(a)`.
//! * Case 2.2 (characteristic p): write `m' = p^t s` with `p` not dividing
//!   `s`; a sigma-power product followed by a partial trace gives
//!   `f(x) = s a^(p^t)` and `f(y) = s g^(n)(a)^(p^t)`. With `t = 0` this
//!   degenerates to the same trace as Case 2.1.

use super::{is_member, sigma_pow, AlgebraSpec, FnTable};
use crate::cyclo::{sqrt5, Cyclo};
use crate::error::{Error, Result};
use crate::f25::F25;
use crate::galois::{FieldId, GaloisAut, Value};

/// True iff the algebra separates the points of X.
pub fn separates(spec: &AlgebraSpec) -> bool {
    spec.is_valid()
}

/// Probe elements searched for an element of a given order under `g`.
/// Powers and traces of the primitive element; the shipped fields are
/// covered, and the search fails loudly otherwise.
fn order_probes(g: &GaloisAut) -> Vec<Value> {
    let field = g.field;
    let mut probes = vec![Value::one(field, 8)];
    match field {
        FieldId::Q5Sqrt2 => {
            probes.push(Value::Quad(crate::quadext::QuadExt::sqrt2(8)));
        }
        FieldId::F25 => {
            probes.extend(F25::all().map(Value::F25));
        }
        FieldId::Zeta10 | FieldId::Zeta14 => {
            let cf = field.cyclo().unwrap();
            let zeta = Cyclo::zeta(cf);
            if field == FieldId::Zeta10 {
                // The canonical order-2 element: sqrt 5 = zeta + zeta^9 - zeta^3 - zeta^7.
                probes.push(Value::Cyclo(sqrt5()));
            }
            // Traces of zeta over each subgroup of the full Galois group.
            let full = field.galois_order();
            for n in 1..=full {
                if full % n != 0 {
                    continue;
                }
                let gn = GaloisAut::generator(field).pow(n);
                let mut tr = Cyclo::zero(cf);
                let mut x = Value::Cyclo(zeta.clone());
                for _ in 0..(full / n) {
                    if let Value::Cyclo(c) = &x {
                        tr = tr.add(c);
                    }
                    x = gn.apply(&x);
                }
                probes.push(Value::Cyclo(tr));
            }
            for j in 1..cf.n() {
                probes.push(Value::Cyclo(Cyclo::zeta_pow(cf, j)));
            }
        }
    }
    probes
}

fn probe_with_order(g: &GaloisAut, k: usize) -> Result<Value> {
    order_probes(g)
        .into_iter()
        .find(|v| g.ord_at(v) == k)
        .ok_or(Error::NoProbe(k))
}

/// Build a member separating `x` from `y`; errors when `x = y` or when the
/// spec does not separate at all.
pub fn separating_function(spec: &AlgebraSpec, x: usize, y: usize) -> Result<FnTable> {
    if x == y {
        return Err(Error::SamePoint);
    }
    spec.require_valid()?;
    let orbit = spec.tau.orbit(x);
    let f = if let Some(n) = orbit.iter().position(|&z| z == y) {
        // y = tau^(n)(x) within the orbit of x, 1 <= n < ord(tau, x)
        in_orbit_construction(spec, x, n)?
    } else {
        out_of_orbit_construction(spec, &orbit)
    };
    debug_assert!(is_member(&f, spec)?.ok);
    debug_assert!(!f.get(x).eq_approx(f.get(y)));
    Ok(f)
}

/// Case 1: indicator of the orbit, multiplied along the sigma orbit.
fn out_of_orbit_construction(spec: &AlgebraSpec, orbit: &[usize]) -> FnTable {
    let field = spec.field();
    let h = FnTable::from_fn(spec, |z| {
        if orbit.contains(&z) {
            Value::one(field, 8)
        } else {
            Value::zero(field, 8)
        }
    });
    let mut acc = h.clone();
    let mut cur = h;
    for _ in 1..spec.g.ord() {
        cur = sigma_pow(&cur, spec, 1);
        acc = acc.mul(&cur);
    }
    acc
}

/// Cases 2.1 and 2.2: trace-style constructions from a probe of order
/// `k = ord(tau, x)`.
fn in_orbit_construction(spec: &AlgebraSpec, x: usize, _n: usize) -> Result<FnTable> {
    let field = spec.field();
    let k = spec.tau.ord_at(x);
    let m = spec.g.ord();
    debug_assert_eq!(m % k, 0);
    let m_prime = m / k;
    let a = probe_with_order(&spec.g, k)?;
    let h = FnTable::from_fn(spec, |z| {
        if z == x {
            a.clone()
        } else {
            Value::zero(field, 8)
        }
    });
    let p = field.characteristic();
    if p == 0 {
        // Full trace: f = h + sigma(h) + ... + sigma^(m-1)(h).
        let mut acc = h.clone();
        let mut cur = h;
        for _ in 1..m {
            cur = sigma_pow(&cur, spec, 1);
            acc = acc.add(&cur);
        }
        Ok(acc)
    } else {
        // m' = p^t s with p not dividing s.
        let mut s = m_prime;
        let mut pt = 1usize;
        while s % p as usize == 0 {
            s /= p as usize;
            pt *= p as usize;
        }
        // f' = h * sigma^(sk)(h) * ... * sigma^((p^t - 1) sk)(h)
        let mut f_prime = h.clone();
        let mut cur = h;
        for _ in 1..pt {
            cur = sigma_pow(&cur, spec, s * k);
            f_prime = f_prime.mul(&cur);
        }
        // f = f' + sigma(f') + ... + sigma^(sk - 1)(f')
        let mut acc = f_prime.clone();
        let mut cur = f_prime;
        for _ in 1..(s * k) {
            cur = sigma_pow(&cur, spec, 1);
            acc = acc.add(&cur);
        }
        Ok(acc)
    }
}
