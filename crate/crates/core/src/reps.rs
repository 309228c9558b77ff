//! Residue-field reduction for Q_5(sqrt 2) and Galois-stable residue class
//! representatives.
//!
//! The representative set starts from `R_L = {a + sqrt(2) b : a, b in 0..5}`
//! and repairs each candidate until its forward Galois orbit returns to the
//! same element whenever it returns to the same residue class. Two repair
//! constructions are used, matching the case split on `p | m`: averaging
//! over the orbit when `p` does not divide the first-return order, and a
//! Frobenius-power fixed point otherwise. The second branch is unreachable
//! for conjugation on Q_5(sqrt 2) (every first-return order divides 2) but
//! is kept and exercised directly in tests.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::f25::F25;
use crate::galois::{FieldId, GaloisAut, Value};
use crate::padic::{PAdic, Val};
use crate::quadext::QuadExt;

/// Reduce an integral element to its residue class in F_25.
pub fn residue_reduce(x: &QuadExt) -> Result<F25> {
    if x.omega() < Val::Finite(0) {
        return Err(Error::NotIntegral);
    }
    Ok(F25::new(leading_digit(&x.a), leading_digit(&x.b)))
}

fn leading_digit(c: &PAdic) -> u8 {
    match c.vlog() {
        Val::Finite(0) => c.digits()[0] as u8,
        _ => 0, // strictly positive valuation or zero
    }
}

/// Shape of the residue field of Q_5(sqrt 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ResidueFieldDescriptor {
    pub size: usize,
    pub characteristic: u32,
    pub degree_over_base: usize,
    /// Ramification index; 1 because the extension is unramified.
    pub ramification_index: usize,
}

pub fn residue_field_descriptor() -> ResidueFieldDescriptor {
    ResidueFieldDescriptor {
        size: 25,
        characteristic: 5,
        degree_over_base: 2,
        ramification_index: 1,
    }
}

/// A full set of residue class representatives closed under a Galois
/// automorphism.
#[derive(Clone, Debug)]
pub struct ResidueRepSet {
    g: GaloisAut,
    by_class: BTreeMap<(u8, u8), QuadExt>,
}

impl ResidueRepSet {
    pub fn galois(&self) -> &GaloisAut {
        &self.g
    }

    pub fn len(&self) -> usize {
        self.by_class.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_class.is_empty()
    }

    /// Representatives in class order `(b, a)` lexicographic.
    pub fn iter(&self) -> impl Iterator<Item = &QuadExt> {
        self.by_class.values()
    }

    /// Representative of the class of `x` (requires `omega(x) >= 0`).
    pub fn rep_for(&self, x: &QuadExt) -> Result<&QuadExt> {
        let class = residue_reduce(x)?;
        Ok(self.rep_of_class(class))
    }

    pub fn rep_of_class(&self, class: F25) -> &QuadExt {
        &self.by_class[&(class.b, class.a)]
    }

    /// Verify that `g` maps the set into itself.
    pub fn is_stable(&self) -> bool {
        self.iter().all(|r| {
            let image = match self.g.apply(&Value::Quad(r.clone())) {
                Value::Quad(q) => q,
                _ => unreachable!(),
            };
            residue_reduce(&image)
                .map(|c| self.rep_of_class(c).eq_approx(&image))
                .unwrap_or(false)
        })
    }
}

fn as_quad(v: Value) -> QuadExt {
    match v {
        Value::Quad(q) => q,
        _ => unreachable!("automorphism stays within the field"),
    }
}

fn apply(g: &GaloisAut, x: &QuadExt) -> QuadExt {
    as_quad(g.apply(&Value::Quad(x.clone())))
}

/// Same residue class test: `omega(x - y) > 0`.
fn same_class(x: &QuadExt, y: &QuadExt) -> bool {
    x.sub(y).omega() > Val::Finite(0)
}

/// First `n >= 1` at which the forward orbit of `x` under `g` re-enters the
/// residue class of `x`.
pub fn first_return(g: &GaloisAut, x: &QuadExt) -> usize {
    let mut cur = apply(g, x);
    for n in 1..=g.ord() {
        if same_class(&cur, x) {
            return n;
        }
        cur = apply(g, &cur);
    }
    unreachable!("g^(ord g) fixes x exactly")
}

/// Orbit average `(1/m)(x + g(x) + ... + g^(m-1)(x))` for `m = ord(g, x)`
/// with `p` not dividing `m`. Returns a fixed point of `g` in the class
/// of `x`; both properties are re-checked rather than trusted.
pub fn orbit_average(g: &GaloisAut, x: &QuadExt) -> Result<QuadExt> {
    let m = g.ord_at(&Value::Quad(x.clone()));
    if m % 5 == 0 {
        return Err(Error::Precondition(
            "averaging requires p to not divide the orbit length".into(),
        ));
    }
    let mut sum = x.clone();
    let mut cur = x.clone();
    for _ in 1..m {
        cur = apply(g, &cur);
        sum = sum.add(&cur);
    }
    let m_inv = PAdic::from_i64(m as i64, 5, x.precision().max(1)).inv()?;
    let avg = sum.scale(&m_inv);
    if !apply(g, &avg).eq_approx(&avg) {
        return Err(Error::Precondition("orbit average is not g-fixed".into()));
    }
    if !same_class(&avg, x) {
        return Err(Error::Precondition("orbit average left the class".into()));
    }
    Ok(avg)
}

/// The fixed-point construction for the `p | m` case:
/// `a_1 = (a_0 g(a_0) ... g^(p-1)(a_0))^(p^(k-1))` with `#residue field = p^k`.
///
/// When `ord(g, a_0) = p` and the orbit of `a_0` stays in its residue class,
/// `a_1` is a g-fixed representative of that class. The class identity
/// `a_1 = a_0^(p^k) + (higher valuation) = a_0 mod M` holds for any unit
/// `a_0`, by Lagrange on the residue field.
pub fn frobenius_power_fix(g: &GaloisAut, a0: &QuadExt, p: u32, k: u32) -> QuadExt {
    let mut product = a0.clone();
    let mut cur = a0.clone();
    for _ in 1..p {
        cur = apply(g, &cur);
        product = product.mul(&cur);
    }
    product.pow(p.pow(k - 1) as u64)
}

/// Produce a g-fixed representative of the class of the candidate, per the
/// first-return / averaging / Frobenius-power case analysis.
pub fn stabilize_candidate(g: &GaloisAut, candidate: &QuadExt) -> Result<QuadExt> {
    let n = first_return(g, candidate);
    let gn = g.pow(n);
    let mut rep = candidate.clone();
    let mut m = gn.ord_at(&Value::Quad(rep.clone()));
    // Peel off factors of p via the fixed-point construction.
    while m % 5 == 0 {
        let gp = gn.pow(m / 5);
        debug_assert_eq!(gp.ord_at(&Value::Quad(rep.clone())), 5);
        let next = frobenius_power_fix(&gp, &rep, 5, 2);
        if !same_class(&next, &rep) {
            return Err(Error::Precondition(
                "fixed-point construction left the class".into(),
            ));
        }
        rep = next;
        let m_next = gn.ord_at(&Value::Quad(rep.clone()));
        debug_assert!(m_next < m);
        m = m_next;
    }
    if m > 1 {
        rep = orbit_average(&gn, &rep)?;
    }
    if !apply(&gn, &rep).eq_approx(&rep) {
        return Err(Error::Precondition("stabilized candidate not fixed".into()));
    }
    Ok(rep)
}

/// Build the canonical g-stable representative set for Q_5(sqrt 2).
///
/// Candidates are taken from `R_L` in lexicographic `(a, b)` order; each
/// uncovered class contributes the full g-orbit of its stabilized candidate.
pub fn stable_reps(g: &GaloisAut, prec: usize) -> Result<ResidueRepSet> {
    if g.field != FieldId::Q5Sqrt2 {
        return Err(Error::Unsupported(
            "stable representatives are built over Q5_sqrt2".into(),
        ));
    }
    let mut by_class: BTreeMap<(u8, u8), QuadExt> = BTreeMap::new();
    by_class.insert((0, 0), QuadExt::zero(prec));
    for a in 0..5i64 {
        for b in 0..5i64 {
            if a == 0 && b == 0 {
                continue;
            }
            let candidate = QuadExt::from_i64(a, b, prec);
            let class = residue_reduce(&candidate)?;
            if by_class.contains_key(&(class.b, class.a)) {
                continue;
            }
            let rep = stabilize_candidate(g, &candidate)?;
            // Insert the whole forward orbit; distinct classes by the
            // first-return analysis.
            let mut x = rep.clone();
            loop {
                let c = residue_reduce(&x)?;
                let prev = by_class.insert((c.b, c.a), x.clone());
                debug_assert!(prev.is_none(), "orbit revisited class {c}");
                x = apply(g, &x);
                if x.eq_approx(&rep) {
                    break;
                }
            }
        }
    }
    debug_assert_eq!(by_class.len(), 25);
    let set = ResidueRepSet {
        g: *g,
        by_class,
    };
    if !set.is_stable() {
        return Err(Error::RepsNotStable);
    }
    Ok(set)
}
