//! Basic function algebras C(X, tau, g) on finite Stone spaces.
//!
//! A table `f` of L-valued point assignments belongs to the algebra when
//! `f(tau(x)) = g(f(x))` at every point. Everything downstream of that
//! test (the sigma automorphism, separation constructions, the lattice of
//! basic extensions, ideals, the residue algebra and a desk-scale Gelfand
//! transform) lives in the submodules.

mod disc_algebra;
mod enumerate;
mod gelfand;
mod ideals;
mod lattice;
mod residue;
mod separation;

pub use disc_algebra::{default_unit_ball_samples, series_membership_refuter, RefuterVerdict};
pub use enumerate::{enumerate_members, member_count_formula};
pub use gelfand::{gelfand_demo, Character, GelfandDemo};
pub use ideals::{in_j, in_my, in_o, in_o_units, IdealKind, IdealView};
pub use lattice::{lattice, Lattice, LatticeNode};
pub use residue::{expand_function, residue_algebra, resum, ResidueAlgebra, DEFAULT_DEPTH};
pub use separation::{separates, separating_function};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::{FieldId, GaloisAut, Value};
use crate::padic::Val;

/// A finite discrete space with distinct point labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StoneSpace {
    labels: Vec<String>,
}

impl StoneSpace {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::invalid("space must be nonempty"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::invalid(format!("duplicate label {l:?}")));
            }
        }
        Ok(StoneSpace { labels })
    }

    pub fn of_size(n: usize) -> Self {
        StoneSpace {
            labels: (0..n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A bijective self-map of the space with its (minimal) order cached.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Endo {
    map: Vec<usize>,
    order: usize,
}

impl Endo {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &i in &map {
            if i >= n || seen[i] {
                return Err(Error::invalid("map must be a bijection of the space"));
            }
            seen[i] = true;
        }
        let mut order = 1usize;
        for cycle in cycle_lengths(&map) {
            order = num_integer::lcm(order, cycle);
        }
        Ok(Endo { map, order })
    }

    pub fn identity(n: usize) -> Self {
        Endo {
            map: (0..n).collect(),
            order: 1,
        }
    }

    /// The cyclic shift `i -> i+1 mod n`.
    pub fn cycle(n: usize) -> Self {
        Endo::new((0..n).map(|i| (i + 1) % n).collect()).unwrap()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn ord(&self) -> usize {
        self.order
    }

    /// Orbit length of the point, `ord(tau, x)`.
    pub fn ord_at(&self, x: usize) -> usize {
        let mut cur = self.map[x];
        let mut n = 1;
        while cur != x {
            cur = self.map[cur];
            n += 1;
        }
        n
    }

    /// The forward orbit of `x`, starting at `x`.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        let mut cur = self.map[x];
        while cur != x {
            out.push(cur);
            cur = self.map[cur];
        }
        out
    }

    /// `tau^(n)`.
    pub fn pow(&self, n: usize) -> Endo {
        let mut map: Vec<usize> = (0..self.map.len()).collect();
        for _ in 0..(n % self.order.max(1)) {
            map = map.iter().map(|&i| self.map[i]).collect();
        }
        Endo::new(map).unwrap()
    }

    /// Orbits as sorted representative lists, covering the space.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.map.len()];
        let mut out = Vec::new();
        for x in 0..self.map.len() {
            if !seen[x] {
                let orbit = self.orbit(x);
                for &i in &orbit {
                    seen[i] = true;
                }
                out.push(orbit);
            }
        }
        out
    }
}

fn cycle_lengths(map: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; map.len()];
    let mut out = Vec::new();
    for start in 0..map.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = map[cur];
            len += 1;
        }
        out.push(len);
    }
    out
}

/// The data (X, tau, g) of a basic function algebra.
///
/// Invalid triples (where `ord(tau)` does not divide `ord(g)`) are
/// representable; `is_valid` flags them and the separation machinery
/// refuses to run on them.
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    pub space: StoneSpace,
    pub tau: Endo,
    pub g: GaloisAut,
}

impl AlgebraSpec {
    pub fn new(space: StoneSpace, tau: Endo, g: GaloisAut) -> Result<Self> {
        if tau.map.len() != space.len() {
            return Err(Error::invalid("tau must act on the space"));
        }
        Ok(AlgebraSpec { space, tau, g })
    }

    pub fn field(&self) -> FieldId {
        self.g.field
    }

    pub fn is_valid(&self) -> bool {
        self.g.ord() % self.tau.ord() == 0
    }

    pub fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::NotSeparating)
        }
    }

    /// The derived spec `(X, tau^(n), g^(n))`.
    pub fn power(&self, n: usize) -> AlgebraSpec {
        AlgebraSpec {
            space: self.space.clone(),
            tau: self.tau.pow(n),
            g: self.g.pow(n),
        }
    }
}

/// A total assignment of field values to the points of a space.
#[derive(Clone, PartialEq, Debug)]
pub struct FnTable {
    values: Vec<Value>,
}

impl FnTable {
    pub fn new(values: Vec<Value>) -> Self {
        FnTable { values }
    }

    /// The constant table.
    pub fn constant(spec: &AlgebraSpec, v: Value) -> Self {
        FnTable {
            values: vec![v; spec.space.len()],
        }
    }

    pub fn from_fn(spec: &AlgebraSpec, f: impl Fn(usize) -> Value) -> Self {
        FnTable {
            values: (0..spec.space.len()).map(f).collect(),
        }
    }

    pub fn get(&self, x: usize) -> &Value {
        &self.values[x]
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn eq_approx(&self, other: &FnTable) -> bool {
        self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.eq_approx(b))
    }

    pub fn add(&self, other: &FnTable) -> FnTable {
        self.zip(other, Value::add)
    }

    pub fn mul(&self, other: &FnTable) -> FnTable {
        self.zip(other, Value::mul)
    }

    pub fn sub(&self, other: &FnTable) -> FnTable {
        self.zip(other, Value::sub)
    }

    fn zip(&self, other: &FnTable, op: impl Fn(&Value, &Value) -> Value) -> FnTable {
        FnTable {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    /// Sup norm in valuation-logarithm form: `min_x omega(f(x))`.
    /// (`Infinite` exactly for the zero function.)
    pub fn inf_omega(&self) -> Val {
        self.values
            .iter()
            .map(Value::omega)
            .min()
            .unwrap_or(Val::Infinite)
    }

    fn check_field(&self, spec: &AlgebraSpec) -> Result<()> {
        for (x, v) in self.values.iter().enumerate() {
            if v.field() != spec.field() {
                return Err(Error::TypeError(format!(
                    "value at point {x} lies in {}, spec expects {}",
                    v.field(),
                    spec.field()
                )));
            }
        }
        Ok(())
    }
}

/// Result of a membership test, with the first violating point if any.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MemberCheck {
    pub ok: bool,
    pub witness: Option<usize>,
}

/// Does `f(tau(x)) = g(f(x))` hold at every point?
pub fn is_member(f: &FnTable, spec: &AlgebraSpec) -> Result<MemberCheck> {
    if f.len() != spec.space.len() {
        return Err(Error::invalid("table does not cover the space"));
    }
    f.check_field(spec)?;
    for x in 0..f.len() {
        let lhs = f.get(spec.tau.apply(x));
        let rhs = spec.g.apply(f.get(x));
        if !lhs.eq_approx(&rhs) {
            return Ok(MemberCheck {
                ok: false,
                witness: Some(x),
            });
        }
    }
    Ok(MemberCheck { ok: true, witness: None })
}

/// The isometric automorphism `sigma(f) = g^(ord(g)-1) o f o tau` of C_L(X);
/// its fixed points are exactly the members of C(X, tau, g).
pub fn sigma(f: &FnTable, spec: &AlgebraSpec) -> FnTable {
    let g_inv = spec.g.pow(spec.g.ord() - 1);
    FnTable {
        values: (0..f.len())
            .map(|x| g_inv.apply(f.get(spec.tau.apply(x))))
            .collect(),
    }
}

/// `sigma^(n)(f)`.
pub fn sigma_pow(f: &FnTable, spec: &AlgebraSpec, n: usize) -> FnTable {
    let mut cur = f.clone();
    for _ in 0..n {
        cur = sigma(&cur, spec);
    }
    cur
}

// ── JSON forms ─────────────────────────────────────────────────────────
//
// AlgebraSpec: {"points":["x","y"],"tau":{"x":"y","y":"x"},"field":"Q5_sqrt2","g":"conj"}
// FnTable:    {"x":<element>,"y":<element>}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    points: Vec<String>,
    tau: BTreeMap<String, String>,
    field: FieldId,
    g: String,
}

impl Serialize for AlgebraSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let tau = self
            .space
            .labels()
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), self.space.labels()[self.tau.apply(i)].clone()))
            .collect();
        SpecRepr {
            points: self.space.labels().to_vec(),
            tau,
            field: self.field(),
            g: self.g.name(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = SpecRepr::deserialize(d)?;
        let space = StoneSpace::new(repr.points).map_err(D::Error::custom)?;
        let mut map = vec![0usize; space.len()];
        for (i, label) in space.labels().iter().enumerate() {
            let target = repr.tau.get(label).ok_or_else(|| {
                D::Error::custom(format!("tau is missing point {label:?} (at /tau)"))
            })?;
            map[i] = space.index_of(target).ok_or_else(|| {
                D::Error::custom(format!("tau maps to unknown point {target:?} (at /tau/{label})"))
            })?;
        }
        let tau = Endo::new(map).map_err(D::Error::custom)?;
        let g = GaloisAut::parse(repr.field, &repr.g).map_err(D::Error::custom)?;
        AlgebraSpec::new(space, tau, g).map_err(D::Error::custom)
    }
}

/// Serialize a table against its spec's point labels.
pub fn table_to_json(f: &FnTable, spec: &AlgebraSpec) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (i, l) in spec.space.labels().iter().enumerate() {
        map.insert(l.clone(), serde_json::to_value(f.get(i)).unwrap());
    }
    serde_json::Value::Object(map)
}

pub fn table_from_json(js: &serde_json::Value, spec: &AlgebraSpec) -> Result<FnTable> {
    let obj = js
        .as_object()
        .ok_or_else(|| Error::invalid_at("/", "function table must be an object"))?;
    let mut values = Vec::with_capacity(spec.space.len());
    for l in spec.space.labels() {
        let v = obj
            .get(l)
            .ok_or_else(|| Error::invalid_at(format!("/{l}"), "missing point value"))?;
        let value: Value = serde_json::from_value(v.clone())
            .map_err(|e| Error::invalid_at(format!("/{l}"), e.to_string()))?;
        values.push(value);
    }
    Ok(FnTable::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadext::QuadExt;

    pub(crate) fn swap_spec_quad() -> AlgebraSpec {
        AlgebraSpec::new(
            StoneSpace::of_size(2),
            Endo::cycle(2),
            GaloisAut::generator(FieldId::Q5Sqrt2),
        )
        .unwrap()
    }

    #[test]
    fn constants_from_the_base_field_are_members() {
        let spec = swap_spec_quad();
        let f = FnTable::constant(&spec, Value::from_i64(FieldId::Q5Sqrt2, 7, 8));
        assert!(is_member(&f, &spec).unwrap().ok);
    }

    #[test]
    fn sqrt2_swap_table_is_a_member() {
        let spec = swap_spec_quad();
        let s = Value::Quad(QuadExt::sqrt2(8));
        let f = FnTable::new(vec![s.clone(), s.neg()]);
        assert!(is_member(&f, &spec).unwrap().ok);

        // Same value at both points fails, witnessed at the first point.
        let bad = FnTable::new(vec![s.clone(), s]);
        let check = is_member(&bad, &spec).unwrap();
        assert!(!check.ok);
        assert_eq!(check.witness, Some(0));
    }

    #[test]
    fn membership_rejects_foreign_values() {
        let spec = swap_spec_quad();
        let f = FnTable::constant(&spec, Value::one(FieldId::F25, 8));
        assert!(matches!(is_member(&f, &spec), Err(Error::TypeError(_))));
    }

    #[test]
    fn sigma_fixes_members_and_has_order_ord_g() {
        let spec = swap_spec_quad();
        let s = Value::Quad(QuadExt::sqrt2(8));
        let member = FnTable::new(vec![s.clone(), s.neg()]);
        assert!(sigma(&member, &spec).eq_approx(&member));

        let non_member = FnTable::new(vec![s.clone(), s.clone()]);
        assert!(!sigma(&non_member, &spec).eq_approx(&non_member));
        assert!(sigma_pow(&non_member, &spec, spec.g.ord()).eq_approx(&non_member));
    }

    #[test]
    fn sigma_is_an_isometry() {
        let spec = swap_spec_quad();
        let f = FnTable::new(vec![
            Value::Quad(QuadExt::from_i64(5, 3, 8)),
            Value::Quad(QuadExt::from_i64(2, 25, 8)),
        ]);
        assert_eq!(sigma(&f, &spec).inf_omega(), f.inf_omega());
    }

    #[test]
    fn sigma_fixed_point_characterisation_on_f25() {
        let spec = AlgebraSpec::new(
            StoneSpace::of_size(2),
            Endo::cycle(2),
            GaloisAut::generator(FieldId::F25),
        )
        .unwrap();
        let mut checked = 0;
        for a in crate::f25::F25::all() {
            for b in crate::f25::F25::all() {
                let f = FnTable::new(vec![Value::F25(a), Value::F25(b)]);
                let fixed = sigma(&f, &spec).eq_approx(&f);
                let member = is_member(&f, &spec).unwrap().ok;
                assert_eq!(fixed, member);
                checked += 1;
            }
        }
        assert_eq!(checked, 625);
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = swap_spec_quad();
        let js = serde_json::to_string(&spec).unwrap();
        let back: AlgebraSpec = serde_json::from_str(&js).unwrap();
        assert_eq!(back.space, spec.space);
        assert_eq!(back.tau, spec.tau);
        assert_eq!(back.g, spec.g);
    }

    #[test]
    fn table_json_round_trip() {
        let spec = swap_spec_quad();
        let s = Value::Quad(QuadExt::sqrt2(8));
        let f = FnTable::new(vec![s.clone(), s.neg()]);
        let js = table_to_json(&f, &spec);
        let back = table_from_json(&js, &spec).unwrap();
        assert!(back.eq_approx(&f));
    }

    #[test]
    fn endo_orders_and_orbits() {
        let tau = Endo::new(vec![1, 0, 2, 3]).unwrap();
        assert_eq!(tau.ord(), 2);
        assert_eq!(tau.ord_at(0), 2);
        assert_eq!(tau.ord_at(2), 1);
        assert_eq!(tau.orbits().len(), 3);
        assert!(Endo::new(vec![0, 0]).is_err());
    }
}
