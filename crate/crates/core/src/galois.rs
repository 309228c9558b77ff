//! Field descriptors, a unified value type over the shipped fields, and
//! cyclic Galois actions with their order functions.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cyclo::{Cyclo, CycloField};
use crate::error::{Error, Result};
use crate::f25::F25;
use crate::padic::Val;
use crate::quadext::QuadExt;

/// The value fields shipped with this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FieldId {
    #[serde(rename = "Q5_sqrt2")]
    Q5Sqrt2,
    #[serde(rename = "F25")]
    F25,
    #[serde(rename = "zeta10")]
    Zeta10,
    #[serde(rename = "zeta14")]
    Zeta14,
}

impl FieldId {
    pub fn characteristic(self) -> u32 {
        match self {
            FieldId::F25 => 5,
            _ => 0,
        }
    }

    /// Order of the canonical Galois generator over the base field.
    pub fn galois_order(self) -> usize {
        match self {
            FieldId::Q5Sqrt2 | FieldId::F25 => 2,
            FieldId::Zeta10 => 4,
            FieldId::Zeta14 => 6,
        }
    }

    pub fn cyclo(self) -> Option<CycloField> {
        match self {
            FieldId::Zeta10 => Some(CycloField::Zeta10),
            FieldId::Zeta14 => Some(CycloField::Zeta14),
            _ => None,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "Q5_sqrt2" => Ok(FieldId::Q5Sqrt2),
            "F25" => Ok(FieldId::F25),
            "zeta10" => Ok(FieldId::Zeta10),
            "zeta14" => Ok(FieldId::Zeta14),
            other => Err(Error::invalid(format!("unknown field {other:?}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldId::Q5Sqrt2 => "Q5_sqrt2",
            FieldId::F25 => "F25",
            FieldId::Zeta10 => "zeta10",
            FieldId::Zeta14 => "zeta14",
        }
    }
}

impl std::fmt::Display for FieldId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A value in one of the shipped fields.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Quad(QuadExt),
    Cyclo(Cyclo),
    F25(F25),
}

impl Value {
    pub fn field(&self) -> FieldId {
        match self {
            Value::Quad(_) => FieldId::Q5Sqrt2,
            Value::F25(_) => FieldId::F25,
            Value::Cyclo(c) => match c.field {
                CycloField::Zeta10 => FieldId::Zeta10,
                CycloField::Zeta14 => FieldId::Zeta14,
            },
        }
    }

    pub fn zero(field: FieldId, prec: usize) -> Value {
        match field {
            FieldId::Q5Sqrt2 => Value::Quad(QuadExt::zero(prec)),
            FieldId::F25 => Value::F25(F25::ZERO),
            FieldId::Zeta10 => Value::Cyclo(Cyclo::zero(CycloField::Zeta10)),
            FieldId::Zeta14 => Value::Cyclo(Cyclo::zero(CycloField::Zeta14)),
        }
    }

    pub fn one(field: FieldId, prec: usize) -> Value {
        match field {
            FieldId::Q5Sqrt2 => Value::Quad(QuadExt::one(prec)),
            FieldId::F25 => Value::F25(F25::ONE),
            FieldId::Zeta10 => Value::Cyclo(Cyclo::one(CycloField::Zeta10)),
            FieldId::Zeta14 => Value::Cyclo(Cyclo::one(CycloField::Zeta14)),
        }
    }

    pub fn from_i64(field: FieldId, n: i64, prec: usize) -> Value {
        match field {
            FieldId::Q5Sqrt2 => Value::Quad(QuadExt::from_i64(n, 0, prec)),
            FieldId::F25 => Value::F25(F25::new(n.rem_euclid(5) as u8, 0)),
            FieldId::Zeta10 => Value::Cyclo(Cyclo::from_i64(CycloField::Zeta10, n)),
            FieldId::Zeta14 => Value::Cyclo(Cyclo::from_i64(CycloField::Zeta14, n)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Quad(x) => x.is_zero(),
            Value::F25(x) => x.is_zero(),
            Value::Cyclo(x) => x.is_zero(),
        }
    }

    /// Valuation logarithm; trivial (0 or infinity) on F25 and the
    /// cyclotomic fields.
    pub fn omega(&self) -> Val {
        match self {
            Value::Quad(x) => x.omega(),
            _ if self.is_zero() => Val::Infinite,
            _ => Val::Finite(0),
        }
    }

    fn binop(
        &self,
        other: &Value,
        fq: impl Fn(&QuadExt, &QuadExt) -> QuadExt,
        ff: impl Fn(F25, F25) -> F25,
        fc: impl Fn(&Cyclo, &Cyclo) -> Cyclo,
    ) -> Value {
        match (self, other) {
            (Value::Quad(a), Value::Quad(b)) => Value::Quad(fq(a, b)),
            (Value::F25(a), Value::F25(b)) => Value::F25(ff(*a, *b)),
            (Value::Cyclo(a), Value::Cyclo(b)) => Value::Cyclo(fc(a, b)),
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn add(&self, other: &Value) -> Value {
        self.binop(other, QuadExt::add, F25::add, Cyclo::add)
    }

    pub fn sub(&self, other: &Value) -> Value {
        self.binop(other, QuadExt::sub, F25::sub, Cyclo::sub)
    }

    pub fn mul(&self, other: &Value) -> Value {
        self.binop(other, QuadExt::mul, F25::mul, Cyclo::mul)
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::Quad(x) => Value::Quad(x.neg()),
            Value::F25(x) => Value::F25(x.neg()),
            Value::Cyclo(x) => Value::Cyclo(x.neg()),
        }
    }

    pub fn inv(&self) -> Result<Value> {
        Ok(match self {
            Value::Quad(x) => Value::Quad(x.inv()?),
            Value::F25(x) => Value::F25(x.inv()?),
            Value::Cyclo(x) => Value::Cyclo(x.inv()?),
        })
    }

    pub fn pow(&self, e: u64) -> Value {
        match self {
            Value::Quad(x) => Value::Quad(x.pow(e)),
            Value::F25(x) => Value::F25(x.pow(e)),
            Value::Cyclo(x) => Value::Cyclo(x.pow(e)),
        }
    }

    /// Divide by a small positive integer (exact in characteristic zero).
    pub fn div_int(&self, n: u32) -> Result<Value> {
        match self {
            Value::Quad(x) => {
                let inv = crate::padic::PAdic::from_i64(n as i64, 5, x.precision().max(1)).inv()?;
                Ok(Value::Quad(x.scale(&inv)))
            }
            Value::Cyclo(x) => {
                let q = BigRational::new(1.into(), (n as i64).into());
                Ok(Value::Cyclo(x.scale(&q)))
            }
            Value::F25(x) => {
                let m = F25::new((n % 5) as u8, 0);
                Ok(Value::F25(x.mul(m.inv()?)))
            }
        }
    }

    /// Exact equality for the exact fields, joint-window agreement for
    /// truncated quadratic extension values.
    pub fn eq_approx(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Quad(a), Value::Quad(b)) => a.eq_approx(b),
            (Value::F25(a), Value::F25(b)) => a == b,
            (Value::Cyclo(a), Value::Cyclo(b)) => a == b,
            _ => false,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Quad(x) => write!(f, "{} + sqrt2*({})", x.a, x.b),
            Value::F25(x) => write!(f, "{x}"),
            Value::Cyclo(x) => write!(f, "{x}"),
        }
    }
}

/// A power of the canonical cyclic generator of `Gal(L/F)`.
///
/// Generators: conjugation on Q_5(sqrt 2), the Frobenius on F_25, and
/// `zeta -> zeta^3` on both cyclotomic fields.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GaloisAut {
    pub field: FieldId,
    /// Exponent of the canonical generator, reduced mod its order.
    pub power: usize,
}

impl GaloisAut {
    pub fn identity(field: FieldId) -> Self {
        GaloisAut { field, power: 0 }
    }

    pub fn generator(field: FieldId) -> Self {
        GaloisAut { field, power: 1 }
    }

    /// For a cyclotomic field, the automorphism `zeta -> zeta^k`.
    pub fn from_exponent(field: FieldId, k: usize) -> Result<Self> {
        let cf = field
            .cyclo()
            .ok_or_else(|| Error::invalid("exponent form requires a cyclotomic field"))?;
        let n = cf.n();
        let mut e = cf.generator_exponent() % n;
        if k % n == 1 {
            return Ok(Self::identity(field));
        }
        for power in 1..cf.galois_order() {
            if e == k % n {
                return Ok(GaloisAut { field, power });
            }
            e = (e * cf.generator_exponent()) % n;
        }
        Err(Error::invalid(format!(
            "exponent {k} is not a power of the generator"
        )))
    }

    /// `g^(n)`, composition of `g` with itself `n` times.
    pub fn pow(&self, n: usize) -> Self {
        GaloisAut {
            field: self.field,
            power: (self.power * n) % self.field.galois_order(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.power % self.field.galois_order() == 0
    }

    /// Order of the automorphism as a group element.
    pub fn ord(&self) -> usize {
        let n = self.field.galois_order();
        let p = self.power % n;
        if p == 0 {
            1
        } else {
            n / num_integer::gcd(n, p)
        }
    }

    pub fn apply(&self, v: &Value) -> Value {
        assert_eq!(v.field(), self.field, "automorphism applied across fields");
        let power = self.power % self.field.galois_order();
        if power == 0 {
            return v.clone();
        }
        match v {
            Value::Quad(x) => {
                // generator = conjugation, order 2
                if power % 2 == 1 {
                    Value::Quad(x.conj())
                } else {
                    v.clone()
                }
            }
            Value::F25(x) => {
                let mut y = *x;
                for _ in 0..(power % 2) {
                    y = y.frobenius();
                }
                Value::F25(y)
            }
            Value::Cyclo(x) => {
                let cf = x.field;
                let mut k = 1usize;
                for _ in 0..power {
                    k = (k * cf.generator_exponent()) % cf.n();
                }
                Value::Cyclo(x.apply_exponent(k).expect("generator exponent is a unit"))
            }
        }
    }

    /// Minimal `n >= 1` with `g^(n)(v) = v`.
    pub fn ord_at(&self, v: &Value) -> usize {
        let mut cur = self.apply(v);
        for n in 1..=self.ord() {
            if cur.eq_approx(v) {
                return n;
            }
            cur = self.apply(&cur);
        }
        unreachable!("g^(ord g) is the identity")
    }

    /// The order set `ord(g, S)`.
    pub fn ord_set(&self, probe: &[Value]) -> std::collections::BTreeSet<usize> {
        probe.iter().map(|v| self.ord_at(v)).collect()
    }

    /// Name used in JSON specs: "id", "conj", "frob", or "g^k".
    pub fn name(&self) -> String {
        let p = self.power % self.field.galois_order();
        match (self.field, p) {
            (_, 0) => "id".into(),
            (FieldId::Q5Sqrt2, 1) => "conj".into(),
            (FieldId::F25, 1) => "frob".into(),
            (_, 1) => "g".into(),
            (_, k) => format!("g^{k}"),
        }
    }

    pub fn parse(field: FieldId, s: &str) -> Result<Self> {
        let ga = match s {
            "id" => Self::identity(field),
            "conj" if field == FieldId::Q5Sqrt2 => Self::generator(field),
            "frob" if field == FieldId::F25 => Self::generator(field),
            "g" => Self::generator(field),
            _ => {
                let k: usize = s
                    .strip_prefix("g^")
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| {
                        Error::invalid(format!("unknown automorphism {s:?} for field {field}"))
                    })?;
                GaloisAut {
                    field,
                    power: k % field.galois_order(),
                }
            }
        };
        Ok(ga)
    }
}

/// Filter the probe elements fixed pointwise by the automorphism.
pub fn fixed_field_elements(g: &GaloisAut, probe: &[Value]) -> Vec<Value> {
    probe
        .iter()
        .filter(|v| g.apply(v).eq_approx(v))
        .cloned()
        .collect()
}
