//! Exact arithmetic in the cyclotomic fields Q(zeta_10) and Q(zeta_14).
//!
//! Elements are rational coefficient vectors in the power basis
//! `1, zeta, ..., zeta^(d-1)`, reduced by the minimal polynomial of the
//! primitive root. Both fields carry the trivial valuation, so no
//! truncation is involved anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which cyclotomic field an element lives in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CycloField {
    Zeta10,
    Zeta14,
}

impl CycloField {
    /// Order of the primitive root of unity.
    pub fn n(self) -> usize {
        match self {
            CycloField::Zeta10 => 10,
            CycloField::Zeta14 => 14,
        }
    }

    /// Degree of the extension over Q.
    pub fn degree(self) -> usize {
        match self {
            CycloField::Zeta10 => 4,
            CycloField::Zeta14 => 6,
        }
    }

    /// Minimal polynomial coefficients, constant term first, degree last.
    /// zeta10: x^4 - x^3 + x^2 - x + 1; zeta14: x^6 - x^5 + x^4 - x^3 + x^2 - x + 1.
    pub fn modulus(self) -> Vec<i64> {
        match self {
            CycloField::Zeta10 => vec![1, -1, 1, -1, 1],
            CycloField::Zeta14 => vec![1, -1, 1, -1, 1, -1, 1],
        }
    }

    /// Exponent of the canonical Galois generator `zeta -> zeta^3`.
    pub fn generator_exponent(self) -> usize {
        3
    }

    /// Order of the Galois group (cyclic, generated by `zeta -> zeta^3`).
    pub fn galois_order(self) -> usize {
        self.degree()
    }
}

/// An element of Q(zeta_n) as a rational vector in the power basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyclo {
    pub field: CycloField,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn new(field: CycloField, mut coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() > field.degree() {
            return Err(Error::invalid("coefficient vector longer than degree"));
        }
        coeffs.resize(field.degree(), BigRational::zero());
        Ok(Cyclo { field, coeffs })
    }

    pub fn zero(field: CycloField) -> Self {
        Cyclo {
            field,
            coeffs: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn one(field: CycloField) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_rational(field: CycloField, q: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); field.degree()];
        coeffs[0] = q;
        Cyclo { field, coeffs }
    }

    pub fn from_i64(field: CycloField, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    /// The primitive root `zeta`.
    pub fn zeta(field: CycloField) -> Self {
        Self::zeta_pow(field, 1)
    }

    /// `zeta^j` reduced into the power basis.
    pub fn zeta_pow(field: CycloField, j: usize) -> Self {
        let j = j % field.n();
        let d = field.degree();
        if j < d {
            let mut coeffs = vec![BigRational::zero(); d];
            coeffs[j] = BigRational::one();
            return Cyclo { field, coeffs };
        }
        // Raw coefficient vector for x^j, then polynomial reduction.
        let mut raw = vec![BigRational::zero(); j + 1];
        raw[j] = BigRational::one();
        Cyclo {
            field,
            coeffs: reduce(field, raw),
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when the element lies in the base field Q.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn check_field(&self, other: &Cyclo) {
        assert_eq!(self.field, other.field, "operands from different fields");
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        self.check_field(other);
        Cyclo {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        self.check_field(other);
        let d = self.field.degree();
        let mut raw = vec![BigRational::zero(); 2 * d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Cyclo {
            field: self.field,
            coeffs: reduce(self.field, raw),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Cyclo {
        Cyclo {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Product of all nontrivial Galois images divided by the norm.
        let mut conj_product = Cyclo::one(self.field);
        let n = self.field.n();
        let gen = self.field.generator_exponent();
        let mut k = gen;
        while k != 1 {
            conj_product = conj_product.mul(&self.apply_exponent(k)?);
            k = (k * gen) % n;
        }
        let norm = self.mul(&conj_product);
        debug_assert!(norm.is_rational());
        let norm_inv = norm.coeffs[0].recip();
        Ok(conj_product.scale(&norm_inv))
    }

    /// Apply the field automorphism `zeta -> zeta^k`, `gcd(k, n) = 1`.
    pub fn apply_exponent(&self, k: usize) -> Result<Cyclo> {
        let n = self.field.n();
        if num_integer::gcd(k, n) != 1 {
            return Err(Error::invalid(format!(
                "exponent {k} is not coprime to {n}"
            )));
        }
        let mut acc = Cyclo::zero(self.field);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&Cyclo::zeta_pow(self.field, (i * k) % n).scale(c));
            }
        }
        Ok(acc)
    }
}

/// Reduce a raw coefficient vector modulo the (monic) minimal polynomial.
fn reduce(field: CycloField, mut raw: Vec<BigRational>) -> Vec<BigRational> {
    let modulus = field.modulus();
    let d = field.degree();
    for top in (d..raw.len()).rev() {
        if raw[top].is_zero() {
            continue;
        }
        let lead = raw[top].clone();
        raw[top] = BigRational::zero();
        // x^top = -sum_{i<d} m_i x^(top-d+i) for the monic modulus m.
        for i in 0..d {
            let m = BigRational::from_integer(BigInt::from(modulus[i]));
            raw[top - d + i] -= &lead * m;
        }
    }
    raw.truncate(d);
    raw.resize(d, BigRational::zero());
    raw
}

impl std::fmt::Display for Cyclo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_negative() {
                format!("({c})")
            } else {
                c.to_string()
            };
            parts.push(match i {
                0 => coeff,
                1 => format!("{coeff}*z"),
                _ => format!("{coeff}*z^{i}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

// serde: {"modulus":"zeta10","coeffs":["1/2","0","-1","0"]}

#[derive(Serialize, Deserialize)]
struct CycloRepr {
    modulus: CycloField,
    coeffs: Vec<String>,
}

impl Serialize for Cyclo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloRepr {
            modulus: self.field,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclo {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = CycloRepr::deserialize(d)?;
        let coeffs: std::result::Result<Vec<BigRational>, _> = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(D::Error::custom))
            .collect();
        Cyclo::new(repr.modulus, coeffs?).map_err(D::Error::custom)
    }
}

/// `zeta + zeta^9 - zeta^3 - zeta^7` in Q(zeta_10); squares to 5.
pub fn sqrt5() -> Cyclo {
    let f = CycloField::Zeta10;
    Cyclo::zeta_pow(f, 1)
        .add(&Cyclo::zeta_pow(f, 9))
        .sub(&Cyclo::zeta_pow(f, 3))
        .sub(&Cyclo::zeta_pow(f, 7))
}
