//! Exact p-adic numbers with a fixed significant-digit precision model.
//!
//! A nonzero value is `p^val * (d_0 + d_1 p + d_2 p^2 + ...)` with
//! `d_0 != 0` and exactly `prec` digits stored. Zero is encoded as
//! valuation infinity with no digits. All arithmetic is exact on the
//! stored window; addition of equal-valuation operands may cancel
//! leading digits, in which case the surviving precision is recorded.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default significant-digit count for p-adic values.
pub const DEFAULT_PRECISION: usize = 32;

/// A valuation logarithm value: an integer or +infinity (for 0).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Val {
    Finite(i64),
    Infinite,
}

impl Val {
    pub fn is_infinite(self) -> bool {
        matches!(self, Val::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Val::Finite(v) => Some(v),
            Val::Infinite => None,
        }
    }

    /// Valuation of a product: `v + w`.
    pub fn plus(self, other: Val) -> Val {
        match (self, other) {
            (Val::Finite(a), Val::Finite(b)) => Val::Finite(a + b),
            _ => Val::Infinite,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Finite(v) => write!(f, "{v}"),
            Val::Infinite => write!(f, "inf"),
        }
    }
}

impl From<i64> for Val {
    fn from(v: i64) -> Self {
        Val::Finite(v)
    }
}

/// A p-adic number at finite precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PAdic {
    prime: u32,
    val: Val,
    /// Little-endian digits of the unit part, `digits[0] != 0` unless zero.
    digits: Vec<u32>,
    prec: usize,
}

impl PAdic {
    /// The zero value at the given precision.
    pub fn zero(prime: u32, prec: usize) -> Self {
        PAdic {
            prime,
            val: Val::Infinite,
            digits: Vec::new(),
            prec,
        }
    }

    pub fn one(prime: u32, prec: usize) -> Self {
        Self::from_i64(1, prime, prec)
    }

    pub fn from_i64(n: i64, prime: u32, prec: usize) -> Self {
        expand(&BigRational::from_integer(n.into()), prime, prec)
    }

    /// Rebuild from parts, normalizing a zero digit string to the zero value.
    pub fn from_parts(prime: u32, val: i64, digits: Vec<u32>, prec: usize) -> Result<Self> {
        if digits.iter().all(|&d| d == 0) {
            return Ok(Self::zero(prime, prec.max(digits.len())));
        }
        if digits.len() != prec {
            return Err(Error::invalid("digit count must equal precision"));
        }
        if digits[0] == 0 {
            return Err(Error::invalid("leading digit must be nonzero"));
        }
        if digits.iter().any(|&d| d >= prime) {
            return Err(Error::invalid("digit out of range"));
        }
        Ok(PAdic {
            prime,
            val: Val::Finite(val),
            digits,
            prec,
        })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.val.is_infinite()
    }

    /// The valuation logarithm `nu_p`; infinity exactly for zero.
    pub fn vlog(&self) -> Val {
        self.val
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Exponent of the first digit beyond the known window.
    fn known_until(&self) -> Option<i64> {
        self.val.finite().map(|v| v + self.prec as i64)
    }

    fn unit(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for &d in self.digits.iter().rev() {
            acc = acc * self.prime + d;
        }
        acc
    }

    fn from_unit(prime: u32, val: i64, unit: &BigUint, prec: usize) -> Self {
        debug_assert!(!unit.is_zero());
        let mut digits = unit.to_radix_le(prime);
        debug_assert!(digits.len() <= prec);
        digits.resize(prec, 0);
        PAdic {
            prime,
            val: Val::Finite(val),
            digits: digits.into_iter().map(u32::from).collect(),
            prec,
        }
    }

    /// Truncate to at most `prec` significant digits.
    pub fn truncate(&self, prec: usize) -> Self {
        if self.is_zero() || prec >= self.prec {
            let mut out = self.clone();
            out.prec = prec.min(out.prec.max(1)).max(1);
            if out.is_zero() {
                out.prec = prec.max(1);
            }
            return out;
        }
        let prec = prec.max(1);
        let digits: Vec<u32> = self.digits[..prec].to_vec();
        if digits.iter().all(|&d| d == 0) {
            return Self::zero(self.prime, prec);
        }
        PAdic {
            prime: self.prime,
            val: self.val,
            digits,
            prec,
        }
    }

    /// Multiply by `p^k` (exact valuation shift).
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        if let Val::Finite(v) = out.val {
            out.val = Val::Finite(v + k);
        }
        out
    }

    fn check_prime(&self, other: &PAdic) {
        assert_eq!(
            self.prime, other.prime,
            "operands must share the same prime"
        );
    }

    pub fn add(&self, other: &PAdic) -> PAdic {
        self.check_prime(other);
        let min_prec = self.prec.min(other.prec);
        if self.is_zero() {
            return other.truncate(min_prec);
        }
        if other.is_zero() {
            return self.truncate(min_prec);
        }
        let vx = self.val.finite().unwrap();
        let vy = other.val.finite().unwrap();
        let base = vx.min(vy);
        // First exponent at which either operand is unknown.
        let cutoff = self.known_until().unwrap().min(other.known_until().unwrap());
        let window = (cutoff - base) as usize;
        let p = BigUint::from(self.prime);
        let modulus = p.pow(window as u32);
        let a = self.unit() * p.pow((vx - base) as u32);
        let b = other.unit() * p.pow((vy - base) as u32);
        let sum = (a + b) % &modulus;
        Self::normalize_window(self.prime, base, sum, window, min_prec)
    }

    pub fn neg(&self) -> PAdic {
        if self.is_zero() {
            return self.clone();
        }
        let p = BigUint::from(self.prime);
        let modulus = p.pow(self.prec as u32);
        let unit = &modulus - self.unit();
        Self::from_unit(self.prime, self.val.finite().unwrap(), &unit, self.prec)
    }

    pub fn sub(&self, other: &PAdic) -> PAdic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PAdic) -> PAdic {
        self.check_prime(other);
        let prec = self.prec.min(other.prec);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.prime, prec);
        }
        let p = BigUint::from(self.prime);
        let modulus = p.pow(prec as u32);
        let unit = (self.unit() * other.unit()) % modulus;
        // p is prime and both unit parts are coprime to p, so no leading zero.
        Self::from_unit(
            self.prime,
            self.val.finite().unwrap() + other.val.finite().unwrap(),
            &unit,
            prec,
        )
    }

    pub fn inv(&self) -> Result<PAdic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = BigUint::from(self.prime);
        let modulus = p.pow(self.prec as u32);
        let unit = mod_inverse(&self.unit(), &modulus)
            .expect("unit part is coprime to p^k");
        Ok(Self::from_unit(
            self.prime,
            -self.val.finite().unwrap(),
            &unit,
            self.prec,
        ))
    }

    pub fn div(&self, other: &PAdic) -> Result<PAdic> {
        Ok(self.mul(&other.inv()?))
    }

    fn normalize_window(
        prime: u32,
        base: i64,
        value: BigUint,
        window: usize,
        zero_prec: usize,
    ) -> PAdic {
        if value.is_zero() {
            return Self::zero(prime, zero_prec);
        }
        let digits = value.to_radix_le(prime);
        let lead = digits.iter().position(|&d| d != 0).unwrap();
        let prec = window - lead;
        let unit: BigUint = value / BigUint::from(prime).pow(lead as u32);
        Self::from_unit(prime, base + lead as i64, &unit, prec)
    }

    /// True when the two values agree on their joint known digit window.
    ///
    /// This is the working notion of equality for truncated values: exact
    /// structural equality additionally demands identical precision.
    pub fn eq_approx(&self, other: &PAdic) -> bool {
        if self.prime != other.prime {
            return false;
        }
        match (self.val, other.val) {
            (Val::Infinite, Val::Infinite) => true,
            (Val::Finite(a), Val::Finite(b)) => {
                if a != b {
                    return false;
                }
                let window = self.prec.min(other.prec);
                self.digits[..window] == other.digits[..window]
            }
            _ => false,
        }
    }

    /// Reconstruct the rational represented by the stored window,
    /// `sum digits[i] p^(val+i)`.
    pub fn to_rational(&self) -> BigRational {
        match self.val {
            Val::Infinite => BigRational::zero(),
            Val::Finite(v) => {
                let unit = BigRational::from_integer(self.unit().into());
                let p = BigRational::from_integer(BigUint::from(self.prime).into());
                unit * pow_rational(&p, v)
            }
        }
    }
}

impl fmt::Debug for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.val {
            Val::Infinite => write!(f, "0 (prec {})", self.prec),
            Val::Finite(v) => {
                let last = self.digits.iter().rposition(|&d| d != 0).unwrap_or(0);
                let ds: Vec<String> = self.digits[..=last].iter().map(|d| d.to_string()).collect();
                write!(
                    f,
                    "({}) * {}^{} + O({}^{})",
                    ds.join(","),
                    self.prime,
                    v,
                    self.prime,
                    v + self.prec as i64
                )
            }
        }
    }
}

fn pow_rational(base: &BigRational, exp: i64) -> BigRational {
    if exp >= 0 {
        num_traits::pow::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow::pow(base.clone(), (-exp) as usize)
            .recip()
    }
}

fn mod_inverse(a: &BigUint, modulus: &BigUint) -> Option<BigUint> {
    use num_bigint::BigInt;
    let a = BigInt::from(a.clone());
    let m = BigInt::from(modulus.clone());
    let g = a.extended_gcd(&m);
    if !g.gcd.is_one() {
        return None;
    }
    let mut x = g.x % &m;
    if x.is_negative() {
        x += &m;
    }
    x.to_biguint()
}

/// p-adic valuation logarithm of a rational; `Infinite` for 0.
pub fn rational_vlog(q: &BigRational, prime: u32) -> Val {
    if q.is_zero() {
        return Val::Infinite;
    }
    let p = num_bigint::BigInt::from(prime);
    let mut v = 0i64;
    let mut numer = q.numer().clone();
    while (&numer % &p).is_zero() {
        numer /= &p;
        v += 1;
    }
    let mut denom = q.denom().clone();
    while (&denom % &p).is_zero() {
        denom /= &p;
        v -= 1;
    }
    Val::Finite(v)
}

/// First `prec` digits of the canonical expansion of `q` over `{0,...,p-1}`.
///
/// Digits come from exact rational reduction mod p: the unit part `a/b`
/// (p coprime to a and b) satisfies `a/b = a * b^{-1} mod p^prec`, a single
/// modular inversion rather than repeated float work.
pub fn expand(q: &BigRational, prime: u32, prec: usize) -> PAdic {
    use num_bigint::BigInt;
    let prec = prec.max(1);
    if q.is_zero() {
        return PAdic::zero(prime, prec);
    }
    let val = match rational_vlog(q, prime) {
        Val::Finite(v) => v,
        Val::Infinite => unreachable!(),
    };
    let p = BigInt::from(prime);
    let unit_q = q / pow_rational(&BigRational::from_integer(p.clone()), val);
    let modulus = p.pow(prec as u32);
    let numer = unit_q.numer().mod_floor(&modulus);
    let denom = unit_q.denom().mod_floor(&modulus);
    let denom_inv = mod_inverse(&denom.to_biguint().unwrap(), &modulus.to_biguint().unwrap())
        .expect("denominator coprime to p");
    let unit = (numer.to_biguint().unwrap() * denom_inv) % modulus.to_biguint().unwrap();
    PAdic::from_unit(prime, val, &unit, prec)
}

/// Convergence verdict for a truncated series.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Converges,
    Diverges,
}

/// Partial sum of finitely many terms together with a convergence verdict.
///
/// A series over a complete non-Archimedean field converges iff its terms
/// tend to zero. On a finite truncation that is judged by whether the
/// valuations in the final quarter of the list have risen strictly above
/// the global minimum; all-zero input trivially converges.
pub fn sum_series(terms: &[PAdic], prime: u32, prec: usize) -> (PAdic, Verdict) {
    let mut sum = PAdic::zero(prime, prec);
    for t in terms {
        sum = sum.add(t);
    }
    if terms.iter().all(|t| t.is_zero()) {
        return (sum, Verdict::Converges);
    }
    let global_min = terms.iter().map(|t| t.vlog()).min().unwrap();
    let tail_len = (terms.len() / 4).max(1);
    let tail_min = terms[terms.len() - tail_len..]
        .iter()
        .map(|t| t.vlog())
        .min()
        .unwrap();
    let verdict = if tail_min > global_min {
        Verdict::Converges
    } else {
        Verdict::Diverges
    };
    (sum, verdict)
}

// ── serde: {"p":5,"val":0,"digits":[3,2,2,2],"prec":4}, val "inf" for zero ──

#[derive(Serialize, Deserialize)]
struct PAdicRepr {
    p: u32,
    val: ValRepr,
    digits: Vec<u32>,
    prec: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ValRepr {
    Finite(i64),
    Tag(String),
}

impl Serialize for PAdic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let val = match self.val {
            Val::Finite(v) => ValRepr::Finite(v),
            Val::Infinite => ValRepr::Tag("inf".into()),
        };
        PAdicRepr {
            p: self.prime,
            val,
            digits: self.digits.clone(),
            prec: self.prec,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PAdic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = PAdicRepr::deserialize(d)?;
        if repr.p < 2 {
            return Err(D::Error::custom("prime must be at least 2"));
        }
        match repr.val {
            ValRepr::Finite(v) => PAdic::from_parts(repr.p, v, repr.digits, repr.prec)
                .map_err(D::Error::custom),
            ValRepr::Tag(t) if t == "inf" => Ok(PAdic::zero(repr.p, repr.prec)),
            ValRepr::Tag(t) => Err(D::Error::custom(format!("unknown valuation tag {t:?}"))),
        }
    }
}
