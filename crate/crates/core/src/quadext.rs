//! The quadratic extension Q_5(sqrt 2) with its unique extended valuation.
//!
//! Elements are pairs `a + sqrt(2) b` of 5-adic numbers. The valuation
//! logarithm extends both through the norm, `omega = (1/2) nu_5 (a^2 - 2b^2)`,
//! and through the closed form `omega = min(nu_5 a, nu_5 b)`; the two routes
//! agree and are cross-checked in tests.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::padic::{expand, PAdic, Val};

pub const QUAD_PRIME: u32 = 5;

/// An element `a + sqrt(2) b` of Q_5(sqrt 2).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuadExt {
    pub a: PAdic,
    pub b: PAdic,
}

impl QuadExt {
    pub fn new(a: PAdic, b: PAdic) -> Self {
        assert_eq!(a.prime(), QUAD_PRIME, "components must live over Q_5");
        assert_eq!(b.prime(), QUAD_PRIME, "components must live over Q_5");
        QuadExt { a, b }
    }

    pub fn zero(prec: usize) -> Self {
        QuadExt {
            a: PAdic::zero(QUAD_PRIME, prec),
            b: PAdic::zero(QUAD_PRIME, prec),
        }
    }

    pub fn one(prec: usize) -> Self {
        QuadExt {
            a: PAdic::one(QUAD_PRIME, prec),
            b: PAdic::zero(QUAD_PRIME, prec),
        }
    }

    pub fn sqrt2(prec: usize) -> Self {
        QuadExt {
            a: PAdic::zero(QUAD_PRIME, prec),
            b: PAdic::one(QUAD_PRIME, prec),
        }
    }

    pub fn from_rationals(a: &BigRational, b: &BigRational, prec: usize) -> Self {
        QuadExt {
            a: expand(a, QUAD_PRIME, prec),
            b: expand(b, QUAD_PRIME, prec),
        }
    }

    pub fn from_i64(a: i64, b: i64, prec: usize) -> Self {
        QuadExt {
            a: PAdic::from_i64(a, QUAD_PRIME, prec),
            b: PAdic::from_i64(b, QUAD_PRIME, prec),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The extended valuation logarithm `omega(a + sqrt(2) b) = min(nu a, nu b)`.
    pub fn omega(&self) -> Val {
        self.a.vlog().min(self.b.vlog())
    }

    /// Galois conjugation, `sqrt(2) -> -sqrt(2)`.
    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: self.b.neg(),
        }
    }

    /// Norm down to Q_5: `x * g(x) = a^2 - 2 b^2`.
    pub fn norm(&self) -> PAdic {
        let two = PAdic::from_i64(2, QUAD_PRIME, self.a.precision().max(self.b.precision()));
        self.a.mul(&self.a).sub(&two.mul(&self.b.mul(&self.b)))
    }

    /// The valuation via the norm route, `(1/2) nu(norm)`. Always equal to
    /// `omega`; the norm valuation is necessarily even.
    pub fn extend_valuation(&self) -> Val {
        match self.norm().vlog() {
            Val::Infinite => Val::Infinite,
            Val::Finite(v) => {
                debug_assert!(v % 2 == 0, "norm valuation must be even, got {v}");
                Val::Finite(v / 2)
            }
        }
    }

    pub fn add(&self, other: &QuadExt) -> QuadExt {
        QuadExt {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
        }
    }

    pub fn sub(&self, other: &QuadExt) -> QuadExt {
        QuadExt {
            a: self.a.sub(&other.a),
            b: self.b.sub(&other.b),
        }
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    pub fn mul(&self, other: &QuadExt) -> QuadExt {
        // (a + r b)(c + r d) = (ac + 2bd) + r (ad + bc), r^2 = 2.
        let prec = self.precision().max(other.precision());
        let two = PAdic::from_i64(2, QUAD_PRIME, prec);
        QuadExt {
            a: self.a.mul(&other.a).add(&two.mul(&self.b.mul(&other.b))),
            b: self.a.mul(&other.b).add(&self.b.mul(&other.a)),
        }
    }

    pub fn inv(&self) -> Result<QuadExt> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n_inv = self.norm().inv()?;
        let c = self.conj();
        Ok(QuadExt {
            a: c.a.mul(&n_inv),
            b: c.b.mul(&n_inv),
        })
    }

    /// Multiply by `5^k` (exact shift of both components).
    pub fn shift(&self, k: i64) -> QuadExt {
        QuadExt {
            a: self.a.shift(k),
            b: self.b.shift(k),
        }
    }

    pub fn scale(&self, c: &PAdic) -> QuadExt {
        QuadExt {
            a: self.a.mul(c),
            b: self.b.mul(c),
        }
    }

    pub fn pow(&self, mut e: u64) -> QuadExt {
        let prec = self.precision().max(1);
        let mut base = self.clone();
        let mut acc = QuadExt::one(prec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn precision(&self) -> usize {
        self.a.precision().min(self.b.precision())
    }

    /// Agreement on the joint known window of both components.
    pub fn eq_approx(&self, other: &QuadExt) -> bool {
        self.a.eq_approx(&other.a) && self.b.eq_approx(&other.b)
    }
}

/// Restriction of the conjugation to the unit ball.
pub fn tau1(x: &QuadExt) -> Result<QuadExt> {
    if x.omega() < Val::Finite(0) {
        return Err(Error::OutsideUnitBall);
    }
    Ok(x.conj())
}

/// The order-two self-map of the unit ball that swaps adjacent valuation
/// levels: `x -> 5x` when `omega(x)` is even, `x -> x/5` when odd, `0 -> 0`.
pub fn tau2(x: &QuadExt) -> Result<QuadExt> {
    match x.omega() {
        Val::Infinite => Ok(x.clone()),
        Val::Finite(w) if w >= 0 => Ok(if w % 2 == 0 { x.shift(1) } else { x.shift(-1) }),
        _ => Err(Error::OutsideUnitBall),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn omega_examples() {
        let sqrt2 = QuadExt::sqrt2(8);
        assert_eq!(sqrt2.omega(), Val::Finite(0));

        let x = QuadExt::from_i64(5, 25, 8);
        assert_eq!(x.omega(), Val::Finite(1));

        let y = QuadExt::from_i64(1, 1, 8);
        assert_eq!(y.omega(), Val::Finite(0));
        assert_eq!(y.extend_valuation(), Val::Finite(0));
    }

    #[test]
    fn norm_examples() {
        let sqrt2 = QuadExt::sqrt2(8);
        let minus_two = expand(&rat(-2, 1), 5, 8);
        assert_eq!(sqrt2.norm(), minus_two);

        let rational = QuadExt::from_rationals(&rat(7, 3), &rat(0, 1), 8);
        assert_eq!(rational.norm(), expand(&rat(49, 9), 5, 8));

        let x = QuadExt::from_i64(1, 1, 8);
        assert_eq!(x.norm(), expand(&rat(-1, 1), 5, 8));
    }

    #[test]
    fn extension_agrees_with_min_formula() {
        let sqrt2 = QuadExt::sqrt2(8);
        assert_eq!(sqrt2.extend_valuation(), Val::Finite(0));
        assert_eq!(QuadExt::zero(8).extend_valuation(), Val::Infinite);
        assert_eq!(QuadExt::zero(8).omega(), Val::Infinite);
    }

    #[test]
    fn conjugation_is_an_isometry_and_involution() {
        let x = QuadExt::from_rationals(&rat(7, 2), &rat(-3, 4), 12);
        assert_eq!(x.conj().omega(), x.omega());
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn field_inverse() {
        let x = QuadExt::from_i64(1, 1, 10);
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).eq_approx(&QuadExt::one(10)));
        assert!(QuadExt::zero(8).inv().is_err());
    }

    #[test]
    fn inverse_handles_mixed_component_valuations() {
        for (a, b) in [(rat(5, 1), rat(1, 5)), (rat(1, 25), rat(3, 1)), (rat(0, 1), rat(2, 5))] {
            let x = QuadExt::from_rationals(&a, &b, 14);
            let inv = x.inv().unwrap();
            assert!(x.mul(&inv).eq_approx(&QuadExt::one(14)));
            assert_eq!(
                inv.omega(),
                match x.omega() {
                    Val::Finite(v) => Val::Finite(-v),
                    Val::Infinite => Val::Infinite,
                }
            );
        }
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let sqrt2 = QuadExt::sqrt2(10);
        assert_eq!(sqrt2.mul(&sqrt2), QuadExt::from_i64(2, 0, 10));
    }

    #[test]
    fn tau2_shifts_valuation_parity() {
        let x = QuadExt::from_i64(1, 2, 8); // omega 0, even
        let t = tau2(&x).unwrap();
        assert_eq!(t.omega(), Val::Finite(1));
        let back = tau2(&t).unwrap();
        assert_eq!(back, x);

        assert!(tau2(&QuadExt::zero(8)).unwrap().is_zero());

        let outside = QuadExt::from_rationals(&rat(1, 5), &rat(0, 1), 8);
        assert!(matches!(tau2(&outside), Err(Error::OutsideUnitBall)));
    }

    #[test]
    fn tau1_restricts_to_unit_ball() {
        let x = QuadExt::from_i64(3, 4, 8);
        assert_eq!(tau1(&x).unwrap(), x.conj());
        let outside = QuadExt::from_rationals(&rat(1, 5), &rat(0, 1), 8);
        assert!(tau1(&outside).is_err());
    }
}
