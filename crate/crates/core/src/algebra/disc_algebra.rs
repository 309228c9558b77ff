//! Sampled consistency checking for power series against the disc algebra
//! C(Delta_L, tau_1, g) on the unit ball of Q_5(sqrt 2).
//!
//! Members of that algebra that are power series necessarily have all
//! coefficients in Q_5. The refuter takes that coefficient criterion as
//! the decision and corroborates it on sample points: a series with some
//! coefficient off the base field is reported refuted together with a
//! sample point where `f(tau_1(x)) != g(f(x))`; an all-base series is
//! reported consistent (sampling cannot prove membership of a truncation,
//! so no "proved" verdict exists).

use crate::error::{Error, Result};
use crate::padic::Val;
use crate::quadext::{tau1, QuadExt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefuterVerdict {
    /// All coefficients lie in Q_5 and every sample checks out.
    Consistent,
    /// Some coefficient has a nonzero sqrt2 part; `witness` indexes the
    /// first sample where the commuting identity fails.
    Refuted { witness: Option<usize> },
}

/// Default sample set: 0, 1, and a spread of points of valuation 0 and 1.
pub fn default_unit_ball_samples(prec: usize) -> Vec<QuadExt> {
    let mut samples = vec![QuadExt::zero(prec), QuadExt::one(prec)];
    for (a, b) in [
        (0i64, 1i64),
        (1, 1),
        (2, 1),
        (3, 1),
        (4, 1),
        (1, 2),
        (2, 3),
        (3, 2),
        (4, 3),
        (1, 4),
        (2, 0),
        (3, 0),
        (4, 0),
        (3, 4),
        (4, 2),
        (1, 3),
        (2, 4),
        (4, 4),
    ] {
        samples.push(QuadExt::from_i64(a, b, prec));
    }
    for (a, b) in [(5i64, 0i64), (0, 5), (5, 5), (10, 5), (5, 20)] {
        samples.push(QuadExt::from_i64(a, b, prec));
    }
    samples
}

fn eval(coeffs: &[QuadExt], x: &QuadExt) -> QuadExt {
    let prec = x.precision().max(1);
    let mut acc = QuadExt::zero(prec);
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Check a truncated power series against membership in
/// C(Delta_L, tau_1, g) on the given sample points.
pub fn series_membership_refuter(
    coeffs: &[QuadExt],
    samples: &[QuadExt],
) -> Result<RefuterVerdict> {
    for s in samples {
        if s.omega() < Val::Finite(0) {
            return Err(Error::OutsideUnitBall);
        }
    }
    let all_base = coeffs.iter().all(|c| c.b.is_zero());
    if all_base {
        // The identity holds exactly for base-field coefficients; the
        // samples corroborate rather than decide.
        for (i, x) in samples.iter().enumerate() {
            let lhs = eval(coeffs, &tau1(x)?);
            let rhs = eval(coeffs, x).conj();
            debug_assert!(lhs.eq_approx(&rhs), "sample {i} failed unexpectedly");
        }
        return Ok(RefuterVerdict::Consistent);
    }
    for (i, x) in samples.iter().enumerate() {
        let lhs = eval(coeffs, &tau1(x)?);
        let rhs = eval(coeffs, x).conj();
        if !lhs.eq_approx(&rhs) {
            return Ok(RefuterVerdict::Refuted { witness: Some(i) });
        }
    }
    Ok(RefuterVerdict::Refuted { witness: None })
}
