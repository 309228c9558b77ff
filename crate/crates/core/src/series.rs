//! Radius of convergence estimation for power series over a p-adic field.
//!
//! For a series with coefficients `a_n` the radius is
//! `rho = 1 / limsup |a_n|^(1/n) = p^(liminf nu(a_n)/n)`. A finite
//! coefficient-valuation table cannot take the limit, so the estimator
//! reports the infimum of `nu(a_n)/n` over the tail window `[N/2, N]`,
//! together with the exact value whenever the valuations are eventually
//! affine in `n`.

use crate::error::{Error, Result};
use crate::padic::Val;

/// Coefficient valuations `n -> nu(a_n)` available up to a truncation bound.
#[derive(Clone, Debug)]
pub struct SeriesSpec {
    prime: u32,
    /// `vals[n] = nu(a_n)` for `n = 0..=bound`.
    vals: Vec<Val>,
}

impl SeriesSpec {
    /// Requires at least 8 coefficients beyond the constant term.
    pub fn new(prime: u32, vals: Vec<Val>) -> Result<Self> {
        if vals.len() < 9 {
            return Err(Error::invalid("truncation bound must be at least 8"));
        }
        Ok(SeriesSpec { prime, vals })
    }

    pub fn from_fn(prime: u32, bound: usize, f: impl Fn(usize) -> Val) -> Result<Self> {
        Self::new(prime, (0..=bound).map(f).collect())
    }

    /// Valuations of `a_n = 1/n!`, via direct prime-power counting
    /// `nu_p(n!) = sum_i floor(n / p^i)`.
    pub fn factorial(prime: u32, bound: usize) -> Result<Self> {
        Self::from_fn(prime, bound, |n| {
            Val::Finite(-(factorial_valuation(n as u64, prime as u64) as i64))
        })
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn bound(&self) -> usize {
        self.vals.len() - 1
    }
}

/// `nu_p(n!)` by de Polignac's formula.
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = p;
    while q <= n {
        total += n / q;
        match q.checked_mul(p) {
            Some(next) => q = next,
            None => break,
        }
    }
    total
}

/// Result of the radius estimator, in log-base-p form and as a real number.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiusEstimate {
    /// Tail-window estimate of `liminf nu(a_n)/n`; `rho ~ p^log_p`.
    pub log_p: f64,
    pub radius: f64,
    /// Slope `alpha` when `nu(a_n) = alpha*n + beta` over the last half of
    /// the table; the exact radius is then `p^alpha`.
    pub exact_log_p: Option<i64>,
    pub exact_radius: Option<f64>,
}

/// Estimate the radius of convergence from the coefficient-valuation table.
pub fn radius_of_convergence(spec: &SeriesSpec) -> RadiusEstimate {
    let n = spec.bound();
    let window_start = (n / 2).max(1);
    let mut log_p = f64::INFINITY;
    for i in window_start..=n {
        if let Val::Finite(v) = spec.vals[i] {
            log_p = log_p.min(v as f64 / i as f64);
        }
    }
    let p = spec.prime as f64;
    let radius = if log_p.is_infinite() {
        f64::INFINITY
    } else {
        p.powf(log_p)
    };
    let exact_log_p = detect_affine(&spec.vals[window_start..=n]);
    let exact_radius = exact_log_p.map(|a| p.powi(a as i32));
    RadiusEstimate {
        log_p,
        radius,
        exact_log_p,
        exact_radius,
    }
}

/// Detect `nu(a_n) = alpha*n + beta` over a window of consecutive indices.
/// Integer-valued affine data on consecutive integers forces an integer slope.
fn detect_affine(window: &[Val]) -> Option<i64> {
    if window.len() < 2 {
        return None;
    }
    let finite: Option<Vec<i64>> = window.iter().map(|v| v.finite()).collect();
    let vals = finite?;
    let alpha = vals[1] - vals[0];
    for w in vals.windows(2) {
        if w[1] - w[0] != alpha {
            return None;
        }
    }
    Some(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_unit_coefficients_give_radius_one() {
        let s = SeriesSpec::from_fn(5, 64, |_| Val::Finite(0)).unwrap();
        let est = radius_of_convergence(&s);
        assert_eq!(est.radius, 1.0);
        assert_eq!(est.exact_log_p, Some(0));
        assert_eq!(est.exact_radius, Some(1.0));
    }

    #[test]
    fn growing_coefficients_give_radius_one_over_p() {
        // nu(a_n) = -n, i.e. |a_n| = p^n; oracle: limsup p^(n/n) = p.
        let s = SeriesSpec::from_fn(5, 64, |n| Val::Finite(-(n as i64))).unwrap();
        let est = radius_of_convergence(&s);
        assert!((est.radius - 0.2).abs() < 1e-12);
        assert_eq!(est.exact_log_p, Some(-1));
    }

    #[test]
    fn factorial_series_approaches_five_to_minus_quarter() {
        let s = SeriesSpec::factorial(5, 10_000).unwrap();
        let est = radius_of_convergence(&s);
        let target = 5f64.powf(-0.25);
        assert!(
            (est.radius - target).abs() < 1e-3,
            "estimate {} target {}",
            est.radius,
            target
        );
        // Factorial valuations are not affine.
        assert_eq!(est.exact_log_p, None);
    }

    #[test]
    fn legendre_oracle_matches_direct_counting() {
        // nu_5(n!) = (n - digit_sum_5(n)) / 4 must agree with de Polignac.
        for n in 0..5000u64 {
            let mut s = 0;
            let mut m = n;
            while m > 0 {
                s += m % 5;
                m /= 5;
            }
            assert_eq!(factorial_valuation(n, 5), (n - s) / 4, "n = {n}");
        }
    }

    #[test]
    fn truncation_bound_floor_enforced() {
        assert!(SeriesSpec::new(5, vec![Val::Finite(0); 5]).is_err());
    }

    #[test]
    fn all_zero_tail_means_polynomial() {
        let s = SeriesSpec::from_fn(5, 16, |n| {
            if n < 3 {
                Val::Finite(0)
            } else {
                Val::Infinite
            }
        })
        .unwrap();
        let est = radius_of_convergence(&s);
        assert!(est.radius.is_infinite());
    }
}
