//! High-precision decimal plane primitives for the classicalisation engine.
//!
//! Numbers are arbitrary-precision decimals at a configurable working
//! precision P (default 50 significant digits) with predicate tolerance
//! `eps = 10^-(P-10)`. Additions and multiplications are exact; square
//! roots and divisions round at the working precision, so every predicate
//! that can be phrased with squared distances is, leaving the tolerance
//! exposure to the combine/shrink constructions only.

use std::num::NonZeroU64;
use std::str::FromStr;

use bigdecimal::{num_bigint::BigInt, BigDecimal, Context, RoundingMode};

use crate::error::{Error, Result};

pub const DEFAULT_GEO_PRECISION: u64 = 50;

/// Working precision and derived tolerance for geometric predicates.
#[derive(Clone, Debug)]
pub struct GeoCtx {
    precision: u64,
    eps: BigDecimal,
    ctx: Context,
}

impl GeoCtx {
    pub fn new(precision: u64) -> Result<Self> {
        if precision < 8 {
            return Err(Error::invalid("geometric precision must be at least 8"));
        }
        let eps = BigDecimal::new(BigInt::from(1), precision as i64 - 10);
        let ctx = Context::new(
            NonZeroU64::new(precision + 10).unwrap(),
            RoundingMode::HalfEven,
        );
        Ok(GeoCtx {
            precision,
            eps,
            ctx,
        })
    }

    pub fn precision(&self) -> u64 {
        self.precision
    }

    /// Predicate tolerance `10^-(P-10)`.
    pub fn eps(&self) -> &BigDecimal {
        &self.eps
    }

    pub fn sqrt(&self, x: &BigDecimal) -> BigDecimal {
        x.sqrt_with_context(&self.ctx)
            .expect("sqrt of nonnegative value")
    }

    pub fn div(&self, num: &BigDecimal, den: &BigDecimal) -> BigDecimal {
        let quotient = num / den;
        quotient.with_precision_round(
            NonZeroU64::new(self.precision + 10).unwrap(),
            RoundingMode::HalfEven,
        )
    }

    /// Round to the working precision (used when storing derived radii).
    pub fn round(&self, x: &BigDecimal) -> BigDecimal {
        x.with_precision_round(
            NonZeroU64::new(self.precision).unwrap(),
            RoundingMode::HalfEven,
        )
    }
}

impl Default for GeoCtx {
    fn default() -> Self {
        GeoCtx::new(DEFAULT_GEO_PRECISION).unwrap()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub x: BigDecimal,
    pub y: BigDecimal,
}

impl Point {
    pub fn new(x: BigDecimal, y: BigDecimal) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point {
            x: BigDecimal::from(0),
            y: BigDecimal::from(0),
        }
    }

    /// Exact squared distance.
    pub fn dist2(&self, other: &Point) -> BigDecimal {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }

    pub fn dist(&self, other: &Point, ctx: &GeoCtx) -> BigDecimal {
        ctx.sqrt(&self.dist2(other))
    }
}

/// Open or closed disc with strictly positive radius.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Disc {
    pub center: Point,
    pub radius: BigDecimal,
    pub kind: DiscKind,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiscKind {
    Open,
    Closed,
}

impl Disc {
    pub fn new(center: Point, radius: BigDecimal, kind: DiscKind) -> Result<Self> {
        if radius <= BigDecimal::from(0) {
            return Err(Error::invalid("disc radius must be strictly positive"));
        }
        Ok(Disc {
            center,
            radius,
            kind,
        })
    }

    pub fn open(center: Point, radius: BigDecimal) -> Result<Self> {
        Disc::new(center, radius, DiscKind::Open)
    }

    pub fn closed(center: Point, radius: BigDecimal) -> Result<Self> {
        Disc::new(center, radius, DiscKind::Closed)
    }
}

/// `d <= bound` compared as `d^2 <= bound^2` (false when `bound < 0`);
/// both sides exact.
pub fn dist_le(a: &Point, b: &Point, bound: &BigDecimal) -> bool {
    if *bound < BigDecimal::from(0) {
        return false;
    }
    a.dist2(b) <= bound * bound
}

/// `d >= bound` via squared comparison (trivially true when `bound <= 0`).
pub fn dist_ge(a: &Point, b: &Point, bound: &BigDecimal) -> bool {
    if *bound <= BigDecimal::from(0) {
        return true;
    }
    a.dist2(b) >= bound * bound
}

/// Closure of `inner` contained in closure of `outer` with slack `eps`:
/// `d + r_in <= r_out + eps`.
pub fn disc_within(inner: &Disc, outer: &Disc, eps: &BigDecimal) -> bool {
    let bound = &outer.radius + eps - &inner.radius;
    dist_le(&inner.center, &outer.center, &bound)
}

/// Closures disjoint with slack `eps`: `d >= r1 + r2 - eps`.
pub fn discs_apart(a: &Disc, b: &Disc, eps: &BigDecimal) -> bool {
    let bound = &a.radius + &b.radius - eps;
    dist_ge(&a.center, &b.center, &bound)
}

/// Parse a decimal-string coordinate (also accepts plain JSON numbers
/// printed as decimal strings upstream).
pub fn parse_decimal(s: &str, path: &str) -> Result<BigDecimal> {
    BigDecimal::from_str(s).map_err(|e| Error::invalid_at(path, format!("bad decimal: {e}")))
}

/// Fixed-point rendering with exactly `digits` fractional digits (display
/// rounding only; used by the SVG emitter for deterministic output).
pub fn plain_fixed(x: &BigDecimal, digits: i64) -> String {
    let rounded = x.with_scale_round(digits, RoundingMode::HalfEven);
    rounded.to_plain_string()
}

/// `count` unit directions spread around the circle via the tangent
/// half-angle map (rational parameter, so the directions are computed at
/// working precision without trigonometry). Includes (-1, 0).
pub fn circle_directions(count: usize, ctx: &GeoCtx) -> Vec<(BigDecimal, BigDecimal)> {
    let mut out = Vec::with_capacity(count);
    out.push((BigDecimal::from(-1), BigDecimal::from(0)));
    let n = count.saturating_sub(1).max(1);
    for i in 0..count - 1 {
        // t sweeps (-8, 8); direction ((1-t^2)/(1+t^2), 2t/(1+t^2)).
        let t = BigDecimal::from_str(&format!("{:.9}", -8.0 + 16.0 * (i as f64) / (n as f64)))
            .unwrap();
        let t2 = &t * &t;
        let denom = &t2 + 1u8;
        let ux = ctx.div(&(BigDecimal::from(1) - &t2), &denom);
        let uy = ctx.div(&(&t * 2u8), &denom);
        out.push((ux, uy));
    }
    out
}

/// The boundary point of a disc in the given unit direction.
pub fn boundary_point(disc: &Disc, dir: &(BigDecimal, BigDecimal)) -> Point {
    Point::new(
        &disc.center.x + &disc.radius * &dir.0,
        &disc.center.y + &disc.radius * &dir.1,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> BigDecimal {
        BigDecimal::from_str(s).unwrap()
    }

    #[test]
    fn squared_predicates_are_exact_at_tangency() {
        let a = Point::new(d("0"), d("0"));
        let b = Point::new(d("2"), d("0"));
        assert!(dist_le(&a, &b, &d("2")));
        assert!(dist_ge(&a, &b, &d("2")));
        assert!(!dist_le(&a, &b, &d("1.9999999999999999999999999")));
    }

    #[test]
    fn sqrt_has_working_precision() {
        let ctx = GeoCtx::default();
        let two = d("2");
        let r = ctx.sqrt(&two);
        let err = (&r * &r - &two).abs();
        assert!(err < *ctx.eps());
    }

    #[test]
    fn disc_requires_positive_radius() {
        assert!(Disc::open(Point::origin(), d("0")).is_err());
        assert!(Disc::open(Point::origin(), d("-1")).is_err());
    }

    #[test]
    fn containment_with_slack() {
        let ctx = GeoCtx::default();
        let big = Disc::closed(Point::origin(), d("2")).unwrap();
        let small = Disc::open(Point::new(d("1"), d("0")), d("1")).unwrap();
        assert!(disc_within(&small, &big, ctx.eps()));
        let poking = Disc::open(Point::new(d("1.5"), d("0")), d("1")).unwrap();
        assert!(!disc_within(&poking, &big, ctx.eps()));
    }

    #[test]
    fn precision_floor() {
        assert!(GeoCtx::new(7).is_err());
        assert!(GeoCtx::new(8).is_ok());
    }
}
