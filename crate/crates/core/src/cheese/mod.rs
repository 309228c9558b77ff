//! Swiss cheeses: a closed outer disc minus finitely many open holes,
//! the delta bookkeeping, the classicality predicate, and the step-map
//! engine that rewrites a cheese into classical form.

mod assign;
mod svg;

pub use assign::{
    classicalise, combine_discs, delta, min_collision, shrink_outer, step, verify_certificate,
    Certificate, ClassicalisationResult, DiscAssignment, DiscParams, StepRecord,
};
pub use svg::render_before_after;

use bigdecimal::BigDecimal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geo::{parse_decimal, Disc, DiscKind, GeoCtx, Point};

/// A closed disc with finitely many open holes.
#[derive(Clone, PartialEq, Debug)]
pub struct SwissCheese {
    pub outer: Disc,
    pub holes: Vec<Disc>,
}

impl SwissCheese {
    pub fn new(outer: Disc, holes: Vec<Disc>) -> Result<Self> {
        if outer.kind != DiscKind::Closed {
            return Err(Error::invalid("outer disc must be closed"));
        }
        if let Some(i) = holes.iter().position(|h| h.kind != DiscKind::Open) {
            return Err(Error::invalid_at(
                format!("/holes/{i}"),
                "holes must be open discs",
            ));
        }
        Ok(SwissCheese { outer, holes })
    }

    /// `delta = r(outer) - sum of hole radii`.
    pub fn delta(&self) -> BigDecimal {
        let mut d = self.outer.radius.clone();
        for h in &self.holes {
            d -= &h.radius;
        }
        d
    }

    /// Classical with margin: every pair of hole closures at distance
    /// more than `eps` beyond tangency, and every hole closure inside the
    /// open outer disc with margin more than `eps`. Returns the first
    /// violating pair in assignment indexing (0 = outer boundary region).
    pub fn is_classical(&self, ctx: &GeoCtx) -> (bool, Option<(usize, usize)>) {
        let eps = ctx.eps();
        for (i, h) in self.holes.iter().enumerate() {
            if hole_hits_boundary(&self.outer, h, eps) {
                return (false, Some((0, i + 1)));
            }
        }
        for i in 0..self.holes.len() {
            for j in (i + 1)..self.holes.len() {
                if holes_collide(&self.holes[i], &self.holes[j], eps) {
                    return (false, Some((i + 1, j + 1)));
                }
            }
        }
        (true, None)
    }
}

// JSON: {"outer":{"c":["0","0"],"r":"1"},"holes":[{"c":["0.3","0"],"r":"0.1"}]}
// Numerics are decimal strings; plain JSON numbers are accepted on input.

#[derive(Serialize, Deserialize)]
struct DiscRepr {
    c: [serde_json::Value; 2],
    r: serde_json::Value,
}

#[derive(Serialize, Deserialize)]
struct CheeseRepr {
    outer: DiscRepr,
    holes: Vec<DiscRepr>,
}

fn decimal_to_json(x: &BigDecimal) -> serde_json::Value {
    serde_json::Value::String(x.normalized().to_plain_string())
}

fn decimal_from_json(v: &serde_json::Value, path: &str) -> Result<BigDecimal> {
    match v {
        serde_json::Value::String(s) => parse_decimal(s, path),
        serde_json::Value::Number(n) => parse_decimal(&n.to_string(), path),
        _ => Err(Error::invalid_at(path, "expected a decimal string")),
    }
}

fn disc_repr(d: &Disc) -> DiscRepr {
    DiscRepr {
        c: [
            decimal_to_json(&d.center.x),
            decimal_to_json(&d.center.y),
        ],
        r: decimal_to_json(&d.radius),
    }
}

fn disc_from_repr(repr: &DiscRepr, kind: DiscKind, path: &str) -> Result<Disc> {
    let x = decimal_from_json(&repr.c[0], &format!("{path}/c/0"))?;
    let y = decimal_from_json(&repr.c[1], &format!("{path}/c/1"))?;
    let r = decimal_from_json(&repr.r, &format!("{path}/r"))?;
    Disc::new(Point::new(x, y), r, kind)
        .map_err(|_| Error::invalid_at(format!("{path}/r"), "radius must be positive"))
}

impl Serialize for SwissCheese {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CheeseRepr {
            outer: disc_repr(&self.outer),
            holes: self.holes.iter().map(disc_repr).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SwissCheese {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let repr = CheeseRepr::deserialize(d)?;
        let outer =
            disc_from_repr(&repr.outer, DiscKind::Closed, "/outer").map_err(D::Error::custom)?;
        let holes = repr
            .holes
            .iter()
            .enumerate()
            .map(|(i, h)| disc_from_repr(h, DiscKind::Open, &format!("/holes/{i}")))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        SwissCheese::new(outer, holes).map_err(D::Error::custom)
    }
}

/// Hole-closure collision test shared by the step map and the classicality
/// predicate: tangency within eps counts as a collision (`d <= r1 + r2 + eps`).
pub(crate) fn holes_collide(a: &Disc, b: &Disc, eps: &BigDecimal) -> bool {
    let bound = &a.radius + &b.radius + eps;
    crate::geo::dist_le(&a.center, &b.center, &bound)
}

/// Collision of a hole closure with the complement of the open outer disc:
/// the hole fails to sit inside with margin (`d > R - r - eps`, or no room).
pub(crate) fn hole_hits_boundary(outer: &Disc, hole: &Disc, eps: &BigDecimal) -> bool {
    let bound = &outer.radius - &hole.radius - eps;
    bound < BigDecimal::from(0) || !crate::geo::dist_le(&hole.center, &outer.center, &bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    pub(crate) fn d(s: &str) -> BigDecimal {
        BigDecimal::from_str(s).unwrap()
    }

    pub(crate) fn od(x: &str, y: &str, r: &str) -> Disc {
        Disc::open(Point::new(d(x), d(y)), d(r)).unwrap()
    }

    pub(crate) fn cheese(outer_r: &str, holes: Vec<Disc>) -> SwissCheese {
        SwissCheese::new(
            Disc::closed(Point::origin(), d(outer_r)).unwrap(),
            holes,
        )
        .unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(cheese("1", vec![]).delta(), d("1"));
        let c = cheese("1", vec![od("0.3", "0", "0.25"), od("-0.3", "0", "0.25")]);
        assert_eq!(c.delta(), d("0.5"));
    }

    #[test]
    fn classicality_examples() {
        let ctx = GeoCtx::default();
        // Tangent holes: closures meet.
        let tangent = cheese("1", vec![od("-0.2", "0", "0.2"), od("0.2", "0", "0.2")]);
        let (ok, pair) = tangent.is_classical(&ctx);
        assert!(!ok);
        assert_eq!(pair, Some((1, 2)));

        let fine = cheese("1", vec![od("-0.4", "0", "0.2"), od("0.4", "0", "0.2")]);
        assert!(fine.is_classical(&ctx).0);

        // Hole crossing the outer boundary.
        let crossing = cheese("1", vec![od("0.9", "0", "0.2")]);
        let (ok, pair) = crossing.is_classical(&ctx);
        assert!(!ok);
        assert_eq!(pair, Some((0, 1)));
    }

    #[test]
    fn json_round_trip_uses_decimal_strings() {
        let c = cheese("1", vec![od("0.3", "0", "0.1")]);
        let js = serde_json::to_string(&c).unwrap();
        assert!(js.contains(r#""r":"0.1""#));
        let back: SwissCheese = serde_json::from_str(&js).unwrap();
        assert_eq!(back, c);

        // Plain numbers accepted on input.
        let lenient: SwissCheese = serde_json::from_str(
            r#"{"outer":{"c":[0,0],"r":1},"holes":[{"c":[0.3,0],"r":0.1}]}"#,
        )
        .unwrap();
        assert_eq!(lenient, c);
    }

    #[test]
    fn schema_errors_carry_paths() {
        let bad = r#"{"outer":{"c":["0","0"],"r":"0"},"holes":[]}"#;
        let err = serde_json::from_str::<SwissCheese>(bad).unwrap_err();
        assert!(err.to_string().contains("/outer/r"), "{err}");
    }
}
