//! The step map on disc assignment functions and its finite driver.
//!
//! An assignment keeps the outer disc at index 0 (standing for the
//! complement region) and the holes at indices 1..=n. Each non-classical
//! step locates the lexicographically least colliding index pair (n, m),
//! removes index m, and either merges two holes into their smallest
//! enclosing disc or shrinks the outer disc away from a boundary-crossing
//! hole. Delta never drops by more than the rounding slack of one
//! enclosing-disc construction, and the index set strictly shrinks, so a
//! cheese with k holes classicalises in at most k steps. Every step logs
//! full disc parameters so the emitted certificate can be re-checked with
//! plain disc-in-disc inequalities, independent of this engine.

use std::collections::BTreeMap;

use bigdecimal::BigDecimal;
use serde::{Deserialize, Serialize};

use super::{hole_hits_boundary, holes_collide, SwissCheese};
use crate::error::{Error, Result};
use crate::geo::{disc_within, dist_ge, Disc, GeoCtx, Point};

/// A disc assignment function: entry 0 is the complement of the closed
/// outer disc, entries >= 1 are open holes. Indices never get reused.
#[derive(Clone, Debug)]
pub struct DiscAssignment {
    pub outer: Disc,
    pub holes: BTreeMap<usize, Disc>,
}

impl DiscAssignment {
    pub fn from_cheese(cheese: &SwissCheese) -> Self {
        DiscAssignment {
            outer: cheese.outer.clone(),
            holes: cheese
                .holes
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, h)| (i + 1, h))
                .collect(),
        }
    }

    pub fn to_cheese(&self) -> SwissCheese {
        SwissCheese {
            outer: self.outer.clone(),
            holes: self.holes.values().cloned().collect(),
        }
    }

    pub fn delta(&self) -> BigDecimal {
        let mut d = self.outer.radius.clone();
        for h in self.holes.values() {
            d -= &h.radius;
        }
        d
    }
}

/// Delta of a disc assignment function (outer radius minus hole radii).
pub fn delta(h: &DiscAssignment) -> BigDecimal {
    h.delta()
}

/// The lexicographically least pair `(n, m)` of colliding region closures,
/// reported with `n < m`; `None` exactly when the assignment is classical.
pub fn min_collision(h: &DiscAssignment, ctx: &GeoCtx) -> Option<(usize, usize)> {
    let eps = ctx.eps();
    let indices: Vec<usize> = std::iter::once(0).chain(h.holes.keys().copied()).collect();
    for (a, &i) in indices.iter().enumerate() {
        for &j in &indices[a + 1..] {
            let collide = if i == 0 {
                hole_hits_boundary(&h.outer, &h.holes[&j], eps)
            } else {
                holes_collide(&h.holes[&i], &h.holes[&j], eps)
            };
            if collide {
                return Some((i, j));
            }
        }
    }
    None
}

/// Smallest disc containing two open discs with intersecting closures;
/// its radius is at most `r1 + r2` (plus rounding slack).
pub fn combine_discs(d1: &Disc, d2: &Disc, ctx: &GeoCtx) -> Result<Disc> {
    let sum = &d1.radius + &d2.radius;
    if !crate::geo::dist_le(&d1.center, &d2.center, &(&sum + ctx.eps())) {
        return Err(Error::Precondition(
            "combine requires intersecting closures".into(),
        ));
    }
    // Containment (covers the concentric case, which has no direction).
    if disc_within(d1, d2, ctx.eps()) {
        return Ok(d2.clone());
    }
    if disc_within(d2, d1, ctx.eps()) {
        return Ok(d1.clone());
    }
    let d = d1.center.dist(&d2.center, ctx);
    let radius = ctx.round(&((&sum + &d) / 2u8));
    let scale = ctx.div(&(&radius - &d1.radius), &d);
    let center = Point::new(
        ctx.round(&(&d1.center.x + (&d2.center.x - &d1.center.x) * &scale)),
        ctx.round(&(&d1.center.y + (&d2.center.y - &d1.center.y) * &scale)),
    );
    let merged = Disc::open(center, radius)?;
    // Post-conditions of the enclosing-disc lemma, re-checked numerically.
    let slack = &(ctx.eps() * 4u8);
    if !disc_within(d1, &merged, slack) || !disc_within(d2, &merged, slack) {
        return Err(Error::Precondition(
            "combined disc fails to contain its inputs".into(),
        ));
    }
    if merged.radius > &sum + slack {
        return Err(Error::Precondition("combined disc too large".into()));
    }
    Ok(merged)
}

/// Closed disc inside `outer`, disjoint from the hole, with radius at
/// least `R - r` (minus rounding slack). The hole must reach the boundary
/// (`closure(hole)` not inside the open outer disc) without swallowing
/// the outer disc.
pub fn shrink_outer(outer: &Disc, hole: &Disc, ctx: &GeoCtx) -> Result<Disc> {
    let eps = ctx.eps();
    if disc_within(hole, outer, &-eps.clone()) {
        return Err(Error::Precondition(
            "shrink requires the hole to reach the outer boundary".into(),
        ));
    }
    if disc_within(outer, hole, eps) {
        return Err(Error::Precondition(
            "shrink requires the outer disc to escape the hole".into(),
        ));
    }
    // Hole entirely outside: nothing to cut away.
    if dist_ge(
        &outer.center,
        &hole.center,
        &(&outer.radius + &hole.radius),
    ) {
        return Ok(outer.clone());
    }
    let d = outer.center.dist(&hole.center, ctx);
    if d == BigDecimal::from(0) {
        // Concentric with both hypotheses satisfied cannot happen.
        return Err(Error::Precondition(
            "degenerate concentric configuration".into(),
        ));
    }
    let radius = ctx.round(&((&outer.radius + &d - &hole.radius) / 2u8));
    if radius <= BigDecimal::from(0) {
        return Err(Error::Precondition("shrunk disc would vanish".into()));
    }
    let shift = ctx.div(&(&outer.radius - &radius), &d);
    let center = Point::new(
        ctx.round(&(&outer.center.x + (&outer.center.x - &hole.center.x) * &shift)),
        ctx.round(&(&outer.center.y + (&outer.center.y - &hole.center.y) * &shift)),
    );
    let shrunk = Disc::closed(center, radius)?;
    let slack = &(eps * 4u8);
    if !disc_within(&shrunk, outer, slack) {
        return Err(Error::Precondition("shrunk disc left the outer disc".into()));
    }
    if !crate::geo::dist_ge(
        &shrunk.center,
        &hole.center,
        &(&shrunk.radius + &hole.radius - slack),
    ) {
        return Err(Error::Precondition("shrunk disc still meets the hole".into()));
    }
    Ok(shrunk)
}

/// One application of the step map, with the record of what changed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub enum StepRecord {
    /// Holes `n` and `m` merged into the recorded disc at index `n`.
    MergeHoles {
        n: usize,
        m: usize,
        first: DiscParams,
        second: DiscParams,
        merged: DiscParams,
    },
    /// Hole `m` absorbed into the boundary region; outer disc shrunk.
    ShrinkOuter {
        m: usize,
        hole: DiscParams,
        outer_before: DiscParams,
        outer_after: DiscParams,
    },
}

/// Disc parameters frozen into certificates (decimal strings).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscParams {
    pub cx: String,
    pub cy: String,
    pub r: String,
}

impl DiscParams {
    pub fn of(d: &Disc) -> Self {
        DiscParams {
            cx: d.center.x.normalized().to_plain_string(),
            cy: d.center.y.normalized().to_plain_string(),
            r: d.radius.normalized().to_plain_string(),
        }
    }

    pub fn to_disc(&self, kind: crate::geo::DiscKind) -> Result<Disc> {
        Disc::new(
            Point::new(
                crate::geo::parse_decimal(&self.cx, "cx")?,
                crate::geo::parse_decimal(&self.cy, "cy")?,
            ),
            crate::geo::parse_decimal(&self.r, "r")?,
            kind,
        )
    }
}

/// Apply the step map once. Classical input comes back unchanged with no
/// record; otherwise index `m` of the least collision `(n, m)` is removed.
pub fn step(h: &DiscAssignment, ctx: &GeoCtx) -> Result<(DiscAssignment, Option<StepRecord>)> {
    if h.delta() <= BigDecimal::from(0) {
        return Err(Error::DeltaNotPositive);
    }
    let Some((n, m)) = min_collision(h, ctx) else {
        return Ok((h.clone(), None));
    };
    debug_assert!(m > n, "minimum collision must have m > n");
    let mut next = h.clone();
    let removed = next.holes.remove(&m).expect("collision index exists");
    let record = if n == 0 {
        let outer_after = shrink_outer(&h.outer, &removed, ctx)?;
        let record = StepRecord::ShrinkOuter {
            m,
            hole: DiscParams::of(&removed),
            outer_before: DiscParams::of(&h.outer),
            outer_after: DiscParams::of(&outer_after),
        };
        next.outer = outer_after;
        record
    } else {
        let first = next.holes[&n].clone();
        let merged = combine_discs(&first, &removed, ctx)?;
        let record = StepRecord::MergeHoles {
            n,
            m,
            first: DiscParams::of(&first),
            second: DiscParams::of(&removed),
            merged: DiscParams::of(&merged),
        };
        next.holes.insert(n, merged);
        record
    };
    Ok((next, Some(record)))
}

/// Containment certificate for a classicalisation run.
///
/// `final_of` sends every original index (0 for the boundary region,
/// 1..=k for holes) to the index of the final region containing it; the
/// final regions are stored by index so verification needs nothing from
/// the engine.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub steps: Vec<StepRecord>,
    pub final_of: BTreeMap<usize, usize>,
    pub final_outer: DiscParams,
    pub final_holes: BTreeMap<usize, DiscParams>,
}

#[derive(Clone, Debug)]
pub struct ClassicalisationResult {
    pub cheese: SwissCheese,
    pub certificate: Certificate,
    pub steps: usize,
}

/// Drive the step map to a classical cheese. Requires `delta > 0`;
/// terminates in at most (hole count) steps.
pub fn classicalise(cheese: &SwissCheese, ctx: &GeoCtx) -> Result<ClassicalisationResult> {
    if cheese.delta() <= BigDecimal::from(0) {
        return Err(Error::DeltaNotPositive);
    }
    let mut h = DiscAssignment::from_cheese(cheese);
    let mut records = Vec::new();
    let mut final_of: BTreeMap<usize, usize> = (0..=cheese.holes.len()).map(|i| (i, i)).collect();
    loop {
        let (next, record) = step(&h, ctx)?;
        let Some(record) = record else { break };
        let (absorbed, into) = match &record {
            StepRecord::MergeHoles { n, m, .. } => (*m, *n),
            StepRecord::ShrinkOuter { m, .. } => (*m, 0),
        };
        for target in final_of.values_mut() {
            if *target == absorbed {
                *target = into;
            }
        }
        records.push(record);
        h = next;
        debug_assert!(records.len() <= cheese.holes.len());
    }
    let certificate = Certificate {
        steps: records.clone(),
        final_of,
        final_outer: DiscParams::of(&h.outer),
        final_holes: h
            .holes
            .iter()
            .map(|(&i, d)| (i, DiscParams::of(d)))
            .collect(),
    };
    Ok(ClassicalisationResult {
        cheese: h.to_cheese(),
        certificate,
        steps: records.len(),
    })
}

/// Re-check a certificate against the original and final cheeses using
/// only disc-in-disc inequalities.
pub fn verify_certificate(
    cert: &Certificate,
    before: &SwissCheese,
    after: &SwissCheese,
    ctx: &GeoCtx,
) -> bool {
    verify_certificate_impl(cert, before, after, ctx).is_ok()
}

fn verify_certificate_impl(
    cert: &Certificate,
    before: &SwissCheese,
    after: &SwissCheese,
    ctx: &GeoCtx,
) -> Result<()> {
    use crate::geo::DiscKind;
    let eps = ctx.eps();
    let slack = &(eps * 8u8);
    let fail = |msg: &str| Err(Error::Precondition(msg.into()));

    // The recorded final snapshot must coincide with the delivered cheese.
    let final_outer = cert.final_outer.to_disc(DiscKind::Closed)?;
    if final_outer != after.outer {
        return fail("final outer mismatch");
    }
    let final_holes: Vec<&DiscParams> = cert.final_holes.values().collect();
    if final_holes.len() != after.holes.len() {
        return fail("final hole count mismatch");
    }
    for (params, disc) in final_holes.iter().zip(&after.holes) {
        if params.to_disc(DiscKind::Open)? != *disc {
            return fail("final hole mismatch");
        }
    }

    // Outer region: the final outer disc must sit inside the original.
    if !disc_within(&final_outer, &before.outer, slack) {
        return fail("final outer disc escapes the original");
    }
    if cert.final_of.get(&0) != Some(&0) {
        return fail("outer region must map to itself");
    }

    // Every original hole lands inside its recorded final region.
    for (i, hole) in before.holes.iter().enumerate() {
        let target = match cert.final_of.get(&(i + 1)) {
            Some(&t) => t,
            None => return fail("missing final mapping"),
        };
        if target == 0 {
            // Absorbed by the boundary region: disjoint from the final outer disc.
            let bound = &final_outer.radius + &hole.radius - slack;
            if !dist_ge(&hole.center, &final_outer.center, &bound) {
                return fail("hole not disjoint from the final outer disc");
            }
        } else {
            let region = match cert.final_holes.get(&target) {
                Some(p) => p.to_disc(DiscKind::Open)?,
                None => return fail("final mapping targets a missing hole"),
            };
            if !disc_within(hole, &region, slack) {
                return fail("hole not contained in its final region");
            }
        }
    }

    // Each step record's containments hold on their frozen parameters.
    for record in &cert.steps {
        match record {
            StepRecord::MergeHoles {
                first,
                second,
                merged,
                ..
            } => {
                let a = first.to_disc(DiscKind::Open)?;
                let b = second.to_disc(DiscKind::Open)?;
                let c = merged.to_disc(DiscKind::Open)?;
                if !disc_within(&a, &c, slack) || !disc_within(&b, &c, slack) {
                    return fail("merge record containment fails");
                }
                if c.radius > &a.radius + &b.radius + slack {
                    return fail("merge record radius bound fails");
                }
            }
            StepRecord::ShrinkOuter {
                hole,
                outer_before,
                outer_after,
                ..
            } => {
                let h = hole.to_disc(DiscKind::Open)?;
                let ob = outer_before.to_disc(DiscKind::Closed)?;
                let oa = outer_after.to_disc(DiscKind::Closed)?;
                if !disc_within(&oa, &ob, slack) {
                    return fail("shrink record containment fails");
                }
                let bound = &oa.radius + &h.radius - slack;
                if !dist_ge(&oa.center, &h.center, &bound) {
                    return fail("shrink record disjointness fails");
                }
                if oa.radius < &ob.radius - &h.radius - slack {
                    return fail("shrink record radius bound fails");
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheese::tests::{cheese, d, od};


    #[test]
    fn combine_is_idempotent_on_equal_discs() {
        let ctx = GeoCtx::default();
        let a = od("0", "0", "1");
        assert_eq!(combine_discs(&a, &a, &ctx).unwrap(), a);
    }

    #[test]
    fn combine_tangent_unit_discs() {
        let ctx = GeoCtx::default();
        let a = od("0", "0", "1");
        let b = od("2", "0", "1");
        let m = combine_discs(&a, &b, &ctx).unwrap();
        assert_eq!(m.center.x, d("1"));
        assert_eq!(m.center.y, d("0"));
        assert_eq!(m.radius, d("2"));
    }

    #[test]
    fn combine_returns_the_container() {
        let ctx = GeoCtx::default();
        let big = od("0", "0", "2");
        let small = od("0.5", "0", "0.5");
        assert_eq!(combine_discs(&big, &small, &ctx).unwrap(), big);
        // Concentric case returns the larger without division by zero.
        let inner = od("0", "0", "1");
        assert_eq!(combine_discs(&big, &inner, &ctx).unwrap(), big);
    }

    #[test]
    fn combine_requires_touching_closures() {
        let ctx = GeoCtx::default();
        let a = od("0", "0", "1");
        let b = od("5", "0", "1");
        assert!(combine_discs(&a, &b, &ctx).is_err());
    }

    #[test]
    fn shrink_matches_the_worked_configuration() {
        // Outer ((0,0), 2), hole ((2,0), 1): d = 2, R' = 3/2, center (-1/2, 0),
        // with internal tangency to the outer circle and external to the hole.
        let ctx = GeoCtx::default();
        let outer = Disc::closed(Point::origin(), d("2")).unwrap();
        let hole = od("2", "0", "1");
        let s = shrink_outer(&outer, &hole, &ctx).unwrap();
        assert_eq!(s.radius, d("1.5"));
        assert_eq!(s.center.x, d("-0.5"));
        assert_eq!(s.center.y, d("0"));
        // |c' - c| + R' = 2 = R and |c' - c_D| = 2.5 = R' + r.
        let inner_gap = s.center.dist(&outer.center, &ctx) + &s.radius;
        assert!((inner_gap - d("2")).abs() < *ctx.eps());
        let outer_gap = s.center.dist(&hole.center, &ctx);
        assert!((outer_gap - d("2.5")).abs() < *ctx.eps());
    }

    #[test]
    fn shrink_leaves_distant_holes_alone() {
        let ctx = GeoCtx::default();
        let outer = Disc::closed(Point::origin(), d("2")).unwrap();
        let far = od("10", "0", "1");
        assert_eq!(shrink_outer(&outer, &far, &ctx).unwrap(), outer);
    }

    #[test]
    fn min_collision_picks_lexicographic_least() {
        let ctx = GeoCtx::default();
        // Hole 2 crosses the boundary: pair (0, 2). Holes 1 and 3 tangent:
        // pair (1, 3). Lexicographic order prefers (0, 2).
        let c = cheese(
            "1",
            vec![
                od("-0.5", "0", "0.1"),
                od("0.95", "0", "0.1"),
                od("-0.3", "0", "0.1"),
            ],
        );
        let h = DiscAssignment::from_cheese(&c);
        assert_eq!(min_collision(&h, &ctx), Some((0, 2)));

        let classical = cheese("1", vec![od("-0.4", "0", "0.2"), od("0.4", "0", "0.2")]);
        assert_eq!(
            min_collision(&DiscAssignment::from_cheese(&classical), &ctx),
            None
        );
    }

    #[test]
    fn step_case_merge_reduces_index_set() {
        let ctx = GeoCtx::default();
        let c = cheese("1", vec![od("-0.2", "0", "0.2"), od("0.2", "0", "0.2")]);
        let h = DiscAssignment::from_cheese(&c);
        let before_delta = h.delta();
        let (next, record) = step(&h, &ctx).unwrap();
        assert!(matches!(record, Some(StepRecord::MergeHoles { n: 1, m: 2, .. })));
        assert_eq!(next.holes.len(), 1);
        assert!(next.delta() >= before_delta - ctx.eps() * 4u8);
    }

    #[test]
    fn step_case_shrink_moves_outer() {
        let ctx = GeoCtx::default();
        let c = cheese("1", vec![od("0.95", "0", "0.2")]);
        let h = DiscAssignment::from_cheese(&c);
        let (next, record) = step(&h, &ctx).unwrap();
        assert!(matches!(record, Some(StepRecord::ShrinkOuter { m: 1, .. })));
        assert!(next.holes.is_empty());
        assert!(next.outer.radius < h.outer.radius);
        assert!(next.delta() >= h.delta() - ctx.eps() * 4u8);
    }

    #[test]
    fn step_is_identity_on_classical_input() {
        let ctx = GeoCtx::default();
        let c = cheese("1", vec![od("-0.4", "0", "0.2"), od("0.4", "0", "0.2")]);
        let h = DiscAssignment::from_cheese(&c);
        let (next, record) = step(&h, &ctx).unwrap();
        assert!(record.is_none());
        assert_eq!(next.to_cheese(), c);
    }

    #[test]
    fn step_rejects_nonpositive_delta() {
        let ctx = GeoCtx::default();
        let c = cheese("1", vec![od("-0.2", "0", "0.6"), od("0.2", "0", "0.6")]);
        let h = DiscAssignment::from_cheese(&c);
        assert!(matches!(step(&h, &ctx), Err(Error::DeltaNotPositive)));
    }

    #[test]
    fn classicalise_tangent_holes_in_one_step() {
        let ctx = GeoCtx::default();
        let c = cheese("1", vec![od("-0.2", "0", "0.2"), od("0.2", "0", "0.2")]);
        let out = classicalise(&c, &ctx).unwrap();
        assert_eq!(out.steps, 1);
        assert_eq!(out.cheese.holes.len(), 1);
        assert!(out.cheese.holes[0].radius <= d("0.4") + ctx.eps());
        assert!(out.cheese.is_classical(&ctx).0);
        assert!(out.cheese.delta() >= c.delta() - ctx.eps() * 8u8);
        assert!(verify_certificate(&out.certificate, &c, &out.cheese, &ctx));
    }

    #[test]
    fn classicalise_is_identity_on_classical_cheese() {
        let ctx = GeoCtx::default();
        let c = cheese("1", vec![od("-0.4", "0", "0.2"), od("0.4", "0", "0.2")]);
        let out = classicalise(&c, &ctx).unwrap();
        assert_eq!(out.steps, 0);
        assert_eq!(out.cheese, c);
        assert!(verify_certificate(&out.certificate, &c, &out.cheese, &ctx));
    }

    #[test]
    fn tampered_certificate_fails_verification() {
        let ctx = GeoCtx::default();
        let c = cheese("1", vec![od("-0.2", "0", "0.2"), od("0.2", "0", "0.2")]);
        let out = classicalise(&c, &ctx).unwrap();
        let mut tampered = out.certificate.clone();
        // Remap the second hole to the boundary region.
        tampered.final_of.insert(2, 0);
        assert!(!verify_certificate(&tampered, &c, &out.cheese, &ctx));

        let mut shrunk = out.certificate.clone();
        for params in shrunk.final_holes.values_mut() {
            params.r = "0.05".into();
        }
        assert!(!verify_certificate(&shrunk, &c, &out.cheese, &ctx));
    }

    #[test]
    fn classicalise_rejects_nonpositive_delta() {
        let ctx = GeoCtx::default();
        let c = cheese("1", vec![od("0", "0", "1")]);
        assert!(matches!(
            classicalise(&c, &ctx),
            Err(Error::DeltaNotPositive)
        ));
    }

    #[test]
    fn boundary_sampled_containment_for_combine() {
        // Rational boundary parametrisation: 256 points per input disc.
        let ctx = GeoCtx::default();
        let a = od("0.1", "-0.2", "0.7");
        let b = od("0.9", "0.4", "0.5");
        let m = combine_discs(&a, &b, &ctx).unwrap();
        let dirs = crate::geo::circle_directions(256, &ctx);
        for disc in [&a, &b] {
            for dir in &dirs {
                let p = crate::geo::boundary_point(disc, dir);
                let bound = &m.radius + ctx.eps();
                assert!(crate::geo::dist_le(&p, &m.center, &bound));
            }
        }
    }
}
