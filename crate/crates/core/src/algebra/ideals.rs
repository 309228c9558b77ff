//! The valuation ring O(X, tau, g), its units, and the ideals J and M^y,
//! defined by thresholds on omega applied pointwise.

use super::{is_member, AlgebraSpec, FnTable};
use crate::error::Result;
use crate::padic::Val;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealKind {
    /// `inf_x omega(f(x)) >= 0`
    O,
    /// `omega(f(x)) = 0` everywhere
    OUnits,
    /// `inf_x omega(f(x)) > 0`
    J,
    /// `f` in O with `omega(f(y)) > 0`
    My(usize),
}

/// A membership view of one of the threshold sets, relative to a spec.
pub struct IdealView<'a> {
    pub kind: IdealKind,
    pub spec: &'a AlgebraSpec,
}

impl IdealView<'_> {
    pub fn contains(&self, f: &FnTable) -> Result<bool> {
        if !is_member(f, self.spec)?.ok {
            return Ok(false);
        }
        Ok(match self.kind {
            IdealKind::O => f.values().iter().all(|v| v.omega() >= Val::Finite(0)),
            IdealKind::OUnits => f.values().iter().all(|v| v.omega() == Val::Finite(0)),
            IdealKind::J => f.values().iter().all(|v| v.omega() > Val::Finite(0)),
            IdealKind::My(y) => {
                f.values().iter().all(|v| v.omega() >= Val::Finite(0))
                    && f.get(y).omega() > Val::Finite(0)
            }
        })
    }
}

pub fn in_o(f: &FnTable, spec: &AlgebraSpec) -> Result<bool> {
    IdealView { kind: IdealKind::O, spec }.contains(f)
}

pub fn in_o_units(f: &FnTable, spec: &AlgebraSpec) -> Result<bool> {
    IdealView { kind: IdealKind::OUnits, spec }.contains(f)
}

pub fn in_j(f: &FnTable, spec: &AlgebraSpec) -> Result<bool> {
    IdealView { kind: IdealKind::J, spec }.contains(f)
}

pub fn in_my(f: &FnTable, spec: &AlgebraSpec, y: usize) -> Result<bool> {
    IdealView { kind: IdealKind::My(y), spec }.contains(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Endo, StoneSpace};
    use crate::galois::{FieldId, GaloisAut, Value};
    use crate::quadext::QuadExt;

    fn spec() -> AlgebraSpec {
        AlgebraSpec::new(
            StoneSpace::of_size(2),
            Endo::cycle(2),
            GaloisAut::generator(FieldId::Q5Sqrt2),
        )
        .unwrap()
    }

    /// Two fixed points, so members may take unrelated values at x and y.
    fn fixed_point_spec() -> AlgebraSpec {
        AlgebraSpec::new(
            StoneSpace::of_size(2),
            Endo::identity(2),
            GaloisAut::identity(FieldId::Q5Sqrt2),
        )
        .unwrap()
    }

    fn quad(a: i64, b: i64) -> Value {
        Value::Quad(QuadExt::from_i64(a, b, 8))
    }

    #[test]
    fn constants_classify_as_expected() {
        let spec = spec();
        let one = FnTable::constant(&spec, quad(1, 0));
        assert!(in_o(&one, &spec).unwrap());
        assert!(in_o_units(&one, &spec).unwrap());
        assert!(!in_j(&one, &spec).unwrap());

        let five = FnTable::constant(&spec, quad(5, 0));
        assert!(in_j(&five, &spec).unwrap());
        assert!(!in_o_units(&five, &spec).unwrap());
    }

    #[test]
    fn my_membership_at_a_single_point() {
        // On an orbit every member has constant omega (g is an isometry),
        // so M^y is exercised on a spec with two separate fixed points.
        let spec = fixed_point_spec();
        // f(y) = 5, f(x) = 1 elsewhere: in M^y, not in J.
        let f = FnTable::new(vec![quad(1, 0), quad(5, 0)]);
        assert!(is_member(&f, &spec).unwrap().ok);
        assert!(in_my(&f, &spec, 1).unwrap());
        assert!(!in_my(&f, &spec, 0).unwrap());
        assert!(!in_j(&f, &spec).unwrap());
    }

    #[test]
    fn o_is_closed_under_ring_operations() {
        let spec = spec();
        let members = [
            FnTable::new(vec![quad(1, 2), Value::Quad(QuadExt::from_i64(1, -2, 8))]),
            FnTable::constant(&spec, quad(3, 0)),
            FnTable::new(vec![quad(0, 5), Value::Quad(QuadExt::from_i64(0, -5, 8))]),
        ];
        for f in &members {
            assert!(in_o(f, &spec).unwrap());
            for h in &members {
                assert!(in_o(&f.add(h), &spec).unwrap());
                assert!(in_o(&f.mul(h), &spec).unwrap());
            }
        }
    }

    #[test]
    fn j_and_my_absorb_products_from_o() {
        let spec = spec();
        let j_elem = FnTable::constant(&spec, quad(25, 0));
        let o_elem = FnTable::new(vec![quad(1, 2), Value::Quad(QuadExt::from_i64(1, -2, 8))]);
        assert!(in_j(&j_elem.mul(&o_elem), &spec).unwrap());

        let spec = fixed_point_spec();
        let my_elem = FnTable::new(vec![quad(1, 0), quad(5, 0)]);
        let o_elem = FnTable::new(vec![quad(2, 0), quad(3, 0)]);
        assert!(in_my(&my_elem.mul(&o_elem), &spec, 1).unwrap());
    }

    #[test]
    fn maximality_witness_construction() {
        // For f in O with omega(f(y)) = 0, the flipped indicator
        // f'(x) = [omega(f(x)) > 0] lies in M^y and f + f' is a unit.
        let spec = fixed_point_spec();
        let f = FnTable::new(vec![quad(5, 0), quad(1, 0)]); // omega = (1, 0)
        assert!(is_member(&f, &spec).unwrap().ok);
        let y = 1usize;
        assert_eq!(f.get(y).omega(), crate::padic::Val::Finite(0));
        let f_prime = FnTable::from_fn(&spec, |x| {
            if f.get(x).omega() > crate::padic::Val::Finite(0) {
                quad(1, 0)
            } else {
                quad(0, 0)
            }
        });
        assert!(is_member(&f_prime, &spec).unwrap().ok);
        assert!(in_my(&f_prime, &spec, y).unwrap());
        assert!(in_o_units(&f.add(&f_prime), &spec).unwrap());
    }
}
