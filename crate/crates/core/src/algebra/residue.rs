//! Coefficient expansion of integral tables over a stable representative
//! set, and the residue algebra isomorphism
//! `O(X, tau, g) / J(X, tau, g) = C(X, tau, g-bar)`.

use super::{AlgebraSpec, FnTable};
use crate::error::{Error, Result};
use crate::galois::{FieldId, GaloisAut, Value};
use crate::padic::Val;
use crate::quadext::QuadExt;
use crate::reps::{residue_reduce, ResidueRepSet};

/// Default number of coefficient layers produced by `expand_function`.
pub const DEFAULT_DEPTH: usize = 8;

fn as_quad<'v>(v: &'v Value, what: &str) -> Result<&'v QuadExt> {
    match v {
        Value::Quad(q) => Ok(q),
        _ => Err(Error::TypeError(format!("{what} requires Q5_sqrt2 values"))),
    }
}

/// Digitwise expansion of each point value over the representative set:
/// `f = f_0 + 5 f_1 + 5^2 f_2 + ...` with every `f_i` taking values in the
/// g-stable representatives. For members of the algebra each layer again
/// satisfies `f_i o tau = g o f_i`.
pub fn expand_function(
    f: &FnTable,
    reps: &ResidueRepSet,
    depth: usize,
) -> Result<Vec<FnTable>> {
    if !reps.is_stable() {
        return Err(Error::RepsNotStable);
    }
    let mut residuals: Vec<QuadExt> = f
        .values()
        .iter()
        .map(|v| {
            let q = as_quad(v, "expansion")?;
            if q.omega() < Val::Finite(0) {
                return Err(Error::NotIntegral);
            }
            Ok(q.clone())
        })
        .collect::<Result<_>>()?;
    let mut layers = Vec::with_capacity(depth);
    for _ in 0..depth {
        let mut layer = Vec::with_capacity(residuals.len());
        for r in residuals.iter_mut() {
            let rep = reps.rep_for(r)?.clone();
            *r = r.sub(&rep).shift(-1);
            layer.push(Value::Quad(rep));
        }
        layers.push(FnTable::new(layer));
    }
    Ok(layers)
}

/// Partial resummation `sum_i layers[i] * 5^i` for checking expansions.
pub fn resum(layers: &[FnTable]) -> Result<FnTable> {
    let n = layers
        .first()
        .ok_or_else(|| Error::invalid("no layers"))?
        .len();
    let mut out = Vec::with_capacity(n);
    for x in 0..n {
        let mut acc = QuadExt::zero(crate::padic::DEFAULT_PRECISION);
        for (i, layer) in layers.iter().enumerate() {
            let q = as_quad(layer.get(x), "resum")?;
            acc = acc.add(&q.shift(i as i64));
        }
        out.push(Value::Quad(acc));
    }
    Ok(FnTable::new(out))
}

/// The residue algebra spec over F_25 together with the quotient map phi.
pub struct ResidueAlgebra {
    pub reduced_spec: AlgebraSpec,
    reps: ResidueRepSet,
}

/// Build the residue algebra of a Q_5(sqrt 2) spec: same space and tau,
/// value field F_25, automorphism the induced g-bar (the Frobenius power
/// matching g; orders agree because the extension is unramified).
pub fn residue_algebra(spec: &AlgebraSpec, reps: &ResidueRepSet) -> Result<ResidueAlgebra> {
    if spec.field() != FieldId::Q5Sqrt2 {
        return Err(Error::Unsupported(
            "residue algebra is built over Q5_sqrt2".into(),
        ));
    }
    let g_bar = GaloisAut {
        field: FieldId::F25,
        power: spec.g.power,
    };
    let reduced_spec = AlgebraSpec::new(spec.space.clone(), spec.tau.clone(), g_bar)?;
    Ok(ResidueAlgebra {
        reduced_spec,
        reps: reps.clone(),
    })
}

impl ResidueAlgebra {
    /// `phi(f) = reduction of the leading coefficient function f_0`.
    /// Defined on integral tables; kernel is exactly J.
    pub fn phi(&self, f: &FnTable) -> Result<FnTable> {
        let mut out = Vec::with_capacity(f.len());
        for v in f.values() {
            let q = as_quad(v, "phi")?;
            let rep = self.reps.rep_for(q)?;
            out.push(Value::F25(residue_reduce(rep)?));
        }
        Ok(FnTable::new(out))
    }

    /// Lift an F_25-valued member through the representative set; phi of
    /// the lift returns the input (surjectivity witness).
    pub fn lift(&self, f_bar: &FnTable) -> Result<FnTable> {
        let mut out = Vec::with_capacity(f_bar.len());
        for v in f_bar.values() {
            let class = match v {
                Value::F25(c) => *c,
                _ => return Err(Error::TypeError("lift expects F25 values".into())),
            };
            out.push(Value::Quad(self.reps.rep_of_class(class).clone()));
        }
        Ok(FnTable::new(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_members, in_j, is_member, Endo, StoneSpace};
    use crate::f25::F25;
    use crate::galois::GaloisAut;
    use crate::reps::stable_reps;

    fn spec() -> AlgebraSpec {
        AlgebraSpec::new(
            StoneSpace::of_size(2),
            Endo::cycle(2),
            GaloisAut::generator(FieldId::Q5Sqrt2),
        )
        .unwrap()
    }

    fn reps() -> ResidueRepSet {
        stable_reps(&GaloisAut::generator(FieldId::Q5Sqrt2), 16).unwrap()
    }

    #[test]
    fn expansion_of_sqrt2_resums() {
        let reps = reps();
        let s = QuadExt::sqrt2(16);
        let f = FnTable::new(vec![Value::Quad(s.clone()), Value::Quad(s.neg())]);
        let layers = expand_function(&f, &reps, 6).unwrap();
        let back = resum(&layers).unwrap();
        // Agreement to the expansion depth.
        for x in 0..2 {
            let diff = as_quad(back.get(x), "t")
                .unwrap()
                .sub(as_quad(f.get(x), "t").unwrap());
            assert!(diff.omega() >= Val::Finite(6));
        }
    }

    #[test]
    fn representative_constants_have_trivial_tails() {
        let spec = spec();
        let reps = reps();
        let f = FnTable::constant(&spec, Value::Quad(QuadExt::from_i64(3, 0, 16)));
        let layers = expand_function(&f, &reps, 5).unwrap();
        assert!(layers[0].eq_approx(&f));
        for layer in &layers[1..] {
            assert!(layer.values().iter().all(Value::is_zero));
        }
    }

    #[test]
    fn member_layers_are_equivariant() {
        let spec = spec();
        let reps = reps();
        let s = QuadExt::from_i64(2, 3, 16);
        let f = FnTable::new(vec![Value::Quad(s.clone()), Value::Quad(s.conj())]);
        assert!(is_member(&f, &spec).unwrap().ok);
        for layer in expand_function(&f, &reps, 6).unwrap() {
            assert!(is_member(&layer, &spec).unwrap().ok);
        }
    }

    #[test]
    fn non_integral_tables_are_rejected() {
        let reps = reps();
        let f = FnTable::new(vec![
            Value::Quad(QuadExt::one(8).shift(-1)),
            Value::Quad(QuadExt::one(8).shift(-1)),
        ]);
        assert!(matches!(
            expand_function(&f, &reps, 3),
            Err(Error::NotIntegral)
        ));
    }

    #[test]
    fn phi_is_unital_and_multiplicative() {
        let spec = spec();
        let ra = residue_algebra(&spec, &reps()).unwrap();
        let one = FnTable::constant(&spec, Value::one(FieldId::Q5Sqrt2, 16));
        let phi_one = ra.phi(&one).unwrap();
        assert!(phi_one.eq_approx(&FnTable::constant(&ra.reduced_spec, Value::F25(F25::ONE))));

        let f = FnTable::new(vec![
            Value::Quad(QuadExt::from_i64(2, 3, 16)),
            Value::Quad(QuadExt::from_i64(2, -3, 16)),
        ]);
        let h = FnTable::new(vec![
            Value::Quad(QuadExt::from_i64(1, 1, 16)),
            Value::Quad(QuadExt::from_i64(1, -1, 16)),
        ]);
        let lhs = ra.phi(&f.mul(&h)).unwrap();
        let rhs = ra.phi(&f).unwrap().mul(&ra.phi(&h).unwrap());
        assert!(lhs.eq_approx(&rhs));
        let lhs = ra.phi(&f.add(&h)).unwrap();
        let rhs = ra.phi(&f).unwrap().add(&ra.phi(&h).unwrap());
        assert!(lhs.eq_approx(&rhs));
    }

    #[test]
    fn phi_kernel_is_j() {
        let spec = spec();
        let ra = residue_algebra(&spec, &reps()).unwrap();
        let in_kernel = FnTable::constant(&spec, Value::Quad(QuadExt::from_i64(10, 5, 16)));
        // 10 + 5 sqrt2 is not a member... use a member: f(x)=5a, f(y)=g(5a).
        let a = QuadExt::from_i64(5, 10, 16);
        let member = FnTable::new(vec![Value::Quad(a.clone()), Value::Quad(a.conj())]);
        assert!(is_member(&member, &spec).unwrap().ok);
        assert!(in_j(&member, &spec).unwrap());
        assert!(ra.phi(&member).unwrap().values().iter().all(Value::is_zero));
        drop(in_kernel);

        let unit = FnTable::new(vec![
            Value::Quad(QuadExt::from_i64(1, 5, 16)),
            Value::Quad(QuadExt::from_i64(1, -5, 16)),
        ]);
        assert!(is_member(&unit, &spec).unwrap().ok);
        assert!(!in_j(&unit, &spec).unwrap());
        assert!(!ra.phi(&unit).unwrap().values().iter().all(Value::is_zero));
    }

    #[test]
    fn phi_image_matches_enumerated_residue_members() {
        let spec = spec();
        let ra = residue_algebra(&spec, &reps()).unwrap();
        let targets = enumerate_members(&ra.reduced_spec).unwrap();
        assert_eq!(targets.len(), 25);
        let mut images = Vec::new();
        for t in &targets {
            let lift = ra.lift(t).unwrap();
            assert!(is_member(&lift, &spec).unwrap().ok, "lift must be a member");
            let back = ra.phi(&lift).unwrap();
            assert!(back.eq_approx(t));
            if !images.iter().any(|i: &FnTable| i.eq_approx(&back)) {
                images.push(back);
            }
        }
        assert_eq!(images.len(), 25);
    }
}
