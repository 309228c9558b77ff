//! Desk-scale Gelfand transform for the field case.
//!
//! Take `A = L` itself, a cyclic extension of its base field. The maximal
//! ideal is `{0}` and the characters are the pairs `(0, phi)` with `phi`
//! running over the Galois group. The transform `a -> a-hat` with
//! `a-hat(x) = phi(a)` lands in the basic function algebra on the
//! character space with both actions given by g, is isometric for the sup
//! norm, and is equivariant: `a-hat(g . x) = g(a-hat(x))`.

use serde::Serialize;

use crate::error::Result;
use crate::galois::{FieldId, GaloisAut, Value};
use crate::padic::Val;

/// A character `(x_0, phi)` with `x_0 = {0}` and `phi` a Galois element.
#[derive(Clone, Debug, Serialize)]
pub struct Character {
    pub label: String,
    pub phi: GaloisAut,
}

pub struct GelfandDemo {
    pub field: FieldId,
    pub characters: Vec<Character>,
}

/// Characters of the cyclic extension `L` over its base field.
pub fn gelfand_demo(field: FieldId) -> Result<GelfandDemo> {
    let d = field.galois_order();
    let characters = (0..d)
        .map(|i| Character {
            label: format!("(0, g^{i})"),
            phi: GaloisAut::generator(field).pow(i),
        })
        .collect();
    Ok(GelfandDemo { field, characters })
}

impl GelfandDemo {
    /// The transform table `a-hat = [phi(a) for each character]`.
    pub fn transform(&self, a: &Value) -> Vec<Value> {
        self.characters.iter().map(|c| c.phi.apply(a)).collect()
    }

    /// Sup-norm isometry in valuation form:
    /// `min_x omega(a-hat(x)) = omega(a)`.
    pub fn is_isometric_at(&self, a: &Value) -> bool {
        let min = self
            .transform(a)
            .iter()
            .map(Value::omega)
            .min()
            .unwrap_or(Val::Infinite);
        min == a.omega()
    }

    /// `a-hat(g . x) = g(a-hat(x))` for every character; g acts on
    /// characters by post-composition.
    pub fn is_equivariant_at(&self, a: &Value) -> bool {
        let g = GaloisAut::generator(self.field);
        self.characters.iter().all(|c| {
            let moved = GaloisAut {
                field: self.field,
                power: (c.phi.power + 1) % self.field.galois_order(),
            };
            moved.apply(a).eq_approx(&g.apply(&c.phi.apply(a)))
        })
    }
}
