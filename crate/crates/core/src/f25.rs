//! The field with 25 elements, presented as F_5(sqrt 2).
//!
//! This is the residue field of Q_5(sqrt 2); 2 is a non-square mod 5, so
//! `a + b sqrt(2)` with `a, b` mod 5 covers all 25 classes. The Frobenius
//! `x -> x^5` coincides with conjugation `sqrt(2) -> -sqrt(2)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element `a + b sqrt(2)` of F_25, components reduced mod 5.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct F25 {
    pub a: u8,
    pub b: u8,
}

impl F25 {
    pub const ZERO: F25 = F25 { a: 0, b: 0 };
    pub const ONE: F25 = F25 { a: 1, b: 0 };
    pub const SQRT2: F25 = F25 { a: 0, b: 1 };

    pub fn new(a: u8, b: u8) -> Self {
        F25 { a: a % 5, b: b % 5 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn add(self, o: F25) -> F25 {
        F25::new(self.a + o.a, self.b + o.b)
    }

    pub fn neg(self) -> F25 {
        F25::new(5 - self.a % 5, 5 - self.b % 5)
    }

    pub fn sub(self, o: F25) -> F25 {
        self.add(o.neg())
    }

    pub fn mul(self, o: F25) -> F25 {
        let (a, b, c, d) = (
            self.a as u16,
            self.b as u16,
            o.a as u16,
            o.b as u16,
        );
        F25 {
            a: ((a * c + 2 * b * d) % 5) as u8,
            b: ((a * d + b * c) % 5) as u8,
        }
    }

    pub fn inv(self) -> Result<F25> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // (a - b sqrt 2) / (a^2 - 2 b^2), with the mod-5 inverse of the norm.
        let norm = (self.a as u16 * self.a as u16 + 3 * self.b as u16 * self.b as u16) % 5;
        let norm_inv = [0u16, 1, 3, 2, 4][norm as usize];
        let conj = self.frobenius();
        Ok(F25 {
            a: ((conj.a as u16 * norm_inv) % 5) as u8,
            b: ((conj.b as u16 * norm_inv) % 5) as u8,
        })
    }

    pub fn pow(self, mut e: u64) -> F25 {
        let mut base = self;
        let mut acc = F25::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// Frobenius `x -> x^5`; equals conjugation on this presentation.
    pub fn frobenius(self) -> F25 {
        F25::new(self.a, 5 - self.b % 5)
    }

    /// All 25 elements in a fixed order (a fastest).
    pub fn all() -> impl Iterator<Item = F25> {
        (0..5u8).flat_map(|b| (0..5u8).map(move |a| F25 { a, b }))
    }
}

impl std::fmt::Display for F25 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}*sqrt2"),
            (a, b) => write!(f, "{a}+{b}*sqrt2"),
        }
    }
}
