//! Formal quotients `num / den` whose exact division is deferred until a
//! product of several of them is complete.

use super::poly::LaurentPoly;
use super::Rational;
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct Quotient {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl Quotient {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        Quotient { num, den }
    }

    pub fn poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.arity());
        Quotient { num: p, den }
    }

    pub fn one(arity: usize) -> Self {
        Self::poly(LaurentPoly::one(arity))
    }

    pub fn times(&self, other: &Quotient) -> Quotient {
        Quotient { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    pub fn times_poly(&self, p: &LaurentPoly) -> Quotient {
        Quotient { num: &self.num * p, den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Quotient {
        Quotient { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Re-embed both parts into a larger variable set.
    pub fn embed(&self, arity: usize, map: &[usize]) -> Quotient {
        Quotient { num: self.num.embed(arity, map), den: self.den.embed(arity, map) }
    }

    /// The exact quotient; a nonzero remainder is an error.
    pub fn value(&self) -> Result<LaurentPoly> {
        self.num.div_exact(&self.den)
    }
}
