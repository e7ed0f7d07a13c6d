//! Fractions with a factored denominator.
//!
//! The denominator is a multiset of normalized polynomial factors, so sums
//! only ever multiply by the factors that are missing.

use std::collections::BTreeMap;

use super::matrix::RingElem;
use super::poly::{ExpVec, LaurentPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Frac {
    num: LaurentPoly,
    den: BTreeMap<LaurentPoly, u32>,
}

impl Frac {
    pub fn from_poly(p: LaurentPoly) -> Self {
        Frac { num: p, den: BTreeMap::new() }
    }

    /// `num / den`; the denominator is normalized to a monic factor with
    /// minimal exponents zero, the unit part moving to the numerator.
    pub fn new(num: LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        Frac::from_poly(num).divide_by(den)
    }

    pub fn divide_by(mut self, den: &LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lo, _) = den.exponent_box().unwrap();
        let lo = ExpVec(lo);
        let lc = den.leading().unwrap().1.clone();
        let unit = LaurentPoly::monomial(lc.clone(), lo.clone());
        self.num = &self.num * &unit.monomial_inverse().unwrap();
        let normalized = den.shift(&lo.neg()).scale(&lc.recip());
        if normalized.is_constant() {
            return Ok(self);
        }
        *self.den.entry(normalized).or_insert(0) += 1;
        Ok(self)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one(self.num.arity());
        for (f, &m) in &self.den {
            d = &d * &f.pow(m);
        }
        d
    }

    pub fn to_poly(&self) -> Result<LaurentPoly> {
        self.num.div_exact(&self.denominator())
    }

    fn lift(&self, target: &BTreeMap<LaurentPoly, u32>) -> LaurentPoly {
        let mut n = self.num.clone();
        for (f, &m) in target {
            let have = self.den.get(f).copied().unwrap_or(0);
            if m > have {
                n = &n * &f.pow(m - have);
            }
        }
        n
    }

    fn lcm(&self, other: &Frac) -> BTreeMap<LaurentPoly, u32> {
        let mut out = self.den.clone();
        for (f, &m) in &other.den {
            let e = out.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        out
    }

    /// Exact equality of the two rational functions.
    pub fn equals(&self, other: &Frac) -> bool {
        let l = self.lcm(other);
        self.lift(&l) == other.lift(&l)
    }
}

impl RingElem for Frac {
    fn zero_like(&self) -> Self {
        Frac::from_poly(LaurentPoly::zero(self.num.arity()))
    }
    fn one_like(&self) -> Self {
        Frac::from_poly(LaurentPoly::one(self.num.arity()))
    }
    fn add_r(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        let l = self.lcm(other);
        Frac { num: &self.lift(&l) + &other.lift(&l), den: l }
    }
    fn sub_r(&self, other: &Self) -> Self {
        self.add_r(&other.neg_r())
    }
    fn mul_r(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return self.zero_like();
        }
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(f.clone()).or_insert(0) += m;
        }
        Frac { num: &self.num * &other.num, den }
    }
    fn neg_r(&self) -> Self {
        Frac { num: -&self.num, den: self.den.clone() }
    }
    fn is_zero_r(&self) -> bool {
        self.num.is_zero()
    }
}

impl From<LaurentPoly> for Frac {
    fn from(p: LaurentPoly) -> Self {
        Frac::from_poly(p)
    }
}

