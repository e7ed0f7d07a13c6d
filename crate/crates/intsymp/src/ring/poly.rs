//! Multivariate Laurent polynomials over the rationals.
//!
//! Exponents live on the half-integer lattice and are stored doubled, so
//! `x^{3/2}` is kept as the integer 3.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Doubled exponent vector. Entry `i` is twice the true exponent of `x_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpVec(pub Vec<i32>);

impl ExpVec {
    pub fn zero(arity: usize) -> Self {
        ExpVec(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> ExpVec {
        ExpVec(self.0.iter().map(|a| -a).collect())
    }
}

// Graded lexicographic order: total degree first, then entrywise.
impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<ExpVec, Rational>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: Vec<i32>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(ExpVec::zero(arity), c);
        }
        p
    }

    pub fn from_int(arity: usize, c: i64) -> Self {
        Self::constant(arity, Rational::from_integer(BigInt::from(c)))
    }

    /// `c * x^e` with `e` given doubled.
    pub fn monomial(c: Rational, exps: ExpVec) -> Self {
        let arity = exps.arity();
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `x_{i+1}` raised to the true exponent `e2 / 2`.
    pub fn var_pow2(arity: usize, i: usize, e2: i32) -> Self {
        let mut e = vec![0; arity];
        e[i] = e2;
        Self::monomial(Rational::one(), ExpVec(e))
    }

    /// The variable `x_{i+1}` raised to an integer power.
    pub fn var_pow(arity: usize, i: usize, e: i32) -> Self {
        Self::var_pow2(arity, i, 2 * e)
    }

    pub fn var(arity: usize, i: usize) -> Self {
        Self::var_pow(arity, i, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (ExpVec, Rational)>>(arity: usize, it: I) -> Result<Self> {
        let mut p = Self::zero(arity);
        for (e, c) in it {
            if e.arity() != arity {
                return Err(Error::ArityMismatch(arity, e.arity()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExpVec, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpVec) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&ExpVec::zero(self.arity))
    }

    pub fn leading(&self) -> Option<(&ExpVec, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().all(|e| e.0.iter().all(|&x| x == 0)))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: ExpVec, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            Err(Error::ArityMismatch(self.arity, other.arity))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        let mut acc: std::collections::HashMap<ExpVec, Rational> =
            std::collections::HashMap::with_capacity(self.len() * other.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.add(e2);
                let c = c1 * c2;
                *acc.entry(e).or_insert_with(Rational::zero) += c;
            }
        }
        let mut out = Self::zero(self.arity);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Multiply by the monomial `x^e` (doubled exponents).
    pub fn shift(&self, e: &ExpVec) -> Self {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(k, v)| (k.add(e), v.clone())).collect(),
        }
    }

    pub fn mul_term(&self, e: &ExpVec, c: &Rational) -> Self {
        self.shift(e).scale(c)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.arity);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Inverse of a monomial; `None` for anything else.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(c.recip(), e.neg()))
    }

    /// Signed integer power; negative powers only for monomials.
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            let inv = self.monomial_inverse().ok_or(Error::NotAUnit)?;
            Ok(inv.pow((-k) as u32))
        }
    }

    /// Swap the roles of `x_i` and `x_i^{-1}` for the listed variables.
    pub fn invert_vars(&self, which: &[usize]) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            for &i in which {
                e.0[i] = -e.0[i];
            }
            out.terms.insert(e, c.clone());
        }
        out
    }

    /// Per-variable minimum and maximum doubled exponent.
    pub fn exponent_box(&self) -> Option<(Vec<i32>, Vec<i32>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for e in it {
            for i in 0..self.arity {
                lo[i] = lo[i].min(e.0[i]);
                hi[i] = hi[i].max(e.0[i]);
            }
        }
        Some((lo, hi))
    }

    /// Exact division in the Laurent ring; errors on a nonzero remainder.
    pub fn div_exact(&self, den: &Self) -> Result<Self> {
        self.check_arity(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.arity));
        }
        if den.is_monomial() {
            return Ok(self * &den.monomial_inverse().unwrap());
        }
        let (nlo, nhi) = self.exponent_box().unwrap();
        let (dlo, dhi) = den.exponent_box().unwrap();
        let mut qlo = vec![0; self.arity];
        let mut qhi = vec![0; self.arity];
        for i in 0..self.arity {
            qlo[i] = nlo[i] - dlo[i];
            qhi[i] = nhi[i] - dhi[i];
            if qlo[i] > qhi[i] {
                return Err(Error::NotDivisible);
            }
        }
        let (de, dc) = den.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let qe = re.sub(&de);
            if qe.0.iter().zip(qlo.iter().zip(&qhi)).any(|(e, (lo, hi))| e < lo || e > hi) {
                return Err(Error::NotDivisible);
            }
            let qc = &rc * &dc_inv;
            for (e, c) in &den.terms {
                rem.add_term(e.add(&qe), -(c * &qc));
            }
            quot.terms.insert(qe, qc);
        }
        Ok(quot)
    }

    /// Substitute `values[i]` for `x_{i+1}`; all values share one target arity.
    pub fn specialize(&self, values: &[LaurentPoly]) -> Result<Self> {
        if values.len() != self.arity {
            return Err(Error::ArityMismatch(self.arity, values.len()));
        }
        let target = values.first().map(|v| v.arity).unwrap_or(0);
        if values.iter().any(|v| v.arity != target) {
            return Err(Error::InvalidSpec("specialization values must share one arity".into()));
        }
        let mut cache: Vec<BTreeMap<i32, LaurentPoly>> = vec![BTreeMap::new(); self.arity];
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for i in 0..self.arity {
                let d = e.0[i];
                if d == 0 {
                    continue;
                }
                let f = match cache[i].get(&d) {
                    Some(f) => f.clone(),
                    None => {
                        let f = power_half(&values[i], d, i)?;
                        cache[i].insert(d, f.clone());
                        f
                    }
                };
                term = &term * &f;
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitute a monomial `c * y^f` for one variable, keeping the others.
    pub fn substitute_var(&self, i: usize, value: &LaurentPoly) -> Result<Self> {
        let vals: Vec<LaurentPoly> = (0..self.arity)
            .map(|j| if j == i { value.clone() } else { Self::var(self.arity, j) })
            .collect();
        self.specialize(&vals)
    }

    /// Embed into a larger arity, sending `x_{i+1}` to `x_{map[i]+1}`.
    pub fn embed(&self, arity: usize, map: &[usize]) -> Self {
        let mut out = Self::zero(arity);
        for (e, c) in &self.terms {
            let mut f = vec![0; arity];
            for (i, &d) in e.0.iter().enumerate() {
                f[map[i]] += d;
            }
            out.add_term(ExpVec(f), c.clone());
        }
        out
    }

    /// Drop variables whose exponent is zero in every term, projecting onto `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self> {
        let mut out = Self::zero(keep.len());
        for (e, c) in &self.terms {
            for i in 0..self.arity {
                if e.0[i] != 0 && !keep.contains(&i) {
                    return Err(Error::InvalidSpec(format!("variable x{} still present", i + 1)));
                }
            }
            out.add_term(ExpVec(keep.iter().map(|&i| e.0[i]).collect()), c.clone());
        }
        Ok(out)
    }

    /// True when every exponent is integral (no half powers).
    pub fn is_integral_lattice(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|d| d % 2 == 0))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Sum of the coefficients, i.e. the value at x = (1, ..., 1).
    pub fn coeff_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    pub fn min_exponent(&self, i: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.0[i]).min()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| TermJson { coeff: format!("{}/{}", c.numer(), c.denom()), exps: e.0.clone() })
            .collect();
        serde_json::to_value(v).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    pub fn from_json(s: &str, arity: usize) -> Result<Self> {
        let v: Vec<TermJson> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Self::zero(arity);
        for t in v {
            if t.exps.len() != arity {
                return Err(Error::ArityMismatch(arity, t.exps.len()));
            }
            out.add_term(ExpVec(t.exps), parse_rational(&t.coeff)?);
        }
        Ok(out)
    }

    /// Canonical text with variables named `x1 .. xn`.
    pub fn to_text(&self) -> String {
        let names: Vec<String> = (1..=self.arity).map(|i| format!("x{i}")).collect();
        self.to_text_with(&names, false)
    }

    /// Text over custom variable names; `ascending` reverses the term order.
    pub fn to_text_with(&self, names: &[String], ascending: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        let it: Box<dyn Iterator<Item = (&ExpVec, &Rational)>> =
            if ascending { Box::new(self.terms.iter()) } else { Box::new(self.terms.iter().rev()) };
        for (idx, (e, c)) in it.enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono: Vec<String> = e
                .0
                .iter()
                .zip(names)
                .filter(|(d, _)| **d != 0)
                .map(|(&d, name)| match d {
                    2 => name.clone(),
                    _ => format!("{name}^{}", fmt_half(d)),
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&fmt_rational(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&fmt_rational(&a));
                    out.push_str(" * ");
                }
                out.push_str(&mono.join(" "));
            }
        }
        out
    }

    /// Parse the canonical text form over `x1 .. xn`.
    pub fn parse(s: &str, arity: usize) -> Result<Self> {
        let names: Vec<String> = (1..=arity).map(|i| format!("x{i}")).collect();
        Self::parse_with(s, &names)
    }

    pub fn parse_with(s: &str, names: &[String]) -> Result<Self> {
        let arity = names.len();
        let s = s.trim();
        let mut out = Self::zero(arity);
        if s == "0" {
            return Ok(out);
        }
        // Split into signed terms at " + " / " - " separators.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut rest = s;
        let mut neg = false;
        if let Some(r) = rest.strip_prefix('-') {
            neg = true;
            rest = r;
        }
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let cut = match (plus, minus) {
                (Some(p), Some(m)) => Some(p.min(m)),
                (a, b) => a.or(b),
            };
            match cut {
                Some(pos) => {
                    pieces.push((neg, rest[..pos].to_string()));
                    neg = &rest[pos..pos + 3] == " - ";
                    rest = &rest[pos + 3..];
                }
                None => {
                    pieces.push((neg, rest.to_string()));
                    break;
                }
            }
        }
        for (neg, body) in pieces {
            let (coef, mono) = match body.split_once(" * ") {
                Some((c, m)) => (parse_rational(c.trim())?, m.trim().to_string()),
                None => {
                    let b = body.trim();
                    if b.chars().next().map(|ch| ch.is_ascii_digit()).unwrap_or(false) {
                        (parse_rational(b)?, String::new())
                    } else {
                        (Rational::one(), b.to_string())
                    }
                }
            };
            let mut e = vec![0i32; arity];
            for factor in mono.split_whitespace() {
                let (name, pow) = match factor.split_once('^') {
                    Some((n, p)) => (n, parse_half(p)?),
                    None => (factor, 2),
                };
                let idx = names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                e[idx] += pow;
            }
            out.add_term(ExpVec(e), if neg { -coef } else { coef });
        }
        Ok(out)
    }
}

fn power_half(v: &LaurentPoly, d: i32, var: usize) -> Result<LaurentPoly> {
    if v.is_zero() {
        return if d > 0 {
            Ok(LaurentPoly::zero(v.arity))
        } else {
            Err(Error::ZeroSubstitution(var + 1))
        };
    }
    if d % 2 == 0 {
        return v.powi((d / 2) as i64);
    }
    // Half-integer power: only for monomials c*y^f with c = 1 and f even.
    if v.is_monomial() {
        let (f, c) = v.terms.iter().next().unwrap();
        if c.is_one() && f.0.iter().all(|x| (x * d) % 2 == 0) {
            return Ok(LaurentPoly::monomial(Rational::one(), ExpVec(f.0.iter().map(|x| x * d / 2).collect())));
        }
    }
    Err(Error::HalfPower(var + 1))
}

fn fmt_half(d: i32) -> String {
    if d % 2 == 0 {
        format!("{}", d / 2)
    } else {
        format!("{d}/2")
    }
}

fn parse_half(s: &str) -> Result<i32> {
    let err = || Error::Parse(format!("bad exponent {s}"));
    match s.split_once('/') {
        Some((n, "2")) => n.parse::<i32>().map_err(|_| err()),
        Some(_) => Err(err()),
        None => s.parse::<i32>().map(|v| 2 * v).map_err(|_| err()),
    }
}

pub fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse(format!("bad rational {s}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| err())?)),
    }
}

/// Rational from a small integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Converts an integral rational to i128, if it fits.
pub fn rational_to_i128(c: &Rational) -> Option<i128> {
    if c.is_integer() {
        c.numer().to_i128()
    } else {
        None
    }
}

/// Greatest common divisor of integer coefficients (helper for tests).
pub fn content_gcd(p: &LaurentPoly) -> BigInt {
    p.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c.numer()))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.arity, self.to_text())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("arity mismatch in add")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("arity mismatch in sub")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("arity mismatch in mul")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in add");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in sub");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
