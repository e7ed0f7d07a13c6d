//! One-variable q-series helpers: brackets, q-binomials and exact ratios of
//! products of `(1 - q^r)` factors.
//!
//! Half-integer brackets such as `[1/2] = 1/(1 + q^{1/2})` are not Laurent
//! polynomials, so products of bracket ratios are collected in a [`QRatio`]
//! and resolved by one exact division at the end.

use num_traits::One;

use super::poly::{rat, ExpVec, LaurentPoly};
use super::Rational;
use crate::error::{Error, Result};

/// Half-integer stored doubled: `Half(3)` is 3/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Half(pub i32);

impl Half {
    pub fn int(v: i32) -> Self {
        Half(2 * v)
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn doubled(self) -> i32 {
        self.0
    }
}

impl std::ops::Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl std::ops::Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl std::fmt::Display for Half {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// `q^{e}` with `e` doubled.
pub fn qpow2(e2: i32) -> LaurentPoly {
    LaurentPoly::monomial(Rational::one(), ExpVec(vec![e2]))
}

pub fn qpow(r: Half) -> LaurentPoly {
    qpow2(r.0)
}

/// `1 - q^r`.
pub fn one_minus_q(r: Half) -> LaurentPoly {
    &LaurentPoly::one(1) - &qpow(r)
}

/// `[r] = (1 - q^r)/(1 - q)`, defined as a Laurent polynomial for integer `r`.
pub fn q_bracket(r: Half) -> Result<LaurentPoly> {
    if !r.is_integer() {
        return Err(Error::NotLaurent(format!("[{r}]")));
    }
    let n = r.0 / 2;
    let mut p = LaurentPoly::zero(1);
    if n >= 0 {
        for i in 0..n {
            p += &qpow2(2 * i);
        }
    } else {
        // [-n] = -q^{-n} [n]
        for i in 0..-n {
            p -= &qpow2(-2 * (i + 1));
        }
    }
    Ok(p)
}

/// `<r> = 1 + q^r`.
pub fn q_angle(r: Half) -> LaurentPoly {
    &LaurentPoly::one(1) + &qpow(r)
}

/// Gaussian binomial coefficient.
pub fn q_binom(n: i32, r: i32) -> Result<LaurentPoly> {
    if r < 0 || n < 0 {
        return Err(Error::InvalidSpec(format!("q_binom({n},{r}) needs 0 <= r")));
    }
    if r > n {
        return Ok(LaurentPoly::zero(1));
    }
    // Pascal recurrence: [n, r] = [n-1, r-1] + q^r [n-1, r].
    let mut row = vec![LaurentPoly::one(1)];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let left = if j >= 1 { row[(j - 1) as usize].clone() } else { LaurentPoly::zero(1) };
            let right = if j < m { &qpow2(2 * j) * &row[j as usize] } else { LaurentPoly::zero(1) };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row[r as usize].clone())
}

/// Product of polynomial factors over a product of polynomial factors.
#[derive(Clone, Debug)]
pub struct QRatio {
    num: Vec<LaurentPoly>,
    den: Vec<LaurentPoly>,
}

impl Default for QRatio {
    fn default() -> Self {
        Self::new()
    }
}

impl QRatio {
    pub fn new() -> Self {
        QRatio { num: vec![], den: vec![] }
    }

    pub fn times(mut self, p: LaurentPoly) -> Self {
        self.num.push(p);
        self
    }

    pub fn over(mut self, p: LaurentPoly) -> Self {
        self.den.push(p);
        self
    }

    /// Multiply by `[r]`; the `(1 - q)` is tracked symbolically.
    pub fn bracket(self, r: Half) -> Self {
        self.times(one_minus_q(r)).over(one_minus_q(Half(2)))
    }

    /// Divide by `[r]`.
    pub fn over_bracket(self, r: Half) -> Self {
        self.over(one_minus_q(r)).times(one_minus_q(Half(2)))
    }

    /// Multiply by `<r> = (1 - q^{2r})/(1 - q^r)`.
    pub fn angle(self, r: Half) -> Self {
        self.times(q_angle(r))
    }

    pub fn over_angle(self, r: Half) -> Self {
        self.over(q_angle(r))
    }

    pub fn ratio(self, num: Half, den: Half) -> Self {
        self.bracket(num).over_bracket(den)
    }

    pub fn mul(mut self, other: QRatio) -> Self {
        self.num.extend(other.num);
        self.den.extend(other.den);
        self
    }

    /// Multiply everything out and divide exactly.
    pub fn eval(&self) -> Result<LaurentPoly> {
        let mut n = LaurentPoly::one(1);
        for p in &self.num {
            n = &n * p;
        }
        let mut d = LaurentPoly::one(1);
        for p in &self.den {
            d = &d * p;
        }
        n.div_exact(&d)
    }

    pub fn numerator(&self) -> LaurentPoly {
        self.num.iter().fold(LaurentPoly::one(1), |a, p| &a * p)
    }

    pub fn denominator(&self) -> LaurentPoly {
        self.den.iter().fold(LaurentPoly::one(1), |a, p| &a * p)
    }
}

/// Value of a q-polynomial at q = 1.
pub fn at_one(p: &LaurentPoly) -> Rational {
    p.coeff_sum()
}

/// `q`-polynomial text with ascending powers, e.g. `1 + q`.
pub fn q_text(p: &LaurentPoly) -> String {
    p.to_text_with(&["q".to_string()], true)
}

pub fn q_parse(s: &str) -> Result<LaurentPoly> {
    LaurentPoly::parse_with(s, &["q".to_string()])
}

/// `(q - 1)^e`.
pub fn q_minus_one_pow(e: u32) -> LaurentPoly {
    (&qpow2(2) - &LaurentPoly::one(1)).pow(e)
}

pub fn q_const(c: i64) -> LaurentPoly {
    LaurentPoly::constant(1, rat(c))
}
