//! The four summation identities and the rectangular Schur corollary.

use std::time::Instant;

use serde::Serialize;

use crate::characters::classical::{orth_b_quotient, orth_d_quotient, symplectic_quotient};
use crate::characters::intsymp::tableau_sum;
use crate::error::{Error, Result};
use crate::ring::{rat, LaurentPoly, PolyMatrix, Quotient};
use crate::shapes::{Family, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MainIdentityCase {
    pub n: usize,
    pub k: usize,
    pub m: u32,
    pub a: u32,
    pub variant: u8,
}

impl MainIdentityCase {
    pub fn new(n: usize, k: usize, m: u32, a: u32, variant: u8) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidSpec(format!("k = {k} exceeds n = {n}")));
        }
        match variant {
            1 | 3 => {}
            2 if m.is_multiple_of(2) => {}
            2 => return Err(Error::InvalidSpec("variant 2 needs m even".into())),
            4 if m >= 1 => {}
            4 => return Err(Error::InvalidSpec("variant 4 needs m >= 1".into())),
            _ => return Err(Error::InvalidSpec(format!("unknown variant {variant}"))),
        }
        Ok(MainIdentityCase { n, k, m, a, variant })
    }

    /// Every admissible variant at `(n, k, m, a)`.
    pub fn variants(n: usize, k: usize, m: u32, a: u32) -> Vec<Self> {
        (1..=4).filter_map(|v| Self::new(n, k, m, a, v).ok()).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MainReport {
    pub case: MainIdentityCase,
    #[serde(skip)]
    pub lhs: LaurentPoly,
    #[serde(skip)]
    pub rhs: LaurentPoly,
    pub equal: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub millis: u128,
}

/// Coefficient of `λ` in the left side of the given variant.
///
/// At `m = 0` both primed families are `{∅}`; the empty partition is
/// counted once so that variant 3 is the factorization identity.
fn family_coeff(lam: &Partition, m: u32, variant: u8) -> i64 {
    let even = Family::EvenPrime.admits(lam, m) as i64;
    let odd = Family::OddPrime.admits(lam, m) as i64;
    match variant {
        1 => 1,
        2 => Family::Even.admits(lam, m) as i64,
        3 if m == 0 => 1,
        3 => even + odd,
        _ => even - odd,
    }
}

/// `Σ_λ c_λ · sp^{(k,n-k)}_{λ+(a^n)}` over `λ ⊆ (m^n)`.
pub fn main_lhs(case: &MainIdentityCase) -> Result<LaurentPoly> {
    let chars = rect_chars(case.n, case.k, case.m, case.a)?;
    Ok(combine(&chars, case.m, case.variant, case.n))
}

fn rect_chars(n: usize, k: usize, m: u32, a: u32) -> Result<Vec<(Partition, LaurentPoly)>> {
    Partition::in_rect(m, n)
        .into_iter()
        .map(|lam| {
            let c = tableau_sum(&lam.plus_rect(a, n), k, n)?;
            Ok((lam, c))
        })
        .collect()
}

fn combine(chars: &[(Partition, LaurentPoly)], m: u32, variant: u8, n: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(n);
    for (lam, c) in chars {
        match family_coeff(lam, m, variant) {
            0 => {}
            1 => acc += c,
            -1 => acc -= c,
            s => acc += &c.scale(&rat(s)),
        }
    }
    acc
}

fn embed_first(q: Quotient, k: usize, n: usize) -> Quotient {
    q.embed(n, &(0..k).collect::<Vec<_>>())
}

/// `∏_{i > k} x_i^{e2/2}`.
fn tail_monomial(k: usize, n: usize, e2: i32) -> LaurentPoly {
    (k..n).fold(LaurentPoly::one(n), |acc, i| &acc * &LaurentPoly::var_pow2(n, i, e2))
}

/// Divides out a character factor that is a Laurent polynomial on its own.
/// Symplectic factors with half-integral or negative weight wait for the
/// full product.
fn settle(q: Quotient, w2: i32) -> Result<Quotient> {
    if w2 < 0 || w2 % 2 != 0 {
        Ok(q)
    } else {
        Ok(Quotient::poly(q.value()?))
    }
}

pub fn main_rhs(case: &MainIdentityCase) -> Result<LaurentPoly> {
    let MainIdentityCase { n, k, m, a, variant } = *case;
    let (m, a) = (m as i32, a as i32);
    let rect = |r2: i32, len: usize| vec![r2; len];
    let sp_k = || -> Result<Quotient> {
        let q = settle(symplectic_quotient(&rect(m + 2 * a, k), k)?, m + 2 * a)?;
        Ok(embed_first(q, k, n))
    };
    let tail = tail_monomial(k, n, m + 2 * a);
    let q = match variant {
        1 => settle(orth_b_quotient(&rect(m, n), n)?, 0)?.times(&sp_k()?).times_poly(&tail),
        2 => settle(symplectic_quotient(&rect(m, n), n)?, m)?.times(&sp_k()?).times_poly(&tail),
        3 => settle(orth_d_quotient(&rect(m, n), n)?, 0)?.times(&sp_k()?).times_poly(&tail),
        _ => {
            let od = embed_first(settle(orth_d_quotient(&rect(m + 2 * a + 2, k), k)?, 0)?, k, n);
            let mut tail = tail;
            for i in k..n {
                tail = &tail * &(&LaurentPoly::var(n, i) - &LaurentPoly::var_pow(n, i, -1));
            }
            if n % 2 == 1 {
                tail = -&tail;
            }
            settle(symplectic_quotient(&rect(m - 2, n), n)?, m - 2)?.times(&od).times_poly(&tail)
        }
    };
    q.value()
}

fn report(case: MainIdentityCase, lhs: LaurentPoly, rhs: LaurentPoly, start: Instant) -> MainReport {
    MainReport {
        case,
        equal: lhs == rhs,
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        lhs,
        rhs,
        millis: start.elapsed().as_millis(),
    }
}

pub fn verify_main(case: &MainIdentityCase) -> Result<MainReport> {
    let start = Instant::now();
    let lhs = main_lhs(case)?;
    let rhs = main_rhs(case)?;
    Ok(report(*case, lhs, rhs, start))
}

/// All admissible variants at one `(n, k, m, a)`, sharing the character table.
pub fn verify_main_all(n: usize, k: usize, m: u32, a: u32) -> Result<Vec<MainReport>> {
    let start = Instant::now();
    let chars = rect_chars(n, k, m, a)?;
    MainIdentityCase::variants(n, k, m, a)
        .into_iter()
        .map(|case| {
            let lhs = combine(&chars, m, case.variant, n);
            let rhs = main_rhs(&case)?;
            Ok(report(case, lhs, rhs, start))
        })
        .collect()
}

/// `s_μ(y_1, ..., y_N)` at monomial values `y`, as a quotient of alternants
/// specialized before the division.
pub fn schur_at(mu: &Partition, values: &[LaurentPoly], arity: usize) -> Result<LaurentPoly> {
    let big = values.len();
    if mu.len() > big {
        return Ok(LaurentPoly::zero(arity));
    }
    let parts = mu.padded(big);
    let alt = |shift: &dyn Fn(usize) -> i64| -> Result<LaurentPoly> {
        let mut entries = Vec::with_capacity(big * big);
        for i in 0..big {
            for y in values {
                entries.push(y.powi(shift(i))?);
            }
        }
        PolyMatrix::new(big, big, entries)?.det_in(arity)
    };
    let num = alt(&|i| parts[i] as i64 + (big - 1 - i) as i64)?;
    let den = alt(&|i| (big - 1 - i) as i64)?;
    num.div_exact(&den)
}

/// `(x_1, x_1^{-1}, ..., x_p, x_p^{-1})` followed by the plain `x_{p+1}..` and optionally `1`.
pub fn pm_alphabet(n: usize, pm: usize, with_one: bool) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    for i in 0..pm {
        out.push(LaurentPoly::var(n, i));
        out.push(LaurentPoly::var_pow(n, i, -1));
    }
    for i in pm..n {
        out.push(LaurentPoly::var(n, i));
    }
    if with_one {
        out.push(LaurentPoly::one(n));
    }
    out
}

fn family_sum(m: u32, n: usize, k: usize, family: Family) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero(n);
    for lam in crate::shapes::shape_family(m, n, family) {
        acc += &tableau_sum(&lam, k, n)?;
    }
    Ok(acc)
}

/// Both sides of the `case_id`-th rectangular Schur identity, numbered in
/// display order.
pub fn main_schur_sides(n: usize, m: u32, case_id: u8) -> Result<(LaurentPoly, LaurentPoly)> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be positive".into()));
    }
    let even = n.is_multiple_of(2);
    let (same, other) = if even { (Family::EvenPrime, Family::OddPrime) } else { (Family::OddPrime, Family::EvenPrime) };
    let rect = Partition::rect(m, n);
    let short = Partition::rect(m, n - 1);
    let partial = pm_alphabet(n, n - 1, false);
    let full = pm_alphabet(n, n, false);
    Ok(match case_id {
        1 => (schur_at(&rect, &pm_alphabet(n, n - 1, true), n)?, family_sum(m, n, n - 1, Family::Par)?),
        2 => (schur_at(&rect, &pm_alphabet(n, n, true), n)?, family_sum(m, n, n, Family::Par)?),
        3 => (schur_at(&rect, &partial, n)?, family_sum(m, n, n - 1, same)?),
        4 => (schur_at(&short, &partial, n)?, family_sum(m, n, n - 1, other)?),
        5 => (schur_at(&rect, &full, n)?, family_sum(m, n, n, same)?),
        6 => (schur_at(&short, &full, n)?, family_sum(m, n, n, other)?),
        _ => return Err(Error::InvalidSpec(format!("case id {case_id} not in 1..=6"))),
    })
}

pub fn verify_main_schur(n: usize, m: u32, case_id: u8) -> Result<bool> {
    let (l, r) = main_schur_sides(n, m, case_id)?;
    Ok(l == r)
}

/// The six rectangular Schur factorizations; the `±` pairs need `m >= 1`.
pub fn rect_factorization_sides(n: usize, m: u32) -> Result<Vec<(LaurentPoly, LaurentPoly)>> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be positive".into()));
    }
    let m2 = m as i32;
    let rect = Partition::rect(m, n);
    let short = Partition::rect(m, n - 1);
    let partial = pm_alphabet(n, n - 1, false);
    let full = pm_alphabet(n, n, false);
    let r = |w: i32, len: usize| vec![w; len];
    let xn_half = LaurentPoly::var_pow2(n, n - 1, m2);
    let sp_short = || symplectic_quotient(&r(m2, n - 1), n - 1).map(|q| embed_first(q, n - 1, n));

    let mut out = vec![
        (
            schur_at(&rect, &pm_alphabet(n, n - 1, true), n)?,
            orth_b_quotient(&r(m2, n), n)?.times(&sp_short()?).times_poly(&xn_half).value()?,
        ),
        (
            schur_at(&rect, &pm_alphabet(n, n, true), n)?,
            orth_b_quotient(&r(m2, n), n)?.times(&symplectic_quotient(&r(m2, n), n)?).value()?,
        ),
    ];
    if m == 0 {
        return Ok(out);
    }
    let (a, b) = (schur_at(&rect, &partial, n)?, schur_at(&short, &partial, n)?);
    let (c, d) = (schur_at(&rect, &full, n)?, schur_at(&short, &full, n)?);
    let xn = LaurentPoly::var(n, n - 1);
    let twist = &xn_half * &(&xn - &LaurentPoly::var_pow(n, n - 1, -1));
    let sp_low = symplectic_quotient(&r(m2 - 2, n), n)?;
    out.push((&a + &b, orth_d_quotient(&r(m2, n), n)?.times(&sp_short()?).times_poly(&xn_half).value()?));
    out.push((
        &a - &b,
        sp_low
            .times(&embed_first(orth_d_quotient(&r(m2 + 2, n - 1), n - 1)?, n - 1, n))
            .times_poly(&twist)
            .value()?,
    ));
    out.push((&c + &d, orth_d_quotient(&r(m2, n), n)?.times(&symplectic_quotient(&r(m2, n), n)?).value()?));
    out.push((&c - &d, sp_low.times(&orth_d_quotient(&r(m2 + 2, n), n)?).value()?));
    Ok(out)
}

pub fn verify_rect_factorizations(n: usize, m: u32) -> Result<bool> {
    Ok(rect_factorization_sides(n, m)?.iter().all(|(l, r)| l == r))
}
