//! Generating functions of shifted plane partitions of double staircase
//! shape: closed products, weighted enumeration and the plain counts.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::intsymp::tableau_sum;
use crate::error::{Error, Result};
use crate::ring::qseries::{one_minus_q, q_angle, q_minus_one_pow, qpow2, Half, QRatio};
use crate::ring::{LaurentPoly, Rational};
use crate::shapes::spp::{for_each_spp, spp_statistics, ProfileFilter};
use crate::shapes::{shape_family, Family, Partition, StrictPartition};

use super::special::{binom_square_sum, Grid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Weight {
    V,
    W,
}

impl Weight {
    pub fn grid(self) -> Grid {
        match self {
            Weight::V => Grid::Half,
            Weight::W => Grid::Integer,
        }
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v" | "V" => Ok(Weight::V),
            "w" | "W" => Ok(Weight::W),
            _ => Err(Error::Parse(format!("unknown weight {s}"))),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Weight::V => "v",
            Weight::W => "w",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GFCase {
    pub n: usize,
    pub k: usize,
    pub m: u32,
    pub a: u32,
    pub family: Family,
    pub weight: Weight,
}

impl GFCase {
    pub fn new(n: usize, k: usize, m: u32, a: u32, family: Family, weight: Weight) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidSpec(format!("k = {k} exceeds n = {n}")));
        }
        match family {
            Family::Even if m % 2 == 1 => return Err(Error::InvalidSpec("Even needs m even".into())),
            Family::EvenPrime | Family::OddPrime if m == 0 => {
                return Err(Error::InvalidSpec("Even' and Odd' need m > 0".into()))
            }
            _ => {}
        }
        Ok(GFCase { n, k, m, a, family, weight })
    }

    /// Every valid case in the box, for both weights and all families.
    pub fn sweep(n_max: usize, m_max: u32, a_max: u32) -> Vec<GFCase> {
        let mut out = Vec::new();
        for n in 1..=n_max {
            for k in 0..=n {
                for m in 0..=m_max {
                    for a in 0..=a_max {
                        for family in [Family::Par, Family::Even, Family::EvenPrime, Family::OddPrime] {
                            for weight in [Weight::V, Weight::W] {
                                if let Ok(c) = GFCase::new(n, k, m, a, family, weight) {
                                    out.push(c);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn bracket(r: &mut QRatio, num2: i32, den2: i32) {
    *r = std::mem::take(r).ratio(Half(num2), Half(den2));
}

/// `[r]` numerators only, each carrying one `(1 - q)` in the denominator.
fn brackets_num(rs: impl IntoIterator<Item = i32>) -> (LaurentPoly, u32) {
    let mut p = LaurentPoly::one(1);
    let mut c = 0;
    for r2 in rs {
        p = &p * &one_minus_q(Half(r2));
        c += 1;
    }
    (p, c)
}

fn angles(rs: impl IntoIterator<Item = i32>) -> LaurentPoly {
    rs.into_iter().fold(LaurentPoly::one(1), |p, r2| &p * &q_angle(Half(r2)))
}

/// The closed product for the case, all divisions resolved exactly.
pub fn gf_closed_form(case: &GFCase) -> Result<LaurentPoly> {
    let GFCase { n, k, m, a, family, weight } = *case;
    let (n_, k_, m_, a_) = (n as i32, k as i32, m as i32, a as i32);
    // all exponents and bracket arguments below are doubled
    let pre = match weight {
        Weight::V => a_ * n_ * n_ - (m_ + 2 * a_) * k_ * k_,
        Weight::W => a_ * n_ * (n_ + 1) - (m_ + 2 * a_) * k_ * (k_ + 1),
    };
    let mut r = QRatio::new().times(qpow2(pre));
    let lt = |t: i32| (1..=t).flat_map(move |i| (i + 1..=t).map(move |j| (i, j)));
    let le = |t: i32| (1..=t).flat_map(move |i| (i..=t).map(move |j| (i, j)));
    let mm = 2 * m_;
    match (family, weight) {
        (Family::Par, Weight::V) | (Family::Even, Weight::V) => {
            let shift = if family == Family::Par { 1 } else { 0 };
            for i in 1..=n_ {
                bracket(&mut r, m_ + 2 * i - shift, 2 * i - shift);
            }
            for (i, j) in lt(n_) {
                bracket(&mut r, mm + 2 * (i + j) - 2 * shift, 2 * (i + j) - 2 * shift);
            }
            for i in 1..=k_ {
                bracket(&mut r, m_ + 2 * a_ + 2 * i, 2 * i);
            }
            for (i, j) in lt(k_) {
                bracket(&mut r, mm + 4 * a_ + 2 * (i + j), 2 * (i + j));
            }
        }
        (Family::Par, Weight::W) | (Family::Even, Weight::W) => {
            let shift = if family == Family::Par { 1 } else { 0 };
            for (i, j) in le(n_) {
                bracket(&mut r, mm + 2 * (i + j - shift), 2 * (i + j - shift));
            }
            for (i, j) in le(k_) {
                bracket(&mut r, mm + 4 * a_ + 2 * (i + j), 2 * (i + j));
            }
        }
        (Family::EvenPrime | Family::OddPrime, _) => {
            let (a_part, b_part) = prime_parts(case)?;
            let p = if family == Family::EvenPrime { &a_part + &b_part } else { &a_part - &b_part };
            return checked(case, p);
        }
    }
    checked(case, r.eval()?)
}

fn checked(case: &GFCase, p: LaurentPoly) -> Result<LaurentPoly> {
    if !p.has_nonnegative_integer_coeffs() {
        return Err(Error::NotACount(format!("{case:?}")));
    }
    Ok(p)
}

/// The two summands of the brace for Even'/Odd', each with the common
/// prefactor: Even' is `A + B` and Odd' is `A - B`.
pub fn prime_parts(case: &GFCase) -> Result<(LaurentPoly, LaurentPoly)> {
    let GFCase { n, k, m, a, weight, .. } = *case;
    if m == 0 {
        return Err(Error::InvalidSpec("Even' and Odd' need m > 0".into()));
    }
    let (n_, k_, m_, a_) = (n as i32, k as i32, m as i32, a as i32);
    let mm = 2 * m_;
    let lt = |t: i32| (1..=t).flat_map(move |i| (i + 1..=t).map(move |j| (i, j)));
    let mut r = QRatio::new();
    // (q - 1)^{n-k} (-1)^n
    let mut tail = q_minus_one_pow((n - k) as u32);
    if n % 2 == 1 {
        tail = -&tail;
    }
    let (first, c1, second, c2) = match weight {
        Weight::V => {
            r = r.times(qpow2(a_ * n_ * n_ - (m_ + 2 * a_) * k_ * k_));
            for i in 1..=k_ {
                r = r.over_bracket(Half(2 * (2 * i - 1)));
            }
            for (i, j) in lt(n_) {
                bracket(&mut r, mm + 2 * (i + j - 2), 2 * (i + j - 1));
            }
            for (i, j) in lt(k_) {
                bracket(&mut r, mm + 4 * a_ + 2 * (i + j), 2 * (i + j - 1));
            }
            let (b1, c1) = brackets_num((1..=k_).map(|i| m_ + 2 * a_ + 2 * i));
            let first = &angles((1..=n_).map(|i| m_ + 2 * (i - 1))) * &b1;
            let (b2, c2) = brackets_num((1..=n_).map(|i| m_ + 2 * (i - 1)));
            let second = &(&b2 * &angles((1..=k_).map(|i| m_ + 2 * a_ + 2 * i))) * &tail;
            (first, c1, second, c2)
        }
        Weight::W => {
            r = r.times(qpow2(a_ * n_ * (n_ + 1) - (m_ + 2 * a_) * k_ * (k_ + 1)));
            for i in 1..=k_ {
                r = r.over_bracket(Half(4 * i));
            }
            for (i, j) in lt(n_) {
                bracket(&mut r, mm + 2 * (i + j - 2), 2 * (i + j));
            }
            for (i, j) in lt(k_) {
                bracket(&mut r, mm + 4 * a_ + 2 * (i + j), 2 * (i + j));
            }
            let (b1, c1) = brackets_num((1..=k_).map(|i| mm + 4 * a_ + 4 * i));
            let first = &binom_square_sum(n, mm)? * &b1;
            let (b2, c2) = brackets_num((1..=n_).map(|i| mm + 4 * i - 4));
            // the second sum runs over q^{(m+2a+2)l + l(l-1)}, from o^D of (m/2+a+1)^k
            let second = &(&b2 * &binom_square_sum(k, mm + 4 * a_ + 4)?) * &tail;
            (first, c1, second, c2)
        }
    };
    // the displayed products count each SPP twice; the half comes from the
    // 1/2 in front of the Even'/Odd' character sums
    let r = r.over(LaurentPoly::from_int(1, 2));
    let part = |p: LaurentPoly, c: u32| {
        let mut s = r.clone().times(p);
        for _ in 0..c {
            s = s.over(one_minus_q(Half(2)));
        }
        s.eval()
    };
    Ok((part(first, c1)?, part(second, c2)?))
}

fn profiles(case: &GFCase) -> HashSet<Partition> {
    shape_family(case.m, case.n, case.family).into_iter().map(|l| l.plus_rect(case.a, case.n)).collect()
}

/// `Σ q^{v(σ)}` or `Σ q^{w(σ)}` over the shifted plane partitions of shape
/// `δ_n + δ_k` with profile in `(a^n) + family`.
pub fn gf_enumerated(case: &GFCase) -> Result<LaurentPoly> {
    let mu = StrictPartition::double_staircase(case.n, case.k);
    let set = profiles(case);
    let mut counts: std::collections::BTreeMap<i64, i64> = Default::default();
    let mut err = None;
    for_each_spp(&mu, case.a + case.m, ProfileFilter::Only(&set), |s| match spp_statistics(s, case.k, case.n) {
        Ok(st) => {
            let e = match case.weight {
                Weight::V => st.v2,
                Weight::W => 2 * st.w,
            };
            *counts.entry(e).or_default() += 1;
        }
        Err(e) => err = Some(e),
    });
    if let Some(e) = err {
        return Err(e);
    }
    let mut p = LaurentPoly::zero(1);
    for (e, c) in counts {
        p += &(&qpow2(e as i32) * &LaurentPoly::from_int(1, c));
    }
    Ok(p)
}

/// Number of shifted plane partitions in the family, without weights.
pub fn family_count(case: &GFCase) -> u64 {
    let mu = StrictPartition::double_staircase(case.n, case.k);
    let set = profiles(case);
    let mut c = 0u64;
    for_each_spp(&mu, case.a + case.m, ProfileFilter::Only(&set), |_| c += 1);
    c
}

/// `∏_{i≤j≤n} (m+i+j-1)/(i+j-1) ∏_{i≤j≤k} (m+i+j)/(i+j)`, asserted integral.
pub fn hopkins_lai_count(n: usize, k: usize, m: u32) -> Result<BigInt> {
    if k > n {
        return Err(Error::InvalidSpec(format!("k = {k} exceeds n = {n}")));
    }
    let mut r = Rational::one();
    let m = m as i64;
    for i in 1..=n as i64 {
        for j in i..=n as i64 {
            r *= Rational::new((m + i + j - 1).into(), (i + j - 1).into());
        }
    }
    for i in 1..=k as i64 {
        for j in i..=k as i64 {
            r *= Rational::new((m + i + j).into(), (i + j).into());
        }
    }
    if !r.is_integer() {
        return Err(Error::NotACount(format!("Hopkins-Lai product {r} at n={n} k={k} m={m}")));
    }
    Ok(r.to_integer())
}

/// `|AP^m(S(δ_n + δ_k))|` by enumeration.
pub fn spp_count(n: usize, k: usize, m: u32) -> u64 {
    let mu = StrictPartition::double_staircase(n, k);
    let mut c = 0u64;
    for_each_spp(&mu, m, ProfileFilter::All, |_| c += 1);
    c
}

/// The MacMahon product `∏[m/2+i-1/2]/[i-1/2] ∏_{i<j}[m+i+j-1]/[i+j-1]`.
pub fn macmahon_product(n: usize, m: u32) -> Result<LaurentPoly> {
    qhl_product(n, 0, m, Weight::V)
}

/// The Bender–Knuth product `∏_{i≤j}[m+i+j-1]/[i+j-1]`.
pub fn bender_knuth_product(n: usize, m: u32) -> Result<LaurentPoly> {
    qhl_product(n, 0, m, Weight::W)
}

/// The two q-analogues of the Hopkins–Lai product.
pub fn qhl_product(n: usize, k: usize, m: u32, weight: Weight) -> Result<LaurentPoly> {
    let (n_, k_, m_) = (n as i32, k as i32, m as i32);
    let mut r = QRatio::new();
    match weight {
        Weight::V => {
            r = r.times(qpow2(-m_ * k_ * k_));
            for i in 1..=n_ {
                bracket(&mut r, m_ + 2 * i - 1, 2 * i - 1);
            }
            for i in 1..=n_ {
                for j in i + 1..=n_ {
                    bracket(&mut r, 2 * (m_ + i + j - 1), 2 * (i + j - 1));
                }
            }
            for i in 1..=k_ {
                bracket(&mut r, m_ + 2 * i, 2 * i);
            }
            for i in 1..=k_ {
                for j in i + 1..=k_ {
                    bracket(&mut r, 2 * (m_ + i + j), 2 * (i + j));
                }
            }
        }
        Weight::W => {
            r = r.times(qpow2(-m_ * k_ * (k_ + 1)));
            for i in 1..=n_ {
                for j in i..=n_ {
                    bracket(&mut r, 2 * (m_ + i + j - 1), 2 * (i + j - 1));
                }
            }
            for i in 1..=k_ {
                for j in i..=k_ {
                    bracket(&mut r, 2 * (m_ + i + j), 2 * (i + j));
                }
            }
        }
    }
    r.eval()
}

/// Weighted enumeration over every SPP with entries at most `m`.
pub fn spp_gf(n: usize, k: usize, m: u32, weight: Weight) -> Result<LaurentPoly> {
    gf_enumerated(&GFCase::new(n, k, m, 0, Family::Par, weight)?)
}

/// At `k = 0` the enumerations equal the MacMahon and Bender–Knuth products,
/// and for every `k ≤ n` they equal the two q-analogues of Hopkins–Lai.
pub fn macmahon_bk_check(n: usize, m: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be positive".into()));
    }
    let mut ok = spp_gf(n, 0, m, Weight::V)? == macmahon_product(n, m)?
        && spp_gf(n, 0, m, Weight::W)? == bender_knuth_product(n, m)?;
    for k in 0..=n {
        for weight in [Weight::V, Weight::W] {
            ok &= spp_gf(n, k, m, weight)? == qhl_product(n, k, m, weight)?;
        }
    }
    Ok(ok)
}

/// The tableau generating function of `λ` at the two specializations of the
/// bijection, against `Σ q^{v}` and `Σ q^{w}` over SPPs with profile `λ`.
pub fn specialization_transport(lam: &Partition, k: usize, n: usize) -> Result<bool> {
    let t = tableau_sum(lam, k, n)?;
    let mu = StrictPartition::double_staircase(n, k);
    let set: HashSet<Partition> = [lam.clone()].into_iter().collect();
    let (mut v, mut w) = (LaurentPoly::zero(1), LaurentPoly::zero(1));
    let mut err = None;
    for_each_spp(&mu, lam.first(), ProfileFilter::Only(&set), |s| match spp_statistics(s, k, n) {
        Ok(st) => {
            v += &qpow2(st.v2 as i32);
            w += &qpow2(2 * st.w as i32);
        }
        Err(e) => err = Some(e),
    });
    if let Some(e) = err {
        return Err(e);
    }
    // x_i = q^{k-i+1/2} (i ≤ k), q^{n+k-i+1/2} (i > k); doubled, then +1/2 dropped for w
    let e2 = |i: usize| if i <= k { 2 * (k as i32 - i as i32) + 1 } else { 2 * (n as i32 + k as i32 - i as i32) + 1 };
    let vals_v: Vec<LaurentPoly> = (1..=n).map(|i| qpow2(e2(i))).collect();
    let vals_w: Vec<LaurentPoly> = (1..=n).map(|i| qpow2(e2(i) + 1)).collect();
    Ok(t.specialize(&vals_v)? == v && t.specialize(&vals_w)? == w)
}

#[derive(Clone, Debug, Serialize)]
pub struct GfReport {
    pub case: GFCase,
    pub closed: String,
    pub enumerated: String,
    pub count: u64,
    pub closed_at_one: String,
    pub equal: bool,
}

pub fn verify_gf(case: &GFCase) -> Result<GfReport> {
    let closed = gf_closed_form(case)?;
    let enumerated = gf_enumerated(case)?;
    let count = family_count(case);
    let at_one = closed.coeff_sum();
    let equal = closed == enumerated && at_one == Rational::from_integer(BigInt::from(count));
    Ok(GfReport {
        case: *case,
        closed: crate::ring::qseries::q_text(&closed),
        enumerated: crate::ring::qseries::q_text(&enumerated),
        count,
        closed_at_one: crate::ring::poly::fmt_rational(&at_one),
        equal,
    })
}

/// Runs [`verify_gf`] over the cases in parallel, keeping the input order.
pub fn verify_gf_all(cases: &[GFCase]) -> Vec<Result<GfReport>> {
    cases.par_iter().map(verify_gf).collect()
}

/// `(Even' + Odd')/2` and `(Even' - Odd')/2` from enumeration against the
/// two brace summands of the closed form.
pub fn prime_pair_check(n: usize, k: usize, m: u32, a: u32, weight: Weight) -> Result<bool> {
    let e = GFCase::new(n, k, m, a, Family::EvenPrime, weight)?;
    let o = GFCase::new(n, k, m, a, Family::OddPrime, weight)?;
    let (pa, pb) = prime_parts(&e)?;
    let ee = gf_enumerated(&e)?;
    let eo = gf_enumerated(&o)?;
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    Ok(pa == (&ee + &eo).scale(&half) && pb == (&ee - &eo).scale(&half))
}
