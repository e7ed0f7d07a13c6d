//! The intermediate symplectic character `sp^{(k,n-k)}_λ` by every route.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{ExpVec, LaurentPoly, PolyMatrix, Rational};
use crate::shapes::{frobenius, hook, Partition};

use super::ninth::{e_knk_series, EknkTable};
use super::symmetric::{alphabet, at, h_series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    TableauSum,
    JT1,
    JT2,
    JT3,
    BialtA,
    BialtAbar,
    Giambelli,
    DualJT1,
    DualJT2,
    UnivSC,
}

impl Method {
    pub const ALL: [Method; 10] = [
        Method::TableauSum,
        Method::JT1,
        Method::JT2,
        Method::JT3,
        Method::BialtA,
        Method::BialtAbar,
        Method::Giambelli,
        Method::DualJT1,
        Method::DualJT2,
        Method::UnivSC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::TableauSum => "tableau",
            Method::JT1 => "jt1",
            Method::JT2 => "jt2",
            Method::JT3 => "jt3",
            Method::BialtA => "bialt",
            Method::BialtAbar => "bialt-bar",
            Method::Giambelli => "giambelli",
            Method::DualJT1 => "dual-jt1",
            Method::DualJT2 => "dual-jt2",
            Method::UnivSC => "univ-sc",
        }
    }

    /// JT3, DualJT2 and UnivSC need `l(λ) <= k + 1`.
    pub fn applies(self, lam: &Partition, k: usize) -> bool {
        match self {
            Method::JT3 | Method::DualJT2 | Method::UnivSC => lam.len() <= k + 1,
            _ => true,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .iter()
            .copied()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharSpec {
    pub lambda: Partition,
    pub n: usize,
    pub k: usize,
    pub method: Method,
}

impl CharSpec {
    pub fn new(lambda: Partition, n: usize, k: usize, method: Method) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidSpec(format!("k = {k} exceeds n = {n}")));
        }
        if lambda.len() > n {
            return Err(Error::InvalidSpec(format!("l({lambda}) exceeds n = {n}")));
        }
        if !method.applies(&lambda, k) {
            return Err(Error::InvalidSpec(format!("{method} needs l(λ) <= k + 1")));
        }
        Ok(CharSpec { lambda, n, k, method })
    }
}

pub fn intsymp_char(spec: &CharSpec) -> Result<LaurentPoly> {
    let CharSpec { lambda, n, k, method } = spec;
    let (n, k) = (*n, *k);
    CharSpec::new(lambda.clone(), n, k, *method)?;
    match method {
        Method::TableauSum => tableau_sum(lambda, k, n),
        Method::JT1 => jt1(lambda, k, n),
        Method::JT2 => jt2(lambda, k, n),
        Method::JT3 => jt3(lambda, k, n),
        Method::BialtA => bialt_a(lambda, k, n),
        Method::BialtAbar => bialt_abar(lambda, k, n),
        Method::Giambelli => giambelli(lambda, k, n),
        Method::DualJT1 => dual_jt1(lambda, k, n),
        Method::DualJT2 => dual_jt2(lambda, k, n),
        Method::UnivSC => univ_sc(lambda, k, n),
    }
}

/// Shorthand for the tableau-sum route.
pub fn sp_kn(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    intsymp_char(&CharSpec::new(lam.clone(), n, k, Method::TableauSum)?)
}

fn lam_i(lam: &Partition, i: usize) -> i64 {
    lam.get(i) as i64
}

/// The character as a generating function of horizontal-strip chains. The
/// letters are added in alphabet order; a letter with index `i` may only
/// occupy rows `1..=i`. Coefficients are counts, so the inner map carries
/// machine integers.
pub fn tableau_sum(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    if lam.len() > n || k > n {
        return Err(Error::ShapeMismatch(format!("need l({lam}) <= n = {n} and k <= n")));
    }
    let len = lam.len();
    let target: Vec<u32> = lam.padded(len);
    let mut states: HashMap<Vec<u32>, HashMap<Vec<i32>, u64>> = HashMap::new();
    states.insert(vec![0; len], [(vec![0; n], 1u64)].into_iter().collect());
    let mut letters: Vec<(usize, i32)> = Vec::new();
    for i in 1..=n {
        letters.push((i, 2));
        if i <= k {
            letters.push((i, -2));
        }
    }
    for &(index, sign) in &letters {
        let rows = index.min(len);
        let mut next: HashMap<Vec<u32>, HashMap<Vec<i32>, u64>> = HashMap::new();
        for (mu, poly) in &states {
            let mut nu = mu.clone();
            strips(&target, mu, &mut nu, 0, rows, &mut |nu, added| {
                let entry = next.entry(nu.to_vec()).or_default();
                for (e, c) in poly {
                    let mut e = e.clone();
                    e[index - 1] += sign * added as i32;
                    *entry.entry(e).or_insert(0) += c;
                }
            });
        }
        states = next;
    }
    let mut out = LaurentPoly::zero(n);
    if let Some(poly) = states.get(&target) {
        for (e, c) in poly {
            out.add_term(ExpVec(e.clone()), Rational::from_integer(BigInt::from(*c)));
        }
    }
    Ok(out)
}

/// Every horizontal strip `ν/μ` inside `target` touching only rows `< rows`.
fn strips(target: &[u32], mu: &[u32], nu: &mut Vec<u32>, r: usize, rows: usize, f: &mut dyn FnMut(&[u32], u32)) {
    if r == rows {
        let added = nu.iter().zip(mu).map(|(a, b)| a - b).sum();
        f(nu, added);
        return;
    }
    let cap = if r == 0 { target[0] } else { target[r].min(mu[r - 1]) };
    for v in mu[r]..=cap {
        nu[r] = v;
        strips(target, mu, nu, r + 1, rows, f);
    }
    nu[r] = mu[r];
}

fn series_len(lam: &Partition, extra: usize) -> usize {
    lam.first() as usize + extra + 1
}

pub fn jt1(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    let up = series_len(lam, n);
    let cols: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|j| {
            let alph = if j < k { alphabet(n, j..k, k..n) } else { alphabet(n, 0..0, j..n) };
            h_series(&alph, n, up)
        })
        .collect();
    PolyMatrix::from_fn(n, n, |i, j| at(&cols[j], lam_i(lam, i) - i as i64 + j as i64, n)).det_in(n)
}

/// Entries of `H^{(k,n-k)}_λ` with `size` rows and columns; the columns past
/// `k` exist only when `size = n`.
fn h_matrix(lam: &Partition, k: usize, n: usize, size: usize, plain_tail: bool) -> Result<LaurentPoly> {
    let up = series_len(lam, size);
    let full = h_series(&alphabet(n, 0..k, k..n), n, up);
    let tail = h_series(&alphabet(n, 0..0, k..n), n, up);
    PolyMatrix::from_fn(size, size, |i, j| {
        // r = λ_i - i in 1-based indexing
        let r = lam_i(lam, i) - i as i64 - 1;
        if j == 0 {
            at(&full, r + 1, n)
        } else if !plain_tail || j < k {
            &at(&full, r + j as i64 + 1, n) + &at(&full, r - j as i64 + 1, n)
        } else {
            at(&tail, r + j as i64 + 1, n)
        }
    })
    .det_in(n)
}

pub fn jt2(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    h_matrix(lam, k, n, n, true)
}

pub fn jt3(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    if lam.len() > k + 1 {
        return Err(Error::InvalidSpec("jt3 needs l(λ) <= k + 1".into()));
    }
    h_matrix(lam, k, n, lam.len(), false)
}

/// `s^C_λ(X)` over an explicit alphabet, from its defining determinant.
pub fn universal_symplectic_schur(lam: &Partition, alph: &[LaurentPoly], arity: usize) -> Result<LaurentPoly> {
    let l = lam.len();
    let h = h_series(alph, arity, series_len(lam, l));
    PolyMatrix::from_fn(l, l, |i, j| {
        let r = lam_i(lam, i) - i as i64 - 1;
        if j == 0 {
            at(&h, r + 1, arity)
        } else {
            &at(&h, r + j as i64 + 1, arity) + &at(&h, r - j as i64 + 1, arity)
        }
    })
    .det_in(arity)
}

pub fn univ_sc(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    if lam.len() > k + 1 {
        return Err(Error::InvalidSpec("univ-sc needs l(λ) <= k + 1".into()));
    }
    universal_symplectic_schur(lam, &alphabet(n, 0..k, k..n), n)
}

/// Entries `a_{ij}` of `A^{(k,n-k)}_λ`.
fn a_matrix(lam: &Partition, k: usize, n: usize) -> PolyMatrix {
    let up = lam.first() as usize + k + 1;
    let pos: Vec<Vec<LaurentPoly>> = (0..k)
        .map(|j| h_series(&[vec![LaurentPoly::var(n, j)], alphabet(n, 0..0, k..n)].concat(), n, up))
        .collect();
    let neg: Vec<Vec<LaurentPoly>> = (0..k)
        .map(|j| h_series(&[vec![LaurentPoly::var_pow(n, j, -1)], alphabet(n, 0..0, k..n)].concat(), n, up))
        .collect();
    PolyMatrix::from_fn(n, n, |i, j| {
        if j < k {
            let r = lam_i(lam, i) + k as i64 - i as i64;
            &at(&pos[j], r, n) - &at(&neg[j], r, n)
        } else {
            LaurentPoly::var_pow(n, j, (lam_i(lam, i) + n as i64 - i as i64 - 1) as i32)
        }
    })
}

pub fn bialt_a(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    let num = a_matrix(lam, k, n).det_in(n)?;
    let den = a_matrix(&Partition::empty(), k, n).det_in(n)?;
    num.div_exact(&den)
}

/// `Ā_λ` with column `j <= k` multiplied by `∏_{l>k} (1 - x_j^{-1} x_l)(1 - x_j x_l)`,
/// which keeps every entry a Laurent polynomial and cancels in the quotient.
pub fn abar_cleared(lam: &Partition, k: usize, n: usize) -> PolyMatrix {
    let one = LaurentPoly::one(n);
    let prod = |j: usize, s: i32| {
        (k..n).fold(one.clone(), |acc, l| {
            let t = &LaurentPoly::var_pow(n, j, s) * &LaurentPoly::var(n, l);
            &acc * &(&one - &t)
        })
    };
    let with_plus: Vec<LaurentPoly> = (0..k).map(|j| prod(j, 1)).collect();
    let with_minus: Vec<LaurentPoly> = (0..k).map(|j| prod(j, -1)).collect();
    PolyMatrix::from_fn(n, n, |i, j| {
        if j < k {
            let e = (lam_i(lam, i) + k as i64 - i as i64) as i32;
            &(&LaurentPoly::var_pow(n, j, e) * &with_plus[j]) - &(&LaurentPoly::var_pow(n, j, -e) * &with_minus[j])
        } else {
            LaurentPoly::var_pow(n, j, (lam_i(lam, i) + n as i64 - i as i64 - 1) as i32)
        }
    })
}

pub fn bialt_abar(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    let num = abar_cleared(lam, k, n).det_in(n)?;
    let den = abar_cleared(&Partition::empty(), k, n).det_in(n)?;
    num.div_exact(&den)
}

pub fn giambelli(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    let f = frobenius(lam);
    let r = f.rank();
    let mut entries = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            let h = hook(f.arms[i], f.legs[j]);
            entries.push(if h.len() > n { LaurentPoly::zero(n) } else { tableau_sum(&h, k, n)? });
        }
    }
    PolyMatrix::new(r, r, entries)?.det_in(n)
}

pub fn dual_jt1(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    let c = lam.conjugate();
    let size = lam.first() as usize;
    let table = EknkTable::new(k, n, c.first() as usize + size + 1);
    PolyMatrix::from_fn(size, size, |i, j| {
        let base = c.get(i) as i64 - i as i64 + j as i64;
        let mut acc = LaurentPoly::zero(n);
        for m in 0..=j as i64 {
            acc += &table.get(base - 2 * m, m);
        }
        acc
    })
    .det_in(n)
}

pub fn dual_jt2(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    if lam.len() > k + 1 {
        return Err(Error::InvalidSpec("dual-jt2 needs l(λ) <= k + 1".into()));
    }
    let c = lam.conjugate();
    let size = lam.first() as usize;
    // e° vanishes past degree 2k + 2, so m = -(k + 2) keeps every term.
    let e0 = e_knk_series(-(k as i64) - 2, k, n, c.first() as usize + size + 1);
    PolyMatrix::from_fn(size, size, |i, j| {
        let r = c.get(i) as i64 - i as i64 - 1;
        if j == 0 {
            at(&e0, r + 1, n)
        } else {
            &at(&e0, r + j as i64 + 1, n) + &at(&e0, r - j as i64 + 1, n)
        }
    })
    .det_in(n)
}
