//! Macdonald's ninth variation and the dual Jacobi-Trudi ingredients
//! `e°_r` and `e^{(k,n-k)}_{r,m}`.

use crate::error::Result;
use crate::ring::{LaurentPoly, PolyMatrix};
use crate::shapes::{frobenius, hook, Partition};

use super::symmetric::{alphabet, at, e_series};

/// `s^{[p]}_λ = det( h^{[p+j-1]}_{λ_i-i+j} )` over `l(λ)` rows. The provider
/// is only asked for `r >= 1`.
pub fn ninth_schur(h: &dyn Fn(i64, i64) -> LaurentPoly, p: i64, lam: &Partition, arity: usize) -> Result<LaurentPoly> {
    let l = lam.len();
    PolyMatrix::from_fn(l, l, |i, j| {
        let r = lam.get(i) as i64 - i as i64 + j as i64;
        provided(h, p + j as i64, r, arity)
    })
    .det_in(arity)
}

fn provided(h: &dyn Fn(i64, i64) -> LaurentPoly, p: i64, r: i64, arity: usize) -> LaurentPoly {
    match r {
        r if r < 0 => LaurentPoly::zero(arity),
        0 => LaurentPoly::one(arity),
        r => h(p, r),
    }
}

/// `e^{[p]}_r = s^{[p]}_{(1^r)}`.
pub fn ninth_e(h: &dyn Fn(i64, i64) -> LaurentPoly, p: i64, r: i64, arity: usize) -> Result<LaurentPoly> {
    if r < 0 {
        return Ok(LaurentPoly::zero(arity));
    }
    ninth_schur(h, p, &Partition::rect(1, r as usize), arity)
}

/// Dual form `det( e^{[p-j+1]}_{λ'_i-i+j} )` over `λ_1` rows.
pub fn ninth_dual(h: &dyn Fn(i64, i64) -> LaurentPoly, p: i64, lam: &Partition, arity: usize) -> Result<LaurentPoly> {
    let c = lam.conjugate();
    let m = c.len();
    let mut entries = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            entries.push(ninth_e(h, p - j as i64, c.get(i) as i64 - i as i64 + j as i64, arity)?);
        }
    }
    PolyMatrix::new(m, m, entries)?.det_in(arity)
}

/// Giambelli form `det( s^{[p]}_{(α_i|β_j)} )`.
pub fn ninth_giambelli(h: &dyn Fn(i64, i64) -> LaurentPoly, p: i64, lam: &Partition, arity: usize) -> Result<LaurentPoly> {
    let f = frobenius(lam);
    let r = f.rank();
    let mut entries = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            entries.push(ninth_schur(h, p, &hook(f.arms[i], f.legs[j]), arity)?);
        }
    }
    PolyMatrix::new(r, r, entries)?.det_in(arity)
}

/// The specialization `h^{[p]}_r = h_r(x_p^{±1}, ..., x_k^{±1}, x_{k+1}, ..., x_n)`
/// (1-based `p`), `h_r(x_p, ..., x_n)` past `k`, and zero past `n`.
pub fn intsymp_provider(k: usize, n: usize) -> impl Fn(i64, i64) -> LaurentPoly {
    move |p, r| {
        if p > n as i64 {
            return LaurentPoly::zero(n);
        }
        let p0 = (p.max(1) - 1) as usize;
        let alph = if p0 < k { alphabet(n, p0..k, k..n) } else { alphabet(n, 0..0, p0..n) };
        super::symmetric::complete_h(r, &alph, n)
    }
}

/// Coefficients `e°_0 .. e°_upto` of `(1 - t^2) ∏_{i ≤ k} (1 + x_i t)(1 + x_i^{-1} t)`,
/// the symplectic letters given as 0-based variable indices.
pub fn e_circ_series(symp: &[usize], arity: usize, upto: usize) -> Vec<LaurentPoly> {
    let e = e_series(&alphabet(arity, symp.iter().copied(), 0..0), arity, upto);
    (0..=upto).map(|r| if r >= 2 { &e[r] - &e[r - 2] } else { e[r].clone() }).collect()
}

/// `e°_r(x_1^{±1}, ..., x_k^{±1})` in `k` variables.
pub fn e_circ(r: i64, k: usize) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero(k);
    }
    let idx: Vec<usize> = (0..k).collect();
    e_circ_series(&idx, k, r as usize).pop().unwrap()
}

/// `e^{(k,n-k)}_{r,m}` over explicit symplectic and plain letters.
pub fn e_knk_in(r: i64, m: i64, symp: &[usize], plain: &[usize], arity: usize) -> LaurentPoly {
    let k = symp.len() as i64;
    if r < 0 || k - m < 0 {
        return LaurentPoly::zero(arity);
    }
    let ec = e_circ_series(symp, arity, r as usize);
    let ez = e_series(&alphabet(arity, 0..0, plain.iter().copied()), arity, r as usize);
    let mut acc = LaurentPoly::zero(arity);
    for p in 0..=(k - m).min(r) {
        acc += &(&ec[p as usize] * &ez[(r - p) as usize]);
    }
    acc
}

/// `e^{(k,n-k)}_{r,m}(x_1..x_k | x_{k+1}..x_n)`.
pub fn e_knk(r: i64, m: i64, k: usize, n: usize) -> LaurentPoly {
    let symp: Vec<usize> = (0..k).collect();
    let plain: Vec<usize> = (k..n).collect();
    e_knk_in(r, m, &symp, &plain, n)
}

/// `e^{(k,n-k)}_{r,m}` for `r = 0..=upto` at a fixed `m`.
pub fn e_knk_series(m: i64, k: usize, n: usize, upto: usize) -> Vec<LaurentPoly> {
    EknkTable::new(k, n, upto).column(m)
}

/// Precomputed `e°` and plain `e` series for repeated lookups.
pub struct EknkTable {
    k: usize,
    n: usize,
    circ: Vec<LaurentPoly>,
    plain: Vec<LaurentPoly>,
}

impl EknkTable {
    pub fn new(k: usize, n: usize, upto: usize) -> Self {
        let symp: Vec<usize> = (0..k).collect();
        EknkTable {
            k,
            n,
            circ: e_circ_series(&symp, n, upto),
            plain: e_series(&alphabet(n, 0..0, k..n), n, upto),
        }
    }

    pub fn get(&self, r: i64, m: i64) -> LaurentPoly {
        let top = self.k as i64 - m;
        if r < 0 || top < 0 {
            return LaurentPoly::zero(self.n);
        }
        let mut acc = LaurentPoly::zero(self.n);
        for p in 0..=top.min(r) {
            acc += &(&at(&self.circ, p, self.n) * &at(&self.plain, r - p, self.n));
        }
        acc
    }

    pub fn column(&self, m: i64) -> Vec<LaurentPoly> {
        (0..self.circ.len() as i64).map(|r| self.get(r, m)).collect()
    }
}

/// Both three-term relations in a fresh symplectic variable `u`, plus the
/// `m = -1` convention. The second relation is only asserted for `r <= k + 1`.
pub fn rel_e_check(k: usize, n: usize, r: i64, m: i64) -> bool {
    // variables: x_1..x_k, x_{k+1}..x_n, then u
    let arity = n + 1;
    let u = n;
    let y: Vec<usize> = (0..k).collect();
    let z: Vec<usize> = (k..n).collect();
    let uy: Vec<usize> = std::iter::once(u).chain(y.iter().copied()).collect();
    let u_sum = &LaurentPoly::var(arity, u) + &LaurentPoly::var_pow(arity, u, -1);
    let e = |r: i64, m: i64, s: &[usize]| e_knk_in(r, m, s, &z, arity);
    let first = e(r, m, &uy) == &(&e(r, m - 1, &y) + &e(r - 2, m + 1, &y)) + &(&u_sum * &e(r - 1, m, &y));
    let conv = e(r, -1, &y) == e(r, 0, &y);
    let second = r > k as i64 + 1
        || e(r, 0, &uy) == &(&e(r, 0, &y) + &e(r - 2, 0, &y)) + &(&u_sum * &e(r - 1, 0, &y));
    first && conv && second
}
