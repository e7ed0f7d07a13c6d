//! Schur, symplectic and orthogonal characters as quotients of alternants.
//!
//! Weights are passed doubled so that half-partitions and the extended
//! symplectic weights ending in `-1/2` share one code path.

use num_traits::One;

use crate::error::{Error, Result};
use crate::ring::{rat, LaurentPoly, PolyMatrix, Quotient, Rational};

fn check_weight(w2: &[i32], n: usize, min2: i32) -> Result<Vec<i32>> {
    if w2.len() > n {
        return Err(Error::ShapeMismatch(format!("weight of length {} in {n} variables", w2.len())));
    }
    let mut w: Vec<i32> = w2.to_vec();
    w.resize(n, 0);
    if w.windows(2).any(|p| p[0] < p[1]) || w.iter().any(|&p| p < min2) {
        return Err(Error::InvalidSpec(format!("weight (doubled) {w2:?} is not admissible")));
    }
    if w.iter().any(|p| p % 2 != w[0] % 2) {
        return Err(Error::InvalidSpec("weight mixes integers and half-integers".into()));
    }
    Ok(w)
}

/// `det( x_j^{e_i} )` with doubled exponents.
fn alternant(n: usize, exps2: &[i32], f: impl Fn(usize, i32) -> LaurentPoly) -> Result<LaurentPoly> {
    PolyMatrix::from_fn(n, n, |i, j| f(j, exps2[i])).det_in(n)
}

fn minus(n: usize) -> impl Fn(usize, i32) -> LaurentPoly {
    move |j, e| &LaurentPoly::var_pow2(n, j, e) - &LaurentPoly::var_pow2(n, j, -e)
}

fn plus(n: usize) -> impl Fn(usize, i32) -> LaurentPoly {
    move |j, e| &LaurentPoly::var_pow2(n, j, e) + &LaurentPoly::var_pow2(n, j, -e)
}

pub fn schur_quotient(w2: &[i32], n: usize) -> Result<Quotient> {
    let w = check_weight(w2, n, 0)?;
    if w.iter().any(|p| p % 2 != 0) {
        return Err(Error::InvalidSpec("Schur weights are integral".into()));
    }
    let e: Vec<i32> = (0..n).map(|i| w[i] + 2 * (n - 1 - i) as i32).collect();
    let e0: Vec<i32> = (0..n).map(|i| 2 * (n - 1 - i) as i32).collect();
    let mono = |j, e| LaurentPoly::var_pow2(n, j, e);
    Ok(Quotient::new(alternant(n, &e, mono)?, alternant(n, &e0, mono)?))
}

/// Symplectic character; weights may be half-integral with last part `>= -1/2`.
pub fn symplectic_quotient(w2: &[i32], n: usize) -> Result<Quotient> {
    let w = check_weight(w2, n, -1)?;
    let e: Vec<i32> = (0..n).map(|i| w[i] + 2 * (n - i) as i32).collect();
    let e0: Vec<i32> = (0..n).map(|i| 2 * (n - i) as i32).collect();
    Ok(Quotient::new(alternant(n, &e, minus(n))?, alternant(n, &e0, minus(n))?))
}

pub fn orth_b_quotient(w2: &[i32], n: usize) -> Result<Quotient> {
    let w = check_weight(w2, n, 0)?;
    let e: Vec<i32> = (0..n).map(|i| w[i] + 2 * (n - 1 - i) as i32 + 1).collect();
    let e0: Vec<i32> = (0..n).map(|i| 2 * (n - 1 - i) as i32 + 1).collect();
    Ok(Quotient::new(alternant(n, &e, minus(n))?, alternant(n, &e0, minus(n))?))
}

pub fn orth_d_quotient(w2: &[i32], n: usize) -> Result<Quotient> {
    let w = check_weight(w2, n, 0)?;
    if n == 0 {
        return Ok(Quotient::one(0));
    }
    let e: Vec<i32> = (0..n).map(|i| w[i] + 2 * (n - 1 - i) as i32).collect();
    let e0: Vec<i32> = (0..n).map(|i| 2 * (n - 1 - i) as i32).collect();
    let q = Quotient::new(alternant(n, &e, plus(n))?, alternant(n, &e0, plus(n))?);
    Ok(if w[n - 1] > 0 { q.scale(&rat(2)) } else { q })
}

pub fn schur(w2: &[i32], n: usize) -> Result<LaurentPoly> {
    schur_quotient(w2, n)?.value()
}

pub fn symplectic(w2: &[i32], n: usize) -> Result<LaurentPoly> {
    symplectic_quotient(w2, n)?.value()
}

pub fn orth_b(w2: &[i32], n: usize) -> Result<LaurentPoly> {
    orth_b_quotient(w2, n)?.value()
}

pub fn orth_d(w2: &[i32], n: usize) -> Result<LaurentPoly> {
    orth_d_quotient(w2, n)?.value()
}

/// `(x^{1/2} y^{1/2} - x^{-1/2} y^{-1/2})(x^{1/2} y^{-1/2} - x^{-1/2} y^{1/2})`.
fn pair_factor(n: usize, i: usize, j: usize) -> LaurentPoly {
    let m = |a: i32, b: i32| {
        let mut e = vec![0; n];
        e[i] = a;
        e[j] = b;
        LaurentPoly::monomial(Rational::one(), crate::ring::ExpVec(e))
    };
    &(&m(1, 1) - &m(-1, -1)) * &(&m(1, -1) - &m(-1, 1))
}

/// Closed forms of the four denominators.
pub fn schur_denominator(n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            p = &p * &(&LaurentPoly::var(n, i) - &LaurentPoly::var(n, j));
        }
    }
    p
}

pub fn symplectic_denominator(n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::one(n);
    for i in 0..n {
        p = &p * &minus(n)(i, 2);
        for j in i + 1..n {
            p = &p * &pair_factor(n, i, j);
        }
    }
    p
}

pub fn orth_b_denominator(n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::one(n);
    for i in 0..n {
        p = &p * &minus(n)(i, 1);
        for j in i + 1..n {
            p = &p * &pair_factor(n, i, j);
        }
    }
    p
}

pub fn orth_d_denominator(n: usize) -> LaurentPoly {
    let mut p = LaurentPoly::constant(n, rat(2));
    for i in 0..n {
        for j in i + 1..n {
            p = &p * &pair_factor(n, i, j);
        }
    }
    p
}

/// The alternant denominators themselves, for comparison with the closed forms.
pub fn denominators(n: usize) -> Result<[LaurentPoly; 4]> {
    let z = vec![0; n];
    Ok([
        schur_quotient(&z, n)?.den,
        symplectic_quotient(&z, n)?.den,
        orth_b_quotient(&z, n)?.den,
        orth_d_quotient(&z, n)?.den,
    ])
}
