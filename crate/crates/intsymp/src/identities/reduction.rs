//! Multiplying by `x_1^m` and setting `x_1 = 0`.

use crate::characters::classical::{orth_b, orth_d, symplectic};
use crate::characters::intsymp::tableau_sum;
use crate::error::{Error, Result};
use crate::ring::{ExpVec, LaurentPoly};
use crate::shapes::Partition;

use super::main_thm::{main_lhs, main_rhs, MainIdentityCase};

/// `[x_1^{m2/2} p] |_{x_1 = 0}` as a polynomial in `x_2, ..., x_n`.
pub fn times_x1_at_zero(p: &LaurentPoly, m2: i32) -> Result<LaurentPoly> {
    let n = p.arity();
    if n == 0 {
        return Err(Error::InvalidSpec("no variable to truncate".into()));
    }
    let mut out = LaurentPoly::zero(n - 1);
    for (e, c) in p.terms() {
        let d = e.0[0] + m2;
        if d < 0 {
            return Err(Error::NotLaurent(format!("x1^{} survives after scaling", d as f64 / 2.0)));
        }
        if d == 0 {
            out.add_term(ExpVec(e.0[1..].to_vec()), c.clone());
        }
    }
    Ok(out)
}

/// `[x_1^m sp^{(k,n-k)}_λ] |_{x_1 = 0}`.
pub fn truncate_at_zero(lam: &Partition, k: usize, n: usize, m: u32) -> Result<LaurentPoly> {
    if k == 0 || k > n {
        return Err(Error::InvalidSpec(format!("need 0 < k <= n, got k = {k}, n = {n}")));
    }
    if lam.first() > m {
        return Err(Error::InvalidSpec(format!("λ1 = {} exceeds m = {m}", lam.first())));
    }
    times_x1_at_zero(&tableau_sum(lam, k, n)?, 2 * m as i32)
}

/// The value the reduction lemma predicts for [`truncate_at_zero`].
pub fn truncate_expected(lam: &Partition, k: usize, n: usize, m: u32) -> Result<LaurentPoly> {
    if lam.first() < m {
        return Ok(LaurentPoly::zero(n - 1));
    }
    tableau_sum(&lam.tail(), k - 1, n - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    Sp,
    OB,
    OD,
}

fn classical(kind: ClassicalKind, w2: &[i32], n: usize) -> Result<LaurentPoly> {
    match kind {
        ClassicalKind::Sp => symplectic(w2, n),
        ClassicalKind::OB => orth_b(w2, n),
        ClassicalKind::OD => orth_d(w2, n),
    }
}

/// Part (2) of the lemma: returns both the truncation and the predicted value.
/// Weights and `m` are doubled; `λ_1 <= m` is required.
pub fn truncate_classical(kind: ClassicalKind, w2: &[i32], n: usize, m2: i32) -> Result<(LaurentPoly, LaurentPoly)> {
    let mut w = w2.to_vec();
    w.resize(n, 0);
    if w.first().is_some_and(|&p| p > m2) {
        return Err(Error::InvalidSpec("λ1 exceeds m".into()));
    }
    let got = times_x1_at_zero(&classical(kind, &w, n)?, m2)?;
    let want = if w.first() == Some(&m2) { classical(kind, &w[1..], n - 1)? } else { LaurentPoly::zero(n - 1) };
    Ok((got, want))
}

/// Multiplies both sides of the first identity at `n` by `x_1^{a+m}`, sets
/// `x_1 = 0`, and compares with the same identity at `n - 1`, `k - 1`.
pub fn reduction_transport(n: usize, k: usize, m: u32, a: u32) -> Result<bool> {
    if k == 0 || n < 2 {
        return Err(Error::InvalidSpec("transport needs k >= 1 and n >= 2".into()));
    }
    let big = MainIdentityCase::new(n, k, m, a, 1)?;
    let small = MainIdentityCase::new(n - 1, k - 1, m, a, 1)?;
    let s = 2 * (a + m) as i32;
    let lhs = times_x1_at_zero(&main_lhs(&big)?, s)?;
    let rhs = times_x1_at_zero(&main_rhs(&big)?, s)?;
    Ok(lhs == main_lhs(&small)? && rhs == main_rhs(&small)? && lhs == rhs)
}
