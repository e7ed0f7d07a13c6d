//! Complete and elementary symmetric polynomials over explicit alphabets.

use crate::ring::LaurentPoly;

/// An alphabet is a list of letters, each a Laurent polynomial (usually a
/// monomial such as `x_j` or `x_j^{-1}`).
pub type Alphabet = Vec<LaurentPoly>;

/// `x_j^{±1}` for `j` in `pm` followed by `x_j` for `j` in `plain` (0-based).
pub fn alphabet(arity: usize, pm: impl IntoIterator<Item = usize>, plain: impl IntoIterator<Item = usize>) -> Alphabet {
    let mut out = Vec::new();
    for j in pm {
        out.push(LaurentPoly::var(arity, j));
        out.push(LaurentPoly::var_pow(arity, j, -1));
    }
    for j in plain {
        out.push(LaurentPoly::var(arity, j));
    }
    out
}

/// `h_0, ..., h_upto` of the alphabet.
pub fn h_series(alph: &[LaurentPoly], arity: usize, upto: usize) -> Vec<LaurentPoly> {
    let mut h = vec![LaurentPoly::zero(arity); upto + 1];
    h[0] = LaurentPoly::one(arity);
    for y in alph {
        // multiply the series by 1/(1 - y u)
        for r in 1..=upto {
            let t = y * &h[r - 1];
            h[r] += &t;
        }
    }
    h
}

/// `e_0, ..., e_upto` of the alphabet.
pub fn e_series(alph: &[LaurentPoly], arity: usize, upto: usize) -> Vec<LaurentPoly> {
    let mut e = vec![LaurentPoly::zero(arity); upto + 1];
    e[0] = LaurentPoly::one(arity);
    for y in alph {
        for r in (1..=upto).rev() {
            let t = y * &e[r - 1];
            e[r] += &t;
        }
    }
    e
}

/// `h_r`, zero for negative `r`.
pub fn complete_h(r: i64, alph: &[LaurentPoly], arity: usize) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero(arity);
    }
    h_series(alph, arity, r as usize).pop().unwrap()
}

/// `e_r`, zero for negative `r`.
pub fn elementary_e(r: i64, alph: &[LaurentPoly], arity: usize) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero(arity);
    }
    e_series(alph, arity, r as usize).pop().unwrap()
}

/// Indexed lookup into a precomputed series, zero for negative `r`.
pub fn at(series: &[LaurentPoly], r: i64, arity: usize) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero(arity);
    }
    series[r as usize].clone()
}
