//! Principal specializations of rectangular classical characters.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identities::ClassicalKind;
use crate::ring::qseries::{q_binom, qpow2, Half, QRatio};
use crate::ring::LaurentPoly;

/// `x_i = q^{i-1/2}` or `x_i = q^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Grid {
    Half,
    Integer,
}

impl Grid {
    /// Doubled exponent of the value given to `x_i` (1-based).
    pub fn exponent2(self, i: usize) -> i32 {
        match self {
            Grid::Half => 2 * i as i32 - 1,
            Grid::Integer => 2 * i as i32,
        }
    }

    pub fn values(self, n: usize) -> Vec<LaurentPoly> {
        (1..=n).map(|i| qpow2(self.exponent2(i))).collect()
    }
}

fn h(r2: i32) -> Half {
    Half(r2)
}

/// `Σ_l q^{c l + l(l-1)} [n, l]^2`, with `c` doubled.
pub fn binom_square_sum(n: usize, c2: i32) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero(1);
    for l in 0..=n as i32 {
        let b = q_binom(n as i32, l)?;
        acc += &(&qpow2(c2 * l + 2 * l * (l - 1)) * &(&b * &b));
    }
    Ok(acc)
}

/// The closed product for a rectangular character `(m^n)` at a principal
/// specialization. `m` may be half-integral.
pub fn principal_special(which: ClassicalKind, m: Half, n: usize, grid: Grid) -> Result<LaurentPoly> {
    if m.0 < 0 {
        return Err(Error::InvalidSpec("rectangle part must be nonnegative".into()));
    }
    let m2 = m.0;
    let nn = n as i32;
    // prefactor 1/q^{m n^2/2} or 1/q^{m n(n+1)/2}, doubled
    let pre4 = match grid {
        Grid::Half => m2 * nn * nn,
        Grid::Integer => m2 * nn * (nn + 1),
    };
    if pre4 % 2 != 0 {
        return Err(Error::NotLaurent(format!("q^(-{pre4}/4)")));
    }
    let mut r = QRatio::new().times(qpow2(-pre4 / 2));
    let pairs = |strict: bool| {
        (1..=nn).flat_map(move |i| ((if strict { i + 1 } else { i })..=nn).map(move |j| (i, j)))
    };
    match (which, grid) {
        (ClassicalKind::Sp, Grid::Half) => {
            for i in 1..=nn {
                r = r.ratio(h(m2 + 2 * i), h(2 * i));
            }
            for (i, j) in pairs(true) {
                r = r.ratio(h(2 * m2 + 2 * (i + j)), h(2 * (i + j)));
            }
        }
        (ClassicalKind::OB, Grid::Half) => {
            for i in 1..=nn {
                r = r.ratio(h(m2 + 2 * i - 1), h(2 * i - 1));
            }
            for (i, j) in pairs(true) {
                r = r.ratio(h(2 * m2 + 2 * (i + j - 1)), h(2 * (i + j - 1)));
            }
        }
        (ClassicalKind::OD, Grid::Half) => {
            if m2 > 0 {
                r = r.times(LaurentPoly::from_int(1, 2));
            }
            for i in 1..=nn {
                r = r.angle(h(m2 + 2 * (i - 1))).over_angle(h(2 * (i - 1)));
            }
            for (i, j) in pairs(true) {
                r = r.ratio(h(2 * m2 + 2 * (i + j - 2)), h(2 * (i + j - 2)));
            }
        }
        (ClassicalKind::Sp, Grid::Integer) => {
            for (i, j) in pairs(false) {
                r = r.ratio(h(2 * m2 + 2 * (i + j)), h(2 * (i + j)));
            }
        }
        (ClassicalKind::OB, Grid::Integer) => {
            for (i, j) in pairs(false) {
                r = r.ratio(h(2 * m2 + 2 * (i + j - 1)), h(2 * (i + j - 1)));
            }
        }
        (ClassicalKind::OD, Grid::Integer) => {
            for (i, j) in pairs(true) {
                r = r.ratio(h(2 * m2 + 2 * (i + j - 2)), h(2 * (i + j)));
            }
            r = r.times(binom_square_sum(n, 2 * m2)?);
            if m2 == 0 {
                // the sum is 2 ∏ [n+i-1]/[i] at m = 0, where χ(0) = 1 halves it
                r = r.over(LaurentPoly::from_int(1, 2));
            }
        }
    }
    r.eval()
}

/// The character itself at the principal specialization, computed from its
/// bialternant; an oracle for [`principal_special`].
pub fn principal_direct(which: ClassicalKind, m: Half, n: usize, grid: Grid) -> Result<LaurentPoly> {
    use crate::characters::classical::{orth_b, orth_d, symplectic};
    let w = vec![m.0; n];
    let p = match which {
        ClassicalKind::Sp => symplectic(&w, n)?,
        ClassicalKind::OB => orth_b(&w, n)?,
        ClassicalKind::OD => orth_d(&w, n)?,
    };
    p.specialize(&grid.values(n))
}

/// The value at `q = 1` of a polynomial in `q^{1/2}`.
pub fn q_at_one(p: &LaurentPoly) -> crate::ring::Rational {
    p.coeff_sum()
}
