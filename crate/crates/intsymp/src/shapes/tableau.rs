//! `(k, n-k)`-symplectic tableaux over the alphabet
//! `1 < 1̄ < 2 < 2̄ < ... < k < k̄ < k+1 < ... < n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{ExpVec, LaurentPoly};
use num_traits::One;

use super::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    /// 1-based index `i` of `i` or `ī`.
    pub index: u32,
    pub barred: bool,
}

impl Letter {
    pub fn plain(index: u32) -> Self {
        Letter { index, barred: false }
    }

    pub fn bar(index: u32) -> Self {
        Letter { index, barred: true }
    }

    /// Position in the alphabet order, starting at 0.
    pub fn ordinal(self, k: u32) -> u32 {
        if self.index <= k {
            2 * (self.index - 1) + self.barred as u32
        } else {
            2 * k + (self.index - k - 1)
        }
    }

    pub fn from_ordinal(o: u32, k: u32) -> Self {
        if o < 2 * k {
            Letter { index: o / 2 + 1, barred: o % 2 == 1 }
        } else {
            Letter::plain(o - 2 * k + k + 1)
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}!", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// Alphabet size `|Γ_{k,n-k}| = n + k`.
pub fn alphabet_len(k: usize, n: usize) -> u32 {
    (n + k) as u32
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntSympTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<Letter>>,
    pub k: usize,
    pub n: usize,
}

impl IntSympTableau {
    pub fn new(rows: Vec<Vec<Letter>>, k: usize, n: usize) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let t = IntSympTableau { shape, rows, k, n };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k as u32;
        let bad = |why: &str| Err(Error::InvalidSpec(format!("not a ({},{})-symplectic tableau: {why}", self.k, self.n - self.k)));
        for (i, row) in self.rows.iter().enumerate() {
            for (j, l) in row.iter().enumerate() {
                if l.index == 0 || l.index as usize > self.n || (l.barred && l.index > k) {
                    return bad("letter outside the alphabet");
                }
                if l.ordinal(k) < Letter::plain(i as u32 + 1).ordinal(k) {
                    return bad("row floor");
                }
                if j > 0 && row[j - 1].ordinal(k) > l.ordinal(k) {
                    return bad("row not weakly increasing");
                }
                if i > 0 && self.rows[i - 1][j].ordinal(k) >= l.ordinal(k) {
                    return bad("column not strictly increasing");
                }
            }
        }
        Ok(())
    }

    /// Multiplicity of a letter.
    pub fn multiplicity(&self, l: Letter) -> usize {
        self.rows.iter().flatten().filter(|&&x| x == l).count()
    }

    /// `∏_{i≤k} x_i^{m(i)-m(ī)} ∏_{i>k} x_i^{m(i)}`.
    pub fn weight(&self) -> LaurentPoly {
        let mut e = vec![0i32; self.n];
        for l in self.rows.iter().flatten() {
            e[l.index as usize - 1] += if l.barred { -2 } else { 2 };
        }
        LaurentPoly::monomial(num_rational::BigRational::one(), ExpVec(e))
    }
}

impl fmt::Display for IntSympTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join(" / "))
    }
}

/// Visit every tableau of shape `λ`, row-major, smallest entry first.
pub fn for_each_tableau(lam: &Partition, k: usize, n: usize, mut f: impl FnMut(&IntSympTableau)) -> Result<()> {
    if lam.len() > n || k > n {
        return Err(Error::ShapeMismatch(format!("need l({lam}) <= n = {n} and k <= n")));
    }
    let kk = k as u32;
    let top = alphabet_len(k, n);
    let cells: Vec<(usize, usize)> =
        (0..lam.len()).flat_map(|i| (0..lam.get(i) as usize).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<u32>> = (0..lam.len()).map(|i| vec![0; lam.get(i) as usize]).collect();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        pos: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        kk: u32,
        top: u32,
        lam: &Partition,
        k: usize,
        n: usize,
        f: &mut dyn FnMut(&IntSympTableau),
    ) {
        if pos == cells.len() {
            let rows = grid.iter().map(|r| r.iter().map(|&o| Letter::from_ordinal(o, kk)).collect()).collect();
            f(&IntSympTableau { shape: lam.clone(), rows, k, n });
            return;
        }
        let (i, j) = cells[pos];
        let mut lo = Letter::plain(i as u32 + 1).ordinal(kk);
        if j > 0 {
            lo = lo.max(grid[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(grid[i - 1][j] + 1);
        }
        // leave room for the rest of column j
        let below = (i + 1..lam.len()).take_while(|&r| lam.get(r) as usize > j).count() as u32;
        for o in lo..top.saturating_sub(below) {
            grid[i][j] = o;
            rec(pos + 1, cells, grid, kk, top, lam, k, n, f);
        }
    }
    rec(0, &cells, &mut grid, kk, top, lam, k, n, &mut f);
    Ok(())
}

pub fn enumerate_tableaux(lam: &Partition, k: usize, n: usize) -> Result<Vec<IntSympTableau>> {
    let mut out = Vec::new();
    for_each_tableau(lam, k, n, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Character as the plain sum of tableau weights. Exponential; kept as an oracle.
pub fn tableau_sum_by_enumeration(lam: &Partition, k: usize, n: usize) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero(n);
    for_each_tableau(lam, k, n, |t| acc.add_term(t.weight().leading().unwrap().0.clone(), One::one()))?;
    Ok(acc)
}
