//! Shifted plane partitions, their traces and weights, and the bijection
//! with `(k, n-k)`-symplectic tableaux.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

use super::partition::{Partition, StrictPartition};
use super::tableau::{IntSympTableau, Letter};

/// Row `i` (0-based) holds `mu_i` entries in absolute columns `i ..`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftedPlanePartition {
    pub mu: StrictPartition,
    pub rows: Vec<Vec<u32>>,
}

impl ShiftedPlanePartition {
    pub fn new(mu: StrictPartition, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != mu.len() || rows.iter().zip(mu.parts()).any(|(r, &p)| r.len() != p as usize) {
            return Err(Error::ShapeMismatch("rows do not match the shifted shape".into()));
        }
        let s = ShiftedPlanePartition { mu, rows };
        for i in 0..s.rows.len() {
            for c in i..i + s.rows[i].len() {
                let v = s.at(i, c).unwrap();
                if c > i && s.at(i, c - 1).unwrap() < v {
                    return Err(Error::InvalidSpec("row not weakly decreasing".into()));
                }
                if let Some(up) = i.checked_sub(1).and_then(|u| s.at(u, c)) {
                    if up < v {
                        return Err(Error::InvalidSpec("column not weakly decreasing".into()));
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn zero(mu: StrictPartition) -> Self {
        let rows = mu.parts().iter().map(|&p| vec![0; p as usize]).collect();
        ShiftedPlanePartition { mu, rows }
    }

    /// Entry at absolute position `(i, c)`.
    pub fn at(&self, i: usize, c: usize) -> Option<u32> {
        let row = self.rows.get(i)?;
        if c < i {
            return None;
        }
        row.get(c - i).copied()
    }

    /// Main diagonal as a partition.
    pub fn profile(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r[0]).collect()).expect("diagonal of an SPP is weakly decreasing")
    }

    /// `t_l = Σ_i σ_{i, i+l}`.
    pub fn trace(&self, l: usize) -> u32 {
        (0..self.rows.len()).filter_map(|i| self.at(i, i + l)).sum()
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }
}

impl fmt::Display for ShiftedPlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join(" / "))
    }
}

/// Profiles admitted by an enumeration: every diagonal within the bound, or
/// an explicit set.
pub enum ProfileFilter<'a> {
    All,
    Only(&'a HashSet<Partition>),
}

/// Visit every SPP of shape `mu` with entries at most `bound` whose profile
/// passes the filter. The diagonal is fixed first, so excluded profiles are
/// never expanded.
pub fn for_each_spp(mu: &StrictPartition, bound: u32, filter: ProfileFilter<'_>, mut f: impl FnMut(&ShiftedPlanePartition)) {
    let r = mu.len();
    let profiles: Vec<Vec<u32>> = match filter {
        ProfileFilter::All => Partition::in_rect(bound, r).iter().map(|p| p.padded(r)).collect(),
        ProfileFilter::Only(set) => {
            let mut v: Vec<Vec<u32>> =
                set.iter().filter(|p| p.fits_in_rect(bound, r)).map(|p| p.padded(r)).collect();
            v.sort();
            v
        }
    };
    let mut s = ShiftedPlanePartition::zero(mu.clone());
    let cells: Vec<(usize, usize)> =
        (0..r).flat_map(|i| (i + 1..i + mu.parts()[i] as usize).map(move |c| (i, c))).collect();
    for diag in profiles {
        for (i, d) in diag.iter().enumerate() {
            s.rows[i][0] = *d;
        }
        fill(&mut s, &cells, 0, &mut f);
    }
}

fn fill(s: &mut ShiftedPlanePartition, cells: &[(usize, usize)], pos: usize, f: &mut impl FnMut(&ShiftedPlanePartition)) {
    if pos == cells.len() {
        f(s);
        return;
    }
    let (i, c) = cells[pos];
    let mut hi = s.at(i, c - 1).unwrap();
    if i > 0 {
        if let Some(up) = s.at(i - 1, c) {
            hi = hi.min(up);
        }
    }
    // column c ends no higher than the diagonal entry of row c, if present
    let lo = if c < s.rows.len() { s.rows[c][0] } else { 0 };
    if lo > hi {
        return;
    }
    for v in lo..=hi {
        s.rows[i][c - i] = v;
        fill(s, cells, pos + 1, f);
    }
}

pub fn enumerate_spp(mu: &StrictPartition, bound: u32, filter: Option<&HashSet<Partition>>) -> Vec<ShiftedPlanePartition> {
    let mut out = Vec::new();
    let filter = match filter {
        Some(set) => ProfileFilter::Only(set),
        None => ProfileFilter::All,
    };
    for_each_spp(mu, bound, filter, |s| out.push(s.clone()));
    out
}

/// Statistics of an SPP of shape `δ_n + δ_k`. Half-integral values are doubled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SppStats {
    pub traces: Vec<u32>,
    pub v2: i64,
    pub w: i64,
    pub norm2: i64,
    pub size: i64,
}

pub fn spp_statistics(s: &ShiftedPlanePartition, k: usize, n: usize) -> Result<SppStats> {
    if s.mu != StrictPartition::double_staircase(n, k) {
        return Err(Error::ShapeMismatch(format!("expected shape δ_{n} + δ_{k}")));
    }
    let traces: Vec<u32> = (0..n + k).map(|l| s.trace(l)).collect();
    let t = |l: usize| traces.get(l).copied().unwrap_or(0) as i64;
    let (n_, k_) = (n as i64, k as i64);
    let low: i64 = (0..n - k).map(t).sum();
    let mut v2 = (2 * k_ - 1) * t(0) + 2 * low - 2 * n_ * t(n - k);
    let mut w = k_ * t(0) + low - n_ * t(n - k);
    for l in n - k..n + k {
        let sign = if (l - (n - k)).is_multiple_of(2) { -1 } else { 1 };
        let d = (l - (n - k)) as i64;
        v2 += sign * 2 * d * t(l);
        w += sign * (d + 1) * t(l);
    }
    let size = s.size() as i64;
    let norm2 = 2 * size - t(0);
    Ok(SppStats { traces, v2, w, norm2, size })
}

fn conjugate_row(row: &[u32]) -> Vec<u32> {
    let top = row.first().copied().unwrap_or(0);
    (1..=top).map(|c| row.iter().filter(|&&v| v >= c).count() as u32).collect()
}

/// Value `v ∈ 1..=n+k` of the intermediate plane partition to its letter.
fn value_to_letter(v: u32, k: usize, n: usize) -> Letter {
    let (k, n) = (k as u32, n as u32);
    if v <= n - k {
        Letter::plain(n + 1 - v)
    } else {
        let d = n + k - v;
        if d.is_multiple_of(2) {
            Letter::plain(d / 2 + 1)
        } else {
            Letter::bar(d.div_ceil(2))
        }
    }
}

fn letter_to_value(l: Letter, k: usize, n: usize) -> u32 {
    let (k, n) = (k as u32, n as u32);
    if l.index > k {
        n + 1 - l.index
    } else if l.barred {
        n + k - 2 * l.index + 1
    } else {
        n + k - 2 * (l.index - 1)
    }
}

/// σ ↦ π (rowwise conjugate) ↦ T (relabel values by letters).
pub fn spp_to_tableau(s: &ShiftedPlanePartition, k: usize, n: usize) -> Result<IntSympTableau> {
    if s.mu != StrictPartition::double_staircase(n, k) {
        return Err(Error::ShapeMismatch(format!("expected shape δ_{n} + δ_{k}")));
    }
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    for r in &s.rows {
        let pi = conjugate_row(r);
        if pi.is_empty() {
            break;
        }
        rows.push(pi.iter().map(|&v| value_to_letter(v, k, n)).collect());
    }
    IntSympTableau::new(rows, k, n)
}

pub fn tableau_to_spp(t: &IntSympTableau) -> Result<ShiftedPlanePartition> {
    let (k, n) = (t.k, t.n);
    let mu = StrictPartition::double_staircase(n, k);
    let mut rows = Vec::with_capacity(n);
    for (i, &len) in mu.parts().iter().enumerate() {
        let pi: Vec<u32> = t.rows.get(i).map(|r| r.iter().map(|&l| letter_to_value(l, k, n)).collect()).unwrap_or_default();
        if pi.iter().any(|&v| v > len) {
            return Err(Error::ShapeMismatch("tableau row does not fit the double staircase".into()));
        }
        rows.push(conjugate_row_to_len(&pi, len as usize));
    }
    ShiftedPlanePartition::new(mu, rows)
}

fn conjugate_row_to_len(pi: &[u32], len: usize) -> Vec<u32> {
    (1..=len as u32).map(|c| pi.iter().filter(|&&v| v >= c).count() as u32).collect()
}
