//! Partitions, half-partitions, strict partitions and the shape families
//! used by the summation identities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing nonnegative integers, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpec(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    /// The rectangle `(r^n)`.
    pub fn rect(r: u32, n: usize) -> Self {
        if r == 0 {
            return Self::empty();
        }
        Partition(vec![r; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Length `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_{i+1}` (0-based), zero beyond the length.
    pub fn get(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.first() as usize;
        let parts = (1..=w as u32).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect();
        Partition(parts)
    }

    /// First `n` parts, zero padded.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.get(i)).collect()
    }

    /// `λ + (a^n)`.
    pub fn plus_rect(&self, a: u32, n: usize) -> Partition {
        Partition::new(self.padded(n.max(self.len())).iter().enumerate().map(|(i, p)| if i < n { p + a } else { *p }).collect())
            .expect("adding a rectangle keeps the order")
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.get(i) >= other.get(i))
    }

    pub fn fits_in_rect(&self, m: u32, n: usize) -> bool {
        self.len() <= n && self.first() <= m
    }

    /// Drop the first part: `(λ_2, λ_3, ...)`.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Doubled parts, for routines on the half-integer lattice.
    pub fn doubled(&self, n: usize) -> Vec<i32> {
        self.padded(n).iter().map(|&p| 2 * p as i32).collect()
    }

    /// All partitions with at most `n` parts, each at most `m`, in reverse
    /// lexicographic order of padded part vectors starting from ∅.
    pub fn in_rect(m: u32, n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(m: u32, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if cur.len() == n {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            let cap = cur.last().copied().unwrap_or(m);
            for p in 0..=cap {
                cur.push(p);
                rec(m, n, cur, out);
                cur.pop();
            }
        }
        rec(m, n, &mut cur, &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0)));
        out
    }

    /// Every sub-partition of `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let n = self.len();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(lam: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            let i = cur.len();
            if i == lam.len() {
                out.push(Partition::new(cur.clone()).unwrap());
                return;
            }
            let cap = lam.get(i).min(cur.last().copied().unwrap_or(u32::MAX));
            for p in 0..=cap {
                cur.push(p);
                rec(lam, cur, out);
                cur.pop();
            }
        }
        rec(self, &mut cur, &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Weakly decreasing half-integers, stored doubled. Parts of a true
/// half-partition are odd and positive; `extended` weights for the
/// symplectic bialternant may also end in `-1/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfPartition(Vec<i32>);

impl HalfPartition {
    /// Parts given doubled; all must be odd and positive.
    pub fn new(doubled: Vec<i32>) -> Result<Self> {
        if doubled.iter().any(|p| p % 2 == 0 || *p < 0) || doubled.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpec(format!("not a half-partition (doubled {doubled:?})")));
        }
        Ok(HalfPartition(doubled))
    }

    /// `((r/2)^n)` for odd `r`.
    pub fn rect(r2: i32, n: usize) -> Result<Self> {
        Self::new(vec![r2; n])
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Parse a weight such as `"3/2,1/2"` or `"2,1"` into doubled parts.
pub fn parse_doubled_parts(s: &str) -> Result<Vec<i32>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let err = || Error::Parse(format!("bad part {t:?}"));
            match t.split_once('/') {
                Some((a, "2")) => a.trim().parse::<i32>().map_err(|_| err()),
                Some(_) => Err(err()),
                None => t.parse::<i32>().map(|v| 2 * v).map_err(|_| err()),
            }
        })
        .collect()
}

/// Strictly decreasing positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSpec(format!("{parts:?} is not strict")));
        }
        Ok(StrictPartition(parts))
    }

    /// `δ_n + δ_k`: parts `n+k-2(i-1)` for `i ≤ k` and `n-i+1` for `k < i ≤ n`.
    pub fn double_staircase(n: usize, k: usize) -> Self {
        let parts = (1..=n).map(|i| if i <= k { (n + k + 2 - 2 * i) as u32 } else { (n + 1 - i) as u32 }).collect();
        StrictPartition(parts)
    }

    pub fn staircase(n: usize) -> Self {
        Self::double_staircase(n, 0)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn cells(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }
}

/// Shape families inside the rectangle `(m^n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Par,
    Even,
    EvenPrime,
    OddPrime,
}

impl Family {
    pub fn admits(self, lam: &Partition, m: u32) -> bool {
        match self {
            Family::Par => true,
            Family::Even => lam.all_even(),
            Family::EvenPrime | Family::OddPrime => {
                // columns 1..m, a missing column has height 0 (even)
                let c = lam.conjugate();
                let want = if self == Family::EvenPrime { 0 } else { 1 };
                (0..m as usize).all(|i| c.get(i) % 2 == want)
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Par => "par",
            Family::Even => "even",
            Family::EvenPrime => "even-prime",
            Family::OddPrime => "odd-prime",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "par" => Ok(Family::Par),
            "even" => Ok(Family::Even),
            "even-prime" | "evenprime" | "even'" => Ok(Family::EvenPrime),
            "odd-prime" | "oddprime" | "odd'" => Ok(Family::OddPrime),
            _ => Err(Error::Parse(format!("unknown family {s}"))),
        }
    }
}

/// The members of `family` inside `(m^n)`.
pub fn shape_family(m: u32, n: usize, family: Family) -> Vec<Partition> {
    Partition::in_rect(m, n).into_iter().filter(|l| family.admits(l, m)).collect()
}

/// `I_n(λ) = {λ_n, λ_{n-1}+1, ..., λ_1+n-1}`, ascending.
pub fn index_set(lam: &Partition, n: usize) -> Result<Vec<usize>> {
    if lam.len() > n {
        return Err(Error::ShapeMismatch(format!("l({lam}) > {n}")));
    }
    Ok((1..=n).map(|i| lam.get(n - i) as usize + i - 1).collect())
}

/// Inverse of [`index_set`].
pub fn from_index_set(idx: &[usize]) -> Result<Partition> {
    let n = idx.len();
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidSpec("index set must be strictly increasing".into()));
    }
    Partition::new((0..n).map(|i| (idx[n - 1 - i] - (n - 1 - i)) as u32).collect())
}

/// Frobenius coordinates `(α_1, ..., α_r | β_1, ..., β_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub arms: Vec<u32>,
    pub legs: Vec<u32>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Result<Self> {
        let strict = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidSpec("Frobenius arms and legs must be strict and of equal length".into()));
        }
        Ok(FrobeniusCoords { arms, legs })
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        if r == 0 {
            return Partition::empty();
        }
        let rows = r + self.legs[0] as usize;
        let mut parts = vec![0u32; rows];
        for (i, p) in parts.iter_mut().enumerate().take(r) {
            *p = self.arms[i] + i as u32 + 1;
        }
        // below the Durfee square, row i has as many cells as legs reaching it
        for (i, p) in parts.iter_mut().enumerate().skip(r) {
            *p = self.legs.iter().enumerate().filter(|(j, &b)| b as usize + j >= i).count() as u32;
        }
        Partition::new(parts).expect("Frobenius coordinates give a partition")
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.arms.iter().map(|v| v.to_string()).collect();
        let b: Vec<String> = self.legs.iter().map(|v| v.to_string()).collect();
        write!(f, "({}|{})", a.join(","), b.join(","))
    }
}

pub fn frobenius(lam: &Partition) -> FrobeniusCoords {
    let c = lam.conjugate();
    let r = (0..lam.len()).take_while(|&i| lam.get(i) as usize > i).count();
    FrobeniusCoords {
        arms: (0..r).map(|i| lam.get(i) - i as u32 - 1).collect(),
        legs: (0..r).map(|i| c.get(i) - i as u32 - 1).collect(),
    }
}

/// The hook `(a | b) = (a+1, 1^b)`.
pub fn hook(a: u32, b: u32) -> Partition {
    let mut parts = vec![a + 1];
    parts.extend(std::iter::repeat_n(1, b as usize));
    Partition::new(parts).unwrap()
}
