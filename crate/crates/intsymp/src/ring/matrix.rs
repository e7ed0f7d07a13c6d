//! Dense matrices with a division-free determinant, and skew-symmetric
//! matrices with an exact Pfaffian.

use std::collections::HashMap;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Minimal commutative-ring interface shared by polynomials and fractions.
pub trait RingElem: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_r(&self, other: &Self) -> Self;
    fn sub_r(&self, other: &Self) -> Self;
    fn mul_r(&self, other: &Self) -> Self;
    fn neg_r(&self) -> Self {
        self.zero_like().sub_r(self)
    }
    fn is_zero_r(&self) -> bool;
}

impl RingElem for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.arity())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.arity())
    }
    fn add_r(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_r(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_r(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_r(&self) -> Self {
        -self
    }
    fn is_zero_r(&self) -> bool {
        self.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type PolyMatrix = Matrix<LaurentPoly>;

impl<T: RingElem> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidSpec(format!(
                "matrix {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidSpec("matrix product shape mismatch".into()));
        }
        let zero = self.entries.first().or(other.entries.first()).map(|e| e.zero_like());
        let zero = match zero {
            Some(z) => z,
            None => return Ok(Matrix { rows: self.rows, cols: other.cols, entries: vec![] }),
        };
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = zero.clone();
            for l in 0..self.cols {
                let a = self.get(i, l);
                let b = other.get(l, j);
                if a.is_zero_r() || b.is_zero_r() {
                    continue;
                }
                acc = acc.add_r(&a.mul_r(b));
            }
            acc
        }))
    }

    /// Columns picked in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Determinant by Berkowitz's division-free algorithm.
    ///
    /// `unit` supplies the ring's one for the empty matrix.
    pub fn det_with(&self, unit: &T) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(unit.one_like());
        }
        let one = unit.one_like();
        let zero = unit.zero_like();
        // v holds the characteristic polynomial of the leading block, highest degree first.
        let mut v = vec![one.clone(), self.get(0, 0).neg_r()];
        for r in 1..n {
            // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C.
            let mut t = Vec::with_capacity(r + 2);
            t.push(one.clone());
            t.push(self.get(r, r).neg_r());
            let mut w: Vec<T> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for k in 0..r {
                let mut acc = zero.clone();
                for j in 0..r {
                    let a = self.get(r, j);
                    if !a.is_zero_r() && !w[j].is_zero_r() {
                        acc = acc.add_r(&a.mul_r(&w[j]));
                    }
                }
                t.push(acc.neg_r());
                if k + 1 < r {
                    let mut nw = Vec::with_capacity(r);
                    for i in 0..r {
                        let mut acc = zero.clone();
                        for j in 0..r {
                            let a = self.get(i, j);
                            if !a.is_zero_r() && !w[j].is_zero_r() {
                                acc = acc.add_r(&a.mul_r(&w[j]));
                            }
                        }
                        nw.push(acc);
                    }
                    w = nw;
                }
            }
            let mut nv = Vec::with_capacity(r + 2);
            for i in 0..r + 2 {
                let mut acc = zero.clone();
                for j in 0..=i.min(r) {
                    let tij = &t[i - j];
                    if !tij.is_zero_r() && !v[j].is_zero_r() {
                        acc = acc.add_r(&tij.mul_r(&v[j]));
                    }
                }
                nv.push(acc);
            }
            v = nv;
        }
        let d = v.pop().unwrap();
        Ok(if n % 2 == 1 { d.neg_r() } else { d })
    }

    /// Cofactor expansion along the first row; a cross-check for small orders.
    pub fn det_cofactor_with(&self, unit: &T) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let idx: Vec<usize> = (0..self.cols).collect();
        Ok(self.cofactor_rec(0, &idx, unit))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize], unit: &T) -> T {
        if cols.is_empty() {
            return unit.one_like();
        }
        let mut acc = unit.zero_like();
        for (p, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero_r() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.mul_r(&self.cofactor_rec(row + 1, &rest, unit));
            acc = if p % 2 == 0 { acc.add_r(&term) } else { acc.sub_r(&term) };
        }
        acc
    }
}

impl PolyMatrix {
    /// The arity of the entries, if there are any.
    pub fn arity(&self) -> Option<usize> {
        self.entries.first().map(|e| e.arity())
    }

    pub fn det(&self) -> Result<LaurentPoly> {
        let unit = LaurentPoly::one(self.arity().unwrap_or(0));
        self.det_with(&unit)
    }

    pub fn det_in(&self, arity: usize) -> Result<LaurentPoly> {
        self.det_with(&LaurentPoly::one(arity))
    }

    pub fn det_cofactor(&self) -> Result<LaurentPoly> {
        let unit = LaurentPoly::one(self.arity().unwrap_or(0));
        self.det_cofactor_with(&unit)
    }
}

/// Skew-symmetric matrix stored by its strict upper triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<T> {
    n: usize,
    upper: Vec<T>,
    zero: T,
}

pub type SkewSymMatrix = SkewMatrix<LaurentPoly>;

impl<T: RingElem> SkewMatrix<T> {
    /// Builds from `f(i, j)` for `i < j`; `zero` fixes the ring.
    pub fn from_fn(n: usize, zero: T, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { n, upper, zero }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn index(&self, i: usize, j: usize) -> usize {
        // Row-major position of (i, j), i < j, in the strict upper triangle.
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => self.zero.clone(),
            Less => self.upper[self.index(i, j)].clone(),
            Greater => self.upper[self.index(j, i)].neg_r(),
        }
    }

    pub fn get_upper(&self, i: usize, j: usize) -> &T {
        &self.upper[self.index(i, j)]
    }

    /// The principal submatrix on the sorted index set `idx`.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        SkewMatrix::from_fn(idx.len(), self.zero.clone(), |a, b| self.get(idx[a], idx[b]))
    }

    pub fn to_dense(&self) -> Matrix<T> {
        Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j))
    }

    /// Pfaffian by dynamic programming over index subsets.
    pub fn pfaffian(&self) -> Result<T> {
        if self.n % 2 == 1 {
            return Err(Error::OddOrder(self.n));
        }
        if self.n > 63 {
            return Err(Error::InvalidSpec("Pfaffian order too large".into()));
        }
        let full: u64 = if self.n == 0 { 0 } else { (1u64 << self.n) - 1 };
        let mut memo: HashMap<u64, T> = HashMap::new();
        Ok(self.pf_rec(full, &mut memo))
    }

    fn pf_rec(&self, set: u64, memo: &mut HashMap<u64, T>) -> T {
        if set == 0 {
            return self.zero.one_like();
        }
        if let Some(v) = memo.get(&set) {
            return v.clone();
        }
        let i = set.trailing_zeros() as usize;
        let rest = set & !(1u64 << i);
        let mut acc = self.zero.clone();
        let mut pos = 0usize;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = self.get_upper(i, j);
            if !a.is_zero_r() {
                let sub = self.pf_rec(rest & !(1u64 << j), memo);
                if !sub.is_zero_r() {
                    let term = a.mul_r(&sub);
                    acc = if pos.is_multiple_of(2) { acc.add_r(&term) } else { acc.sub_r(&term) };
                }
            }
            pos += 1;
        }
        memo.insert(set, acc.clone());
        acc
    }
}
