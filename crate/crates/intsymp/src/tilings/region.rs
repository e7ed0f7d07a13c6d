//! Triangular-lattice geometry of flashlight regions.
//!
//! Lattice points are integer pairs `(a, b)`; the unit square at `(a, b)` is
//! cut along its main diagonal into `Lo(a, b)` with corners `(a,b), (a+1,b),
//! (a+1,b+1)` and `Up(a, b)` with corners `(a,b), (a,b+1), (a+1,b+1)`. A
//! cube at `(i, j, h)` seen along `(1, 1, 1)` sits at `(i - h, j - h)`.
//!
//! The region attached to the shape `δ_n + δ_k` is half of the projection of
//! the symmetric plane partitions over the symmetrized shifted diagram; the
//! cut runs along the diagonal `a = b` and is the free boundary.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{index_set, Partition, StrictPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Tri {
    Lo(i32, i32),
    Up(i32, i32),
}

impl Tri {
    /// Distance of the strip holding the triangle from the free boundary;
    /// negative across it.
    pub fn strip(self) -> i32 {
        match self {
            Tri::Up(a, b) => b - a,
            Tri::Lo(a, b) => b - a - 1,
        }
    }

    /// The three edge neighbours.
    pub fn neighbours(self) -> [Tri; 3] {
        match self {
            Tri::Up(a, b) => [Tri::Lo(a, b), Tri::Lo(a, b + 1), Tri::Lo(a - 1, b)],
            Tri::Lo(a, b) => [Tri::Up(a, b), Tri::Up(a, b - 1), Tri::Up(a + 1, b)],
        }
    }
}

/// The three lozenge orientations. `Horizontal` straddles two strips, the
/// other two lie inside one strip; only `SwNe` lozenges carry weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LozengeKind {
    Horizontal,
    SwNe,
    Vertical,
}

/// A lozenge, stored with its `Lo` triangle first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Lozenge {
    pub lo: (i32, i32),
    pub up: (i32, i32),
}

impl Lozenge {
    pub fn new(x: Tri, y: Tri) -> Result<Self> {
        let (lo, up) = match (x, y) {
            (Tri::Lo(a, b), Tri::Up(c, d)) | (Tri::Up(c, d), Tri::Lo(a, b)) => ((a, b), (c, d)),
            _ => return Err(Error::InvalidSpec("a lozenge joins one Lo and one Up triangle".into())),
        };
        let l = Lozenge { lo, up };
        l.kind().map(|_| l)
    }

    fn top(a: i32, b: i32) -> Self {
        Lozenge { lo: (a, b), up: (a, b) }
    }

    fn sw_ne(a: i32, b: i32) -> Self {
        // face spanned by the x and z directions at (a, b)
        Lozenge { lo: (a - 1, b - 1), up: (a, b - 1) }
    }

    fn vertical(a: i32, b: i32) -> Self {
        Lozenge { lo: (a - 1, b), up: (a - 1, b - 1) }
    }

    pub fn kind(&self) -> Result<LozengeKind> {
        let (d0, d1) = (self.up.0 - self.lo.0, self.up.1 - self.lo.1);
        match (d0, d1) {
            (0, 0) => Ok(LozengeKind::Horizontal),
            (1, 0) => Ok(LozengeKind::SwNe),
            (0, -1) => Ok(LozengeKind::Vertical),
            _ => Err(Error::InvalidSpec(format!("triangles {:?} and {:?} are not adjacent", self.lo, self.up))),
        }
    }

    pub fn tris(&self) -> [Tri; 2] {
        [Tri::Lo(self.lo.0, self.lo.1), Tri::Up(self.up.0, self.up.1)]
    }

    /// Strip of a lozenge lying inside one strip.
    pub fn strip(&self) -> i32 {
        Tri::Lo(self.lo.0, self.lo.1).strip()
    }
}

/// A finite region: triangles that must be covered and triangles across the
/// free boundary that may be covered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub n: usize,
    pub k: usize,
    pub core: BTreeSet<Tri>,
    pub optional: BTreeSet<Tri>,
}

impl Region {
    pub fn triangle_count(&self) -> usize {
        self.core.len()
    }

    pub fn empty(n: usize, k: usize) -> Self {
        Region { n, k, core: BTreeSet::new(), optional: BTreeSet::new() }
    }
}

/// Membership test for the symmetrized diagram of `δ_n + δ_k`.
pub(crate) fn in_sym(mu: &StrictPartition, i: usize, j: usize) -> bool {
    let (r, c) = (i.min(j), i.max(j));
    r < mu.len() && c - r < mu.parts()[r] as usize
}

/// Faces of the stepped surface of heights `h` on the `s x s` box with
/// height bound `bound`.
pub(crate) fn surface(h: &dyn Fn(usize, usize) -> u32, s: usize, bound: u32) -> Vec<Lozenge> {
    let s_ = s as i32;
    let mut out = Vec::new();
    let ht = |i: i32, j: i32| if i < 0 || j < 0 || i >= s_ || j >= s_ { 0 } else { h(i as usize, j as usize) as i32 };
    for i in 0..s_ {
        for j in 0..s_ {
            let z = ht(i, j);
            out.push(Lozenge::top(i - z, j - z));
        }
    }
    for j in 0..s_ {
        for z in ht(0, j)..bound as i32 {
            out.push(Lozenge::vertical(-z, j - z));
        }
        for i in 0..s_ {
            for z in ht(i + 1, j)..ht(i, j) {
                out.push(Lozenge::vertical(i + 1 - z, j - z));
            }
        }
    }
    for i in 0..s_ {
        for z in ht(i, 0)..bound as i32 {
            out.push(Lozenge::sw_ne(i - z, -z));
        }
        for j in 0..s_ {
            for z in ht(i, j + 1)..ht(i, j) {
                out.push(Lozenge::sw_ne(i - z, j + 1 - z));
            }
        }
    }
    out
}

fn in_half(t: Tri) -> bool {
    t.strip() >= 0
}

/// Base region for `δ_n + δ_k` with entries at most `bound`, free boundary
/// positions `0 ..= bound + n - 1` listed in `allowed`.
fn base_region(n: usize, k: usize, bound: u32, allowed: impl Fn(i32) -> bool) -> Region {
    let mu = StrictPartition::double_staircase(n, k);
    let s = n + k;
    let zero = |_: usize, _: usize| 0u32;
    let mut core = BTreeSet::new();
    for l in surface(&zero, s, bound) {
        if l.kind() == Ok(LozengeKind::Horizontal) {
            // tops over cells outside the diagram stay at height 0 in every
            // filling, so they are not part of the region
            let (i, j) = l.lo;
            if i >= 0 && j >= 0 && !in_sym(&mu, i as usize, j as usize) {
                continue;
            }
        }
        for t in l.tris() {
            if in_half(t) {
                core.insert(t);
            }
        }
    }
    let mut optional = BTreeSet::new();
    // boundary label of Lo(p, p) is n - 1 - p
    for p in -(bound as i32)..n as i32 {
        if allowed(n as i32 - 1 - p) && core.contains(&Tri::Up(p, p)) {
            optional.insert(Tri::Lo(p, p));
        }
    }
    Region { n, k, core, optional }
}

/// The flashlight region `F_{x,y,z,t}`, with `(m, n - k, k, a) = (x, y, z, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FlashlightRegion {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub t: u32,
}

impl FlashlightRegion {
    pub fn new(x: u32, y: u32, z: u32, t: u32) -> Self {
        FlashlightRegion { x, y, z, t }
    }

    pub fn from_mnka(m: u32, n: usize, k: usize, a: u32) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidSpec(format!("k = {k} exceeds n = {n}")));
        }
        Ok(FlashlightRegion { x: m, y: (n - k) as u32, z: k as u32, t: a })
    }

    pub fn n(&self) -> usize {
        (self.y + self.z) as usize
    }

    pub fn k(&self) -> usize {
        self.z as usize
    }

    pub fn m(&self) -> u32 {
        self.x
    }

    pub fn a(&self) -> u32 {
        self.t
    }

    /// `F~`: the region of `F_{m+a, n-k, k, 0}` with its lowest `a` free
    /// boundary edges closed.
    pub fn tilde(&self) -> Region {
        let a = self.t as i32;
        base_region(self.n(), self.k(), self.x + self.t, |label| label >= a)
    }
}

impl fmt::Display for FlashlightRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{},{},{})", self.x, self.y, self.z, self.t)
    }
}

/// `R^{(k,n-k)}_m(λ)`: the free boundary is closed except at the positions
/// `I_n(λ)`, where a triangle is adjoined.
pub fn anchored_region(lam: &Partition, k: usize, n: usize, m: u32) -> Result<Region> {
    if k > n || lam.len() > n || lam.first() > m {
        return Err(Error::InvalidSpec(format!("λ = {lam} does not fit (m^n) with m = {m}, n = {n}")));
    }
    let labels: BTreeSet<i32> = index_set(lam, n)?.into_iter().map(|v| v as i32).collect();
    let mut r = base_region(n, k, m, |l| labels.contains(&l));
    let adj = std::mem::take(&mut r.optional);
    r.core.extend(adj);
    Ok(r)
}
