//! Lozenge tilings: the encoding through shifted plane partitions, an
//! independent perfect-matching enumerator, weights and generating
//! functions.

use std::collections::{BTreeSet, HashMap, HashSet};

use petgraph::algo::{maximum_matching, tarjan_scc};
use petgraph::graph::{DiGraph, NodeIndex, UnGraph};
use petgraph::visit::EdgeRef;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::characters::classical::{orth_b_quotient, symplectic_quotient};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, Quotient, Rational};
use crate::shapes::spp::{for_each_spp, ProfileFilter, ShiftedPlanePartition};
use crate::shapes::{Partition, StrictPartition};

use super::region::{anchored_region, in_sym, surface, FlashlightRegion, Lozenge, LozengeKind, Region, Tri};

/// Largest region handed to the matching enumerator.
pub const MATCHING_LIMIT: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LozengeTiling {
    pub lozenges: BTreeSet<Lozenge>,
}

impl LozengeTiling {
    /// Positions on the free boundary where a lozenge protrudes, as labels.
    pub fn protrusions(&self, n: usize) -> Vec<i32> {
        let mut v: Vec<i32> = self
            .lozenges
            .iter()
            .filter(|l| l.kind() == Ok(LozengeKind::Horizontal) && l.lo.0 == l.lo.1)
            .map(|l| n as i32 - 1 - l.lo.0)
            .collect();
        v.sort();
        v
    }

    /// True when the lozenges cover `region.core` exactly once and use only
    /// optional triangles otherwise.
    pub fn covers(&self, region: &Region) -> bool {
        let mut seen = HashSet::new();
        for l in &self.lozenges {
            if l.kind().is_err() {
                return false;
            }
            for t in l.tris() {
                if !(region.core.contains(&t) || region.optional.contains(&t)) || !seen.insert(t) {
                    return false;
                }
            }
        }
        region.core.iter().all(|t| seen.contains(t))
    }
}

/// The weight of one lozenge in a region for `(k, n - k)`.
pub fn lozenge_weight(l: &Lozenge, k: usize, n: usize) -> Result<LaurentPoly> {
    if l.kind()? != LozengeKind::SwNe {
        return Ok(LaurentPoly::one(n));
    }
    let c = l.strip();
    let i = n as i32 + k as i32 - c;
    if c < 0 || i < 1 {
        return Err(Error::InvalidSpec(format!("lozenge {l:?} outside the region's columns")));
    }
    let i = i as usize;
    Ok(if i <= 2 * k {
        let j = i.div_ceil(2) - 1;
        LaurentPoly::var_pow(n, j, if i % 2 == 1 { 1 } else { -1 })
    } else {
        LaurentPoly::var(n, i - k - 1)
    })
}

/// Product of the lozenge weights; column `i` from the right holds strip
/// `n + k - i`.
pub fn tiling_weight(t: &LozengeTiling, k: usize, n: usize) -> Result<LaurentPoly> {
    let mut w = LaurentPoly::one(n);
    for l in &t.lozenges {
        if l.kind()? == LozengeKind::SwNe {
            w = &w * &lozenge_weight(l, k, n)?;
        }
    }
    Ok(w)
}

/// The tiling of a region of `δ_n + δ_k` read off an SPP: the upper half of
/// the stepped surface of its symmetric extension.
pub fn spp_to_tiling(s: &ShiftedPlanePartition, bound: u32) -> LozengeTiling {
    let mu = s.mu.clone();
    let size = mu.parts().first().copied().unwrap_or(0) as usize;
    let h = |i: usize, j: usize| if in_sym(&mu, i, j) { s.at(i.min(j), i.max(j)).unwrap_or(0) } else { 0 };
    let mut lozenges = BTreeSet::new();
    for l in surface(&h, size, bound) {
        let [lo, up] = l.tris();
        let keep = match l.kind() {
            Ok(LozengeKind::Horizontal) => {
                // tops over cells outside the diagram are not part of the region
                let (i, j) = l.lo;
                up.strip() >= 0 && !(i >= 0 && j >= 0 && !in_sym(&mu, i as usize, j as usize))
            }
            _ => lo.strip() >= 0 && up.strip() >= 0,
        };
        if keep {
            lozenges.insert(l);
        }
    }
    LozengeTiling { lozenges }
}

/// Inverse of [`spp_to_tiling`]. Along a diagonal the cells' tops appear in
/// the same order as the cells, since heights weakly decrease.
pub fn tiling_to_spp(t: &LozengeTiling, n: usize, k: usize) -> Result<ShiftedPlanePartition> {
    let mu = StrictPartition::double_staircase(n, k);
    let mut rows: Vec<Vec<u32>> = mu.parts().iter().map(|&l| vec![0; l as usize]).collect();
    for d in 0..mu.parts().first().copied().unwrap_or(0) as i32 {
        let mut tops: Vec<i32> = t
            .lozenges
            .iter()
            .filter(|l| l.kind() == Ok(LozengeKind::Horizontal) && l.lo.1 - l.lo.0 == d)
            .map(|l| l.lo.0)
            .collect();
        tops.sort();
        let cells: Vec<usize> = (0..mu.len()).take_while(|&i| d < mu.parts()[i] as i32).collect();
        if tops.len() < cells.len() {
            return Err(Error::InvalidSpec(format!("diagonal {d} has {} top faces for {} cells", tops.len(), cells.len())));
        }
        for (&i, &a) in cells.iter().zip(&tops) {
            let h = i as i32 - a;
            if h < 0 {
                return Err(Error::InvalidSpec(format!("cell ({i},{}) lies below its top face", i as i32 + d)));
            }
            rows[i][d as usize] = h as u32;
        }
    }
    ShiftedPlanePartition::new(mu, rows)
}

/// Tilings of `R^{(k,n-k)}_m(λ)` through the SPP encoding.
pub fn anchored_tilings(lam: &Partition, k: usize, n: usize, m: u32) -> Result<Vec<LozengeTiling>> {
    anchored_region(lam, k, n, m)?;
    let mu = StrictPartition::double_staircase(n, k);
    let set: HashSet<Partition> = [lam.clone()].into_iter().collect();
    let mut out = Vec::new();
    for_each_spp(&mu, m, ProfileFilter::Only(&set), |s| out.push(spp_to_tiling(s, m)));
    Ok(out)
}

/// Tilings of `F~` through the SPP encoding: profiles in `(a^n) + Par((m^n))`.
pub fn tilde_tilings(f: &FlashlightRegion) -> Vec<LozengeTiling> {
    let (n, k) = (f.n(), f.k());
    let mu = StrictPartition::double_staircase(n, k);
    let bound = f.x + f.t;
    let set: HashSet<Partition> =
        Partition::in_rect(f.x, n).into_iter().map(|l| l.plus_rect(f.t, n)).collect();
    let mut out = Vec::new();
    for_each_spp(&mu, bound, ProfileFilter::Only(&set), |s| out.push(spp_to_tiling(s, bound)));
    out
}

/// Every tiling of the region by exhaustive search over perfect matchings
/// of its triangles; free-boundary triangles may stay uncovered.
pub fn matching_tilings(region: &Region) -> Result<Vec<LozengeTiling>> {
    if region.triangle_count() > MATCHING_LIMIT {
        return Err(Error::InvalidSpec(format!(
            "matching enumeration is limited to {MATCHING_LIMIT} triangles, region has {}",
            region.triangle_count()
        )));
    }
    Ok(matchings_unchecked(region))
}

pub(crate) fn matchings_unchecked(region: &Region) -> Vec<LozengeTiling> {
    let core: Vec<Tri> = region.core.iter().copied().collect();
    let mut used: HashSet<Tri> = HashSet::new();
    let mut current = Vec::new();
    let mut out = Vec::new();
    search(region, &core, 0, &mut used, &mut current, &mut out);
    out
}

fn search(
    region: &Region,
    core: &[Tri],
    mut pos: usize,
    used: &mut HashSet<Tri>,
    current: &mut Vec<Lozenge>,
    out: &mut Vec<LozengeTiling>,
) {
    while pos < core.len() && used.contains(&core[pos]) {
        pos += 1;
    }
    if pos == core.len() {
        out.push(LozengeTiling { lozenges: current.iter().copied().collect() });
        return;
    }
    let t = core[pos];
    used.insert(t);
    for nb in t.neighbours() {
        if used.contains(&nb) || !(region.core.contains(&nb) || region.optional.contains(&nb)) {
            continue;
        }
        used.insert(nb);
        current.push(Lozenge::new(t, nb).expect("neighbours form a lozenge"));
        search(region, core, pos + 1, used, current, out);
        current.pop();
        used.remove(&nb);
    }
    used.remove(&t);
}

/// Lozenges present in every tiling. Unused free-boundary triangles are
/// paired with dummy partners so that tilings become perfect matchings; a
/// matched edge lies in every perfect matching exactly when no alternating
/// cycle passes through it.
pub fn forced_lozenges(region: &Region) -> Vec<Lozenge> {
    let tris: Vec<Tri> = region.core.iter().chain(&region.optional).copied().collect();
    let index: HashMap<Tri, usize> = tris.iter().enumerate().map(|(i, t)| (*t, i)).collect();
    let ups = tris.iter().filter(|t| matches!(t, Tri::Up(..))).count();
    let los = tris.len() - ups;
    // Lo and Up counts differ by the unused optional triangles, all of them Lo
    let Some(dummies) = los.checked_sub(ups) else {
        return Vec::new();
    };
    let mut g: UnGraph<(), ()> = UnGraph::default();
    for _ in 0..tris.len() + dummies {
        g.add_node(());
    }
    for (i, t) in tris.iter().enumerate() {
        if let Tri::Lo(..) = t {
            for nb in t.neighbours() {
                if let Some(&j) = index.get(&nb) {
                    g.add_edge(NodeIndex::new(i), NodeIndex::new(j), ());
                }
            }
            if region.optional.contains(t) {
                for d in 0..dummies {
                    g.add_edge(NodeIndex::new(i), NodeIndex::new(tris.len() + d), ());
                }
            }
        }
    }
    let matching = maximum_matching(&g);
    if !matching.is_perfect() {
        return Vec::new();
    }
    // alternate: Lo -> Up along unmatched edges, Up -> Lo along matched ones
    let mut d: DiGraph<(), ()> = DiGraph::default();
    for _ in 0..g.node_count() {
        d.add_node(());
    }
    for e in g.edge_references() {
        let (u, v) = (e.source(), e.target());
        let (lo, up) = if u.index() < tris.len() && matches!(tris[u.index()], Tri::Lo(..)) { (u, v) } else { (v, u) };
        if matching.mate(lo) == Some(up) {
            d.add_edge(up, lo, ());
        } else {
            d.add_edge(lo, up, ());
        }
    }
    let mut comp = vec![0; d.node_count()];
    for (c, scc) in tarjan_scc(&d).into_iter().enumerate() {
        for v in scc {
            comp[v.index()] = c;
        }
    }
    let mut forced: Vec<Lozenge> = matching
        .edges()
        .filter(|(u, v)| u.index() < tris.len() && v.index() < tris.len() && comp[u.index()] != comp[v.index()])
        .map(|(u, v)| Lozenge::new(tris[u.index()], tris[v.index()]).expect("edges join neighbours"))
        .collect();
    forced.sort();
    forced
}

/// The lozenges common to every tiling of `F~`, by enumeration.
pub fn forced_by_enumeration(f: &FlashlightRegion) -> Vec<Lozenge> {
    let mut forced: Option<BTreeSet<Lozenge>> = None;
    for t in tilde_tilings(f) {
        forced = Some(match forced {
            None => t.lozenges,
            Some(acc) => acc.intersection(&t.lozenges).copied().collect(),
        });
    }
    forced.unwrap_or_default().into_iter().collect()
}

/// `F = F~` minus its forced corner; returns the region and the forced lozenges.
pub fn flashlight_region(f: &FlashlightRegion) -> (Region, Vec<Lozenge>) {
    let mut r = f.tilde();
    let forced = forced_lozenges(&r);
    for l in &forced {
        for t in l.tris() {
            r.core.remove(&t);
            r.optional.remove(&t);
        }
    }
    (r, forced)
}

/// Tilings of `F_{x,y,z,t}` through the SPP encoding, forced lozenges removed.
pub fn enumerate_tilings(f: &FlashlightRegion) -> Vec<LozengeTiling> {
    let (_, forced) = flashlight_region(f);
    tilde_tilings(f)
        .into_iter()
        .map(|mut t| {
            for l in &forced {
                t.lozenges.remove(l);
            }
            t
        })
        .collect()
}

fn tail_monomial(n: usize, k: usize, e2: i32) -> LaurentPoly {
    (k..n).fold(LaurentPoly::one(n), |p, i| &p * &LaurentPoly::var_pow2(n, i, e2))
}

/// `Σ_T wt(T)` over the tilings of `F_{m, n-k, k, a}`, from the SPP encoding.
pub fn tiling_gf_enumerated(m: u32, n: usize, k: usize, a: u32) -> Result<LaurentPoly> {
    let f = FlashlightRegion::from_mnka(m, n, k, a)?;
    let mut acc = LaurentPoly::zero(n);
    for t in enumerate_tilings(&f) {
        acc += &tiling_weight(&t, k, n)?;
    }
    Ok(acc)
}

/// `o^B_{((m/2)^n)}(x) sp_{((m/2+a)^k)}(x_1..x_k) (x_{k+1}..x_n)^{m/2}`.
pub fn tiling_gf(m: u32, n: usize, k: usize, a: u32) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::InvalidSpec(format!("k = {k} exceeds n = {n}")));
    }
    let ob = orth_b_quotient(&vec![m as i32; n], n)?;
    let mut q: Quotient = ob.times_poly(&tail_monomial(n, k, m as i32));
    if k > 0 {
        let sp = symplectic_quotient(&vec![(m + 2 * a) as i32; k], k)?;
        q = q.times(&sp.embed(n, &(0..k).collect::<Vec<_>>()));
    }
    q.value()
}

/// The tiling generating function of `F~` against `(x_{k+1}..x_n)^a` times
/// that of `F`, both by enumeration.
pub fn forced_corner_check(m: u32, n: usize, k: usize, a: u32) -> Result<bool> {
    let f = FlashlightRegion::from_mnka(m, n, k, a)?;
    let mut tilde = LaurentPoly::zero(n);
    for t in tilde_tilings(&f) {
        tilde += &tiling_weight(&t, k, n)?;
    }
    let (_, forced) = flashlight_region(&f);
    let mut corner = LaurentPoly::one(n);
    for l in &forced {
        corner = &corner * &lozenge_weight(l, k, n)?;
    }
    let plain = tiling_gf_enumerated(m, n, k, a)?;
    let mono = tail_monomial(n, k, 2 * a as i32);
    Ok(corner == mono && tilde == &mono * &plain)
}

/// `∏_{i≤j≤y+z} (x+i+j+c)/(i+j+c) ∏_{i≤j≤z} (x+2t+i+j)/(i+j)`; `c = 1` is
/// the printed form, `c = -1` agrees with enumeration.
pub fn tiling_product(f: &FlashlightRegion, offset: i64) -> Option<Rational> {
    let (x, t) = (f.x as i64, f.t as i64);
    let mut r = Rational::one();
    let n = (f.y + f.z) as i64;
    for i in 1..=n {
        for j in i..=n {
            let d = i + j + offset;
            if d == 0 {
                return None;
            }
            r *= Rational::new((x + i + j + offset).into(), d.into());
        }
    }
    for i in 1..=f.z as i64 {
        for j in i..=f.z as i64 {
            r *= Rational::new((x + 2 * t + i + j).into(), (i + j).into());
        }
    }
    Some(r)
}

/// The resolved index offset of the product formula.
pub const TILING_OFFSET: i64 = -1;

#[derive(Clone, Debug, Serialize)]
pub struct FlashlightReport {
    pub region: FlashlightRegion,
    pub triangles: usize,
    pub count: u64,
    pub matching_count: Option<u64>,
    pub printed_product: String,
    pub resolved_product: String,
    pub gf_at_ones: String,
    pub equal: bool,
}

/// Brute-force count of `F_{x,y,z,t}` with both formulas alongside.
pub fn flashlight_count(f: &FlashlightRegion) -> Result<FlashlightReport> {
    let (region, _) = flashlight_region(f);
    let count = enumerate_tilings(f).len() as u64;
    let matching_count = if region.triangle_count() <= MATCHING_LIMIT {
        Some(matching_tilings(&region)?.len() as u64)
    } else {
        None
    };
    let fmt = |r: Option<Rational>| r.map(|r| crate::ring::poly::fmt_rational(&r)).unwrap_or_else(|| "undefined".into());
    let printed = tiling_product(f, 1);
    let resolved = tiling_product(f, TILING_OFFSET);
    let at_ones = tiling_gf(f.x, f.n(), f.k(), f.t)?.coeff_sum();
    let c = Rational::from_integer(BigInt::from(count));
    let equal = resolved.as_ref() == Some(&c) && at_ones == c && matching_count.is_none_or(|mc| mc == count);
    Ok(FlashlightReport {
        region: *f,
        triangles: region.triangle_count(),
        count,
        matching_count,
        printed_product: fmt(printed),
        resolved_product: fmt(resolved),
        gf_at_ones: crate::ring::poly::fmt_rational(&at_ones),
        equal,
    })
}

/// Offsets `c` for which the product agrees with the matching count on every
/// region in the list that the matching enumerator accepts.
pub fn resolve_tiling_offset(regions: &[FlashlightRegion], candidates: &[i64]) -> Result<Vec<i64>> {
    let mut counts = Vec::new();
    for f in regions {
        let (r, _) = flashlight_region(f);
        if r.triangle_count() <= MATCHING_LIMIT {
            counts.push((*f, matching_tilings(&r)?.len() as u64));
        }
    }
    Ok(candidates
        .iter()
        .copied()
        .filter(|&c| {
            counts
                .iter()
                .all(|(f, n)| tiling_product(f, c) == Some(Rational::from_integer(BigInt::from(*n))))
        })
        .collect())
}

/// Flashlight regions with at most `limit` triangles inside the parameter box.
pub fn small_flashlights(x_max: u32, yz_max: u32, t_max: u32, limit: usize) -> Vec<FlashlightRegion> {
    let mut out = Vec::new();
    for x in 0..=x_max {
        for y in 0..=yz_max {
            for z in 0..=yz_max - y {
                for t in 0..=t_max {
                    let f = FlashlightRegion::new(x, y, z, t);
                    if flashlight_region(&f).0.triangle_count() <= limit {
                        out.push(f);
                    }
                }
            }
        }
    }
    out
}

/// Lemma check: the tiling generating function of `R^{(k,n-k)}_m(λ)`
/// against the character, and the bijection against the matching count
/// where the region is small enough.
pub fn sp_tiling_sides(lam: &Partition, k: usize, n: usize, m: u32) -> Result<(LaurentPoly, LaurentPoly)> {
    let mut acc = LaurentPoly::zero(n);
    for t in anchored_tilings(lam, k, n, m)? {
        acc += &tiling_weight(&t, k, n)?;
    }
    Ok((acc, crate::characters::intsymp::tableau_sum(lam, k, n)?))
}

/// `wt(T)` against the weight of the tableau that `T` encodes, on every
/// tiling of `R^{(k,n-k)}_m(λ)`.
pub fn weight_transport(lam: &Partition, k: usize, n: usize, m: u32) -> Result<bool> {
    for t in anchored_tilings(lam, k, n, m)? {
        let s = tiling_to_spp(&t, n, k)?;
        let tab = crate::shapes::spp::spp_to_tableau(&s, k, n)?;
        if tiling_weight(&t, k, n)? != tab.weight() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of the tiling generating function identity agree.
pub fn tiling_gf_check(m: u32, n: usize, k: usize, a: u32) -> Result<bool> {
    Ok(tiling_gf_enumerated(m, n, k, a)? == tiling_gf(m, n, k, a)?)
}

/// The SPP matrix of a tiling, one shifted row per line.
pub fn render_tiling(t: &LozengeTiling, n: usize, k: usize) -> Result<String> {
    let s = tiling_to_spp(t, n, k)?;
    let width = s.rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    let lines: Vec<String> = s
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let cells: Vec<String> = r.iter().map(|v| format!("{v:>width$}")).collect();
            format!("{}{}", " ".repeat(i * (width + 1)), cells.join(" "))
        })
        .collect();
    Ok(lines.join("\n"))
}
