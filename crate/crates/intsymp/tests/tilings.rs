use std::collections::HashSet;

use intsymp::characters::intsymp::tableau_sum;
use intsymp::ring::{rat, LaurentPoly};
use intsymp::shapes::spp::ShiftedPlanePartition;
use intsymp::shapes::{Partition, StrictPartition};
use intsymp::tilings::*;
use proptest::prelude::*;

fn figure5() -> ShiftedPlanePartition {
    ShiftedPlanePartition::new(
        StrictPartition::double_staircase(4, 2),
        vec![vec![4, 4, 2, 2, 1, 0], vec![3, 2, 2, 1], vec![1, 1], vec![1]],
    )
    .unwrap()
}

#[test]
fn figure5_weight() {
    let t = spp_to_tiling(&figure5(), 4);
    assert_eq!(tiling_weight(&t, 2, 4).unwrap().to_text(), "x1^-1 x2 x3^3 x4^2");
    assert_eq!(tiling_to_spp(&t, 4, 2).unwrap(), figure5());
    assert_eq!(render_tiling(&t, 4, 2).unwrap().lines().next().unwrap(), "4 4 2 2 1 0");
}

#[test]
fn empty_tiling() {
    let t = LozengeTiling { lozenges: Default::default() };
    assert_eq!(tiling_weight(&t, 0, 1).unwrap(), LaurentPoly::one(1));
    let r = Region::empty(1, 0);
    assert_eq!(matching_tilings(&r).unwrap().len(), 1);
    let f = FlashlightRegion::new(0, 2, 1, 0);
    assert_eq!(flashlight_count(&f).unwrap().count, 1);
}

#[test]
fn lozenge_adjacency() {
    assert!(Lozenge::new(Tri::Lo(0, 0), Tri::Up(0, 0)).is_ok());
    assert!(Lozenge::new(Tri::Up(0, 0), Tri::Lo(0, 1)).is_ok());
    assert!(Lozenge::new(Tri::Lo(0, 0), Tri::Up(2, 0)).is_err());
    assert!(Lozenge::new(Tri::Lo(0, 0), Tri::Lo(0, 1)).is_err());
}

#[test]
fn encoder_matches_matchings() {
    for n in 1..=3 {
        for k in 0..=n {
            for m in 0..=2 {
                for lam in Partition::in_rect(m, n) {
                    let r = anchored_region(&lam, k, n, m).unwrap();
                    if r.triangle_count() > MATCHING_LIMIT {
                        assert!(matching_tilings(&r).is_err());
                        continue;
                    }
                    let enc = anchored_tilings(&lam, k, n, m).unwrap();
                    assert!(enc.iter().all(|t| t.covers(&r)));
                    let a: HashSet<_> = enc.into_iter().collect();
                    let b: HashSet<_> = matching_tilings(&r).unwrap().into_iter().collect();
                    assert_eq!(a, b, "λ={lam} k={k} n={n} m={m}");
                }
            }
        }
    }
}

#[test]
fn protrusions_follow_index_set() {
    let lam = Partition::new(vec![2, 1]).unwrap();
    let idx: Vec<i32> = intsymp::shapes::index_set(&lam, 2).unwrap().into_iter().map(|v| v as i32).collect();
    for t in anchored_tilings(&lam, 1, 2, 2).unwrap() {
        assert_eq!(t.protrusions(2), idx);
    }
}

#[test]
fn sp_tiling_lemma() {
    for lam in Partition::in_rect(2, 2) {
        for k in 0..=2 {
            let (l, r) = sp_tiling_sides(&lam, k, 2, 2).unwrap();
            assert_eq!(l, r, "λ={lam} k={k}");
            let count = anchored_tilings(&lam, k, 2, 2).unwrap().len() as i64;
            assert_eq!(rat(count), tableau_sum(&lam, k, 2).unwrap().coeff_sum());
        }
    }
    let lam = Partition::new(vec![1, 1]).unwrap();
    assert!(weight_transport(&lam, 2, 2, 2).unwrap());
}

#[test]
fn tiling_gf_examples() {
    assert_eq!(tiling_gf(0, 2, 1, 0).unwrap(), LaurentPoly::one(2));
    assert_eq!(tiling_gf(1, 1, 0, 0).unwrap().coeff_sum(), rat(2));
    let g = tiling_gf(2, 2, 1, 0).unwrap();
    assert_eq!(g.coeff_sum(), rat(enumerate_tilings(&FlashlightRegion::new(2, 1, 1, 0)).len() as i64));
    assert!(forced_corner_check(1, 2, 1, 1).unwrap());
}

#[test]
fn tiling_gf_symbolic() {
    for m in 0..=2 {
        for n in 1..=2 {
            for k in 0..=n {
                for a in 0..=1 {
                    assert!(tiling_gf_check(m, n, k, a).unwrap(), "m={m} n={n} k={k} a={a}");
                }
            }
        }
    }
}

#[test]
fn flashlight_examples() {
    let r = flashlight_count(&FlashlightRegion::new(1, 1, 0, 0)).unwrap();
    assert_eq!(r.count, 2);
    assert_eq!(r.matching_count, Some(2));
    assert_eq!(r.printed_product, "4/3");
    assert!(r.equal);
    let r = flashlight_count(&FlashlightRegion::new(2, 1, 1, 0)).unwrap();
    assert_eq!(r.count, 20);
    assert!(r.equal, "{r:?}");
    for y in 0..=2 {
        for z in 0..=2 {
            assert_eq!(flashlight_count(&FlashlightRegion::new(0, y, z, 0)).unwrap().count, 1);
        }
    }
}

#[test]
fn forced_lozenges_match_enumeration() {
    for f in small_flashlights(3, 3, 2, 40) {
        assert_eq!(flashlight_region(&f).1, forced_by_enumeration(&f), "{f}");
    }
}

#[test]
fn offset_is_resolved() {
    let regions = small_flashlights(2, 3, 2, MATCHING_LIMIT);
    assert!(regions.len() > 40);
    assert_eq!(resolve_tiling_offset(&regions, &[-2, -1, 0, 1, 2]).unwrap(), vec![TILING_OFFSET]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn round_trip_and_cover(n in 1usize..=3, k in 0usize..=3, m in 0u32..=2, pick in any::<prop::sample::Index>()) {
        let k = k.min(n);
        let lams = Partition::in_rect(m, n);
        let lam = &lams[pick.index(lams.len())];
        let r = anchored_region(lam, k, n, m).unwrap();
        for t in anchored_tilings(lam, k, n, m).unwrap() {
            prop_assert!(t.covers(&r));
            let s = tiling_to_spp(&t, n, k).unwrap();
            prop_assert_eq!(spp_to_tiling(&s, m), t);
        }
    }

    #[test]
    fn ones_is_count(x in 0u32..=2, y in 0u32..=2, z in 0u32..=1, t in 0u32..=1) {
        let f = FlashlightRegion::new(x, y, z, t);
        let g = tiling_gf(x, f.n(), f.k(), t).unwrap();
        prop_assert!(g.has_nonnegative_integer_coeffs());
        prop_assert_eq!(g.coeff_sum(), rat(enumerate_tilings(&f).len() as i64));
    }
}
