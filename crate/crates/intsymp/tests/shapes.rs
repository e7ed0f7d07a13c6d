use std::collections::HashSet;

use intsymp::ring::LaurentPoly;
use intsymp::shapes::*;
use proptest::prelude::*;

fn par(s: &str) -> Partition {
    s.parse().unwrap()
}

fn paper_tableau() -> IntSympTableau {
    let (p, b) = (Letter::plain, Letter::bar);
    IntSympTableau::new(vec![vec![b(1), p(2), p(3), p(3)], vec![p(2), b(2), p(4)], vec![p(3)], vec![p(4)]], 2, 4).unwrap()
}

fn paper_spp() -> ShiftedPlanePartition {
    ShiftedPlanePartition::new(
        StrictPartition::double_staircase(4, 2),
        vec![vec![4, 4, 2, 2, 1, 0], vec![3, 2, 2, 1], vec![1, 1], vec![1]],
    )
    .unwrap()
}

#[test]
fn conjugation() {
    assert_eq!(Partition::empty().conjugate(), Partition::empty());
    assert_eq!(par("4,3,1,1").conjugate(), par("4,2,2,1"));
    assert_eq!(par("4,3,1,1").conjugate().conjugate(), par("4,3,1,1"));
}

#[test]
fn families() {
    assert_eq!(shape_family(1, 1, Family::Par), vec![Partition::empty(), par("1")]);
    let ep: HashSet<_> = shape_family(2, 2, Family::EvenPrime).into_iter().collect();
    assert_eq!(ep, [Partition::empty(), par("1,1"), par("2,2")].into_iter().collect());
    assert_eq!(shape_family(2, 2, Family::OddPrime), vec![par("2")]);
    for m in 1..=6u32 {
        for n in 1..=6usize {
            let all = shape_family(m, n, Family::Par);
            let binom = (1..=n as u64).fold(1u64, |acc, i| acc * (m as u64 + i) / i);
            assert_eq!(all.len() as u64, binom);
            let e = shape_family(m, n, Family::EvenPrime);
            let o = shape_family(m, n, Family::OddPrime);
            assert!(e.iter().all(|l| !o.contains(l)));
            assert!(e.iter().chain(&o).all(|l| all.contains(l)));
        }
    }
}

#[test]
fn index_sets() {
    assert_eq!(index_set(&Partition::empty(), 3).unwrap(), vec![0, 1, 2]);
    assert_eq!(index_set(&par("4,3,1,1"), 4).unwrap(), vec![1, 2, 5, 7]);
    let images: HashSet<Vec<usize>> = shape_family(2, 2, Family::Par).iter().map(|l| index_set(l, 2).unwrap()).collect();
    assert_eq!(images.len(), 6);
    assert!(images.iter().all(|s| s.iter().all(|&v| v <= 3)));
    for m in 0..4 {
        for n in 1..4 {
            for l in shape_family(m, n, Family::Par) {
                assert_eq!(from_index_set(&index_set(&l, n).unwrap()).unwrap(), l);
            }
        }
    }
}

#[test]
fn frobenius_examples() {
    assert_eq!(frobenius(&par("1")).to_string(), "(0|0)");
    let f = frobenius(&par("4,3,1,1"));
    assert_eq!((f.arms.clone(), f.legs.clone()), (vec![3, 1], vec![3, 0]));
    assert_eq!(f.to_partition(), par("4,3,1,1"));
    for a in 0..4 {
        for b in 0..4 {
            let h = frobenius(&hook(a, b));
            assert_eq!((h.arms, h.legs), (vec![a], vec![b]));
        }
    }
    for l in Partition::in_rect(4, 4) {
        assert_eq!(frobenius(&l).to_partition(), l);
    }
}

#[test]
fn tableau_examples() {
    let t = enumerate_tableaux(&par("1"), 1, 1).unwrap();
    let s: Vec<String> = t.iter().map(|t| t.to_string()).collect();
    assert_eq!(s, vec!["1", "1!"]);
    assert_eq!(enumerate_tableaux(&Partition::empty(), 2, 3).unwrap().len(), 1);
    assert_eq!(paper_tableau().weight(), LaurentPoly::parse("x1^-1 x2 x3^3 x4^2", 4).unwrap());
    assert_eq!(enumerate_tableaux(&Partition::empty(), 0, 0).unwrap()[0].weight(), LaurentPoly::one(0));
    let bar = IntSympTableau::new(vec![vec![Letter::bar(1)]], 1, 1).unwrap();
    assert_eq!(bar.weight(), LaurentPoly::parse("x1^-1", 1).unwrap());
    // rectangles: rows below k are constant
    for t in enumerate_tableaux(&Partition::rect(2, 3), 1, 3).unwrap() {
        for (i, row) in t.rows.iter().enumerate().skip(1) {
            assert!(row.iter().all(|l| *l == Letter::plain(i as u32 + 1)));
        }
    }
    // every enumerated filling is valid and distinct
    let all = enumerate_tableaux(&par("2,1"), 1, 3).unwrap();
    let uniq: HashSet<_> = all.iter().cloned().collect();
    assert_eq!(uniq.len(), all.len());
    assert!(all.iter().all(|t| t.validate().is_ok()));
    assert!(IntSympTableau::new(vec![vec![Letter::plain(1)], vec![Letter::plain(1)]], 1, 2).is_err());
}

#[test]
fn spp_examples() {
    let one = StrictPartition::new(vec![1]).unwrap();
    assert_eq!(enumerate_spp(&one, 1, None).len(), 2);
    assert_eq!(enumerate_spp(&StrictPartition::double_staircase(2, 1), 2, None).len(), 20);
    assert_eq!(paper_spp().profile(), par("4,3,1,1"));
    let t = spp_to_tableau(&paper_spp(), 2, 4).unwrap();
    assert_eq!(t, paper_tableau());
    assert_eq!(tableau_to_spp(&t).unwrap(), paper_spp());
    let filt: HashSet<Partition> = [par("2")].into_iter().collect();
    let some = enumerate_spp(&StrictPartition::double_staircase(2, 2), 2, Some(&filt));
    assert!(!some.is_empty() && some.iter().all(|s| s.profile() == par("2")));
}

#[test]
fn bijection_round_trip_and_counts() {
    for n in 1..=3usize {
        for k in 0..=n {
            let mu = StrictPartition::double_staircase(n, k);
            let all = enumerate_spp(&mu, 2, None);
            let mut seen = HashSet::new();
            for s in &all {
                let t = spp_to_tableau(s, k, n).unwrap();
                assert_eq!(t.shape, s.profile());
                assert_eq!(&tableau_to_spp(&t).unwrap(), s);
                assert!(seen.insert(t));
            }
            let total: usize =
                Partition::in_rect(2, n).iter().map(|l| enumerate_tableaux(l, k, n).unwrap().len()).sum();
            assert_eq!(total, all.len());
        }
    }
}

#[test]
fn statistics() {
    let mu = StrictPartition::double_staircase(3, 1);
    let z = spp_statistics(&ShiftedPlanePartition::zero(mu.clone()), 1, 3).unwrap();
    assert!(z.traces.iter().all(|&t| t == 0) && z.v2 == 0 && z.w == 0 && z.norm2 == 0 && z.size == 0);
    for s in enumerate_spp(&StrictPartition::staircase(3), 2, None) {
        let st = spp_statistics(&s, 0, 3).unwrap();
        assert_eq!(st.v2, st.norm2);
        assert_eq!(st.w, st.size);
    }
    // n = k = 1: v = t1 - t0/2 and w = 2 t1 - t0
    for s in enumerate_spp(&StrictPartition::double_staircase(1, 1), 3, None) {
        let st = spp_statistics(&s, 1, 1).unwrap();
        let (t0, t1) = (s.at(0, 0).unwrap() as i64, s.at(0, 1).unwrap() as i64);
        assert_eq!(st.v2, 2 * t1 - t0);
        assert_eq!(st.w, 2 * t1 - t0);
    }
    assert!(spp_statistics(&ShiftedPlanePartition::zero(mu), 0, 3).is_err());
}

proptest! {
    #[test]
    fn partition_text_round_trip(mut parts in prop::collection::vec(0u32..7, 0..6)) {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(serde_json::from_str::<Partition>(&serde_json::to_string(&p).unwrap()).unwrap(), p);
    }
}
