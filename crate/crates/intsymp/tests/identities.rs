use intsymp::identities::pfaffian::{q_poly, random_monomial_matrix, subsets, y_matrix};
use intsymp::identities::*;
use intsymp::ring::{Frac, LaurentPoly, PolyMatrix, SkewMatrix};
use intsymp::shapes::{index_set, Partition};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p(s: &str, n: usize) -> LaurentPoly {
    LaurentPoly::parse(s, n).unwrap()
}

fn par(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn main_identity_examples() {
    let r = verify_main(&MainIdentityCase::new(1, 1, 1, 0, 1).unwrap()).unwrap();
    assert!(r.equal);
    // ∅ and (1): 1 + (x + x^-1)
    assert_eq!(r.lhs, p("x1 + 1 + x1^-1", 1));
    for (n, k) in [(1, 0), (2, 1), (3, 3)] {
        let r = verify_main(&MainIdentityCase::new(n, k, 0, 0, 1).unwrap()).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, LaurentPoly::one(n));
    }
    assert!(verify_main(&MainIdentityCase::new(2, 1, 2, 1, 2).unwrap()).unwrap().equal);
    assert!(MainIdentityCase::new(2, 1, 1, 0, 2).is_err());
    assert!(MainIdentityCase::new(2, 1, 0, 0, 4).is_err());
    assert!(MainIdentityCase::new(2, 3, 1, 0, 1).is_err());
}

#[test]
fn main_identity_sweep_small() {
    for n in 1..=3 {
        for k in 0..=n {
            for m in 0..=3 {
                for a in 0..=1 {
                    for r in verify_main_all(n, k, m, a).unwrap() {
                        assert!(r.equal, "{:?}", r.case);
                    }
                }
            }
        }
    }
}

#[test]
fn variant_four_sign_at_n_one() {
    // n = k = 1, m = 1: Even'((1)) = {∅}, Odd'((1)) = {(1)};
    // lhs = 1 - (x + x^-1) = -(x + x^-1 - 1)
    let r = verify_main(&MainIdentityCase::new(1, 1, 1, 0, 4).unwrap()).unwrap();
    assert_eq!(r.lhs, p("1 - x1 - x1^-1", 1));
    assert!(r.equal);
}

#[test]
fn main_schur_examples() {
    let (l, r) = main_schur_sides(1, 2, 2).unwrap();
    // h2(x, 1/x, 1) against sp_0 + sp_1 + sp_2
    assert_eq!(l, p("x1^2 + x1 + 2 + x1^-1 + x1^-2", 1));
    assert_eq!(r, l);
    for c in 1..=6 {
        let (l, r) = main_schur_sides(2, 0, c).unwrap();
        assert_eq!(l, LaurentPoly::one(2));
        assert_eq!(r, LaurentPoly::one(2));
    }
    assert!(verify_main_schur(2, 1, 5).unwrap());
    for n in 1..=3 {
        for m in 0..=2 {
            for c in 1..=6 {
                assert!(verify_main_schur(n, m, c).unwrap(), "n={n} m={m} case {c}");
            }
        }
    }
}

#[test]
fn schur_at_matches_jacobi_trudi() {
    // s_(2,1)(x, x^-1, 1) against e/h expansion h2 h1 - h3
    use intsymp::characters::symmetric::{complete_h, Alphabet};
    let alph: Alphabet = pm_alphabet_one(1);
    let want = &(&complete_h(2, &alph, 1) * &complete_h(1, &alph, 1)) - &complete_h(3, &alph, 1);
    assert_eq!(schur_at(&par("2,1"), &alph, 1).unwrap(), want);
}

fn pm_alphabet_one(n: usize) -> Vec<LaurentPoly> {
    intsymp::identities::main_thm::pm_alphabet(n, n, true)
}

#[test]
fn rectangular_factorizations() {
    for n in 1..=3 {
        for m in 0..=3 {
            let sides = rect_factorization_sides(n, m).unwrap();
            assert_eq!(sides.len(), if m == 0 { 2 } else { 6 });
            for (i, (l, r)) in sides.iter().enumerate() {
                assert_eq!(l, r, "n={n} m={m} identity {}", i + 1);
            }
        }
    }
}

#[test]
fn truncation_examples() {
    assert_eq!(truncate_at_zero(&par("2"), 1, 1, 2).unwrap(), LaurentPoly::one(0));
    assert!(truncate_at_zero(&par("1"), 1, 2, 2).unwrap().is_zero());
    assert_eq!(truncate_at_zero(&par("2,1"), 2, 2, 2).unwrap(), p("x1 + x1^-1", 1));
    assert!(truncate_at_zero(&par("3"), 1, 1, 2).is_err());
    assert!(truncate_at_zero(&par("1"), 0, 1, 1).is_err());
}

#[test]
fn truncation_case_table() {
    for m in 1..=2 {
        for k in 1..=2 {
            for lam in Partition::in_rect(2, 2) {
                if lam.first() > m {
                    continue;
                }
                let got = truncate_at_zero(&lam, k, 2, m).unwrap();
                assert_eq!(got, truncate_expected(&lam, k, 2, m).unwrap(), "λ={lam} m={m} k={k}");
            }
        }
    }
}

#[test]
fn truncation_classical() {
    for kind in [ClassicalKind::Sp, ClassicalKind::OB, ClassicalKind::OD] {
        for lam in Partition::in_rect(2, 2) {
            for m in lam.first().max(1)..=2 {
                let (got, want) = truncate_classical(kind, &lam.doubled(2), 2, 2 * m as i32).unwrap();
                assert_eq!(got, want, "{kind:?} λ={lam} m={m}");
            }
        }
        if kind == ClassicalKind::Sp {
            continue;
        }
        // spin weights with m half-integral
        for w in [vec![3, 1], vec![3, 3], vec![1, 1]] {
            let (got, want) = truncate_classical(kind, &w, 2, 3).unwrap();
            assert_eq!(got, want, "{kind:?} {w:?}");
        }
    }
}

#[test]
fn reduction_transport_checks() {
    for (n, k) in [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
        for m in 0..=2 {
            for a in 0..=1 {
                assert!(reduction_transport(n, k, m, a).unwrap(), "n={n} k={k} m={m} a={a}");
            }
        }
    }
}

#[test]
fn minor_summation_examples() {
    // n = 2, M = 1, X = I
    let y = SkewMatrix::from_fn(2, LaurentPoly::zero(1), |_, _| p("x1 + 3", 1));
    let x = PolyMatrix::from_fn(2, 2, |i, j| LaurentPoly::from_int(1, (i == j) as i64));
    let (l, r) = minor_summation_sides(&x, &y, &LaurentPoly::one(1)).unwrap();
    assert_eq!(l, p("x1 + 3", 1));
    assert_eq!(r, l);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, m, kind) in [(2, 2, SubPfKind::B), (4, 2, SubPfKind::C), (4, 3, SubPfKind::D(-1))] {
        let y = build_subpf_matrix(n, m, kind, 2);
        let x = random_monomial_matrix(n, n + m, 2, &mut rng);
        assert!(minor_summation_check(&x, &y).unwrap());
    }
    assert!(minor_summation_check(&PolyMatrix::from_fn(3, 4, |_, _| LaurentPoly::one(1)), &build_subpf_matrix(3, 1, SubPfKind::B, 1)).is_err());
}

#[test]
fn subsets_count() {
    assert_eq!(subsets(6, 2).len(), 15);
    assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
    assert_eq!(subsets(3, 3), vec![vec![0, 1, 2]]);
}

#[test]
fn subpf_examples() {
    let c = build_subpf_matrix(2, 2, SubPfKind::C, 0);
    let pf = |y: &intsymp::ring::SkewSymMatrix, s: &str| y.submatrix(&index_set(&par(s), 2).unwrap()).pfaffian().unwrap();
    assert_eq!(pf(&c, "2,2"), LaurentPoly::one(0));
    assert!(pf(&c, "2,1").is_zero());
    let d = build_subpf_matrix(2, 2, SubPfKind::D(-1), 0);
    assert_eq!(pf(&d, "2"), LaurentPoly::from_int(0, -1));
    for lam in Partition::in_rect(2, 2) {
        assert_eq!(pf(&build_subpf_matrix(2, 2, SubPfKind::B, 0), &lam.to_string()), LaurentPoly::one(0));
    }
    for m in 1..=3 {
        for row in subpf_case_table(2, m).unwrap() {
            assert_eq!(row.pfaffian, row.expected, "{row:?}");
        }
    }
}

#[test]
fn q_matrix_extremes() {
    let n = 2;
    let k0 = QMatrixParams::generic(n, 0).unwrap();
    let ar = k0.arity();
    let q0 = build_q(&k0).unwrap();
    let x = |i| LaurentPoly::var(ar, i);
    let one = LaurentPoly::one(ar);
    let want0 = Frac::new(q_poly(&x(0), &x(1), &x(2), &x(3)), &(&one - &(&x(0) * &x(1)))).unwrap();
    assert!(q0.get(0, 1).equals(&want0));

    let kn = QMatrixParams::generic(n, n).unwrap();
    let ar = kn.arity();
    let x = |i| LaurentPoly::var(ar, i);
    let one = LaurentPoly::one(ar);
    let qn = build_q(&kn).unwrap();
    let num = -&(&q_poly(&x(0), &x(1), &x(2), &x(3)) * &q_poly(&x(0), &x(1), &x(4), &x(5)));
    let want = Frac::new(num, &(&(&x(1) - &x(0)) * &(&one - &(&x(0) * &x(1))))).unwrap();
    assert!(qn.get(0, 1).equals(&want));

    let a = LaurentPoly::var(2, 1);
    assert!(q_poly(&LaurentPoly::var(2, 0), &LaurentPoly::var(2, 0), &a, &a).is_zero());
    assert!(QMatrixParams::generic(3, 0).is_err());
}

#[test]
fn pf_det_det_symbolic_small() {
    for k in 0..=2 {
        assert!(verify_pf_det_det(2, k, PfCheckMode::Symbolic).unwrap(), "k={k}");
    }
    for k in [0, 2, 4] {
        assert!(verify_pf_det_det(4, k, PfCheckMode::Points { draws: 2, seed: 11 }).unwrap(), "k={k}");
    }
}

#[test]
fn pf_det_det_k0_is_direct() {
    // n = 2, k = 0: Pf Q = q(x1,x2;a1,a2)/(1-x1x2) and det W = q(x1,x2;a1,a2)
    let params = QMatrixParams::generic(2, 0).unwrap();
    let (l, r) = pf_det_det_sides(&params).unwrap();
    assert!(l.equals(&r));
    let w = intsymp::identities::pfaffian::w_matrix(&params.x, &params.a).det().unwrap();
    assert_eq!(w, q_poly(&params.x[0], &params.x[1], &params.a[0], &params.a[1]));
}

#[test]
fn sum_eq_pf_examples() {
    for (k, m, a, v) in [(1, 1, 0, 1), (0, 2, 0, 2), (2, 1, 0, 4), (1, 2, 1, 3), (1, 1, 0, 4)] {
        let r = verify_sum_eq_pf(&MainIdentityCase::new(2, k, m, a, v).unwrap()).unwrap();
        assert!(r.equal, "{r:?}");
        // the printed (-1)^{n(n-1)} is +1; the correct sign at n = 2 is -1 (times (-1)^k for variant 4)
        assert_eq!(r.observed_sign, Some(sum_pf_sign(&r.case)));
        assert!(!r.as_written || (v == 4 && k % 2 == 1));
    }
    assert!(verify_sum_eq_pf(&MainIdentityCase::new(3, 1, 1, 0, 1).unwrap()).is_err());
}

#[test]
fn pf_y_lemma() {
    for n in [2usize, 4] {
        for size in 0..=n {
            for s in subsets(n, size) {
                let kset: Vec<usize> = s.iter().map(|i| i + 1).collect();
                assert!(pf_y_check(n, &kset).unwrap(), "n={n} K={kset:?}");
            }
        }
    }
    // Y(∅) at n = 2 is the single ratio (x2 - x1)/(1 - x1 x2)
    let y = y_matrix(2, &[]).unwrap();
    assert!(y.get(0, 1).equals(&Frac::new(p("x2 - x1", 2), &p("1 - x1 x2", 2)).unwrap()));
}

#[test]
fn x_matrix_minors() {
    for k in 0..=2 {
        for a in 0..=1 {
            assert!(x_minor_check(2, k, 2, a).unwrap(), "k={k} a={a}");
        }
    }
    let x = x_matrix(2, 1, 2, 0).unwrap();
    assert_eq!((x.rows(), x.cols()), (2, 4));
}

#[test]
fn abar_denominator_closed_form() {
    // k = n: the symplectic Weyl denominator
    let d = abar_empty_det(2, 2);
    let direct = intsymp::characters::classical::symplectic_denominator(2);
    assert!(d == direct || d == -&direct);
    // k = 0: Vandermonde
    assert_eq!(abar_empty_det(0, 2), p("x1 - x2", 2));
}
