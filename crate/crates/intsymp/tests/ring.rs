use intsymp::ring::qseries::{q_parse, q_text};
use intsymp::ring::*;
use proptest::prelude::*;

fn p(s: &str, n: usize) -> LaurentPoly {
    LaurentPoly::parse(s, n).unwrap()
}

#[test]
fn arithmetic_examples() {
    let a = p("x1 + x1^-1", 1);
    let b = p("x1 - x1^-1", 1);
    assert_eq!(&a * &b, p("x1^2 - x1^-2", 1));
    assert_eq!(&a + &LaurentPoly::zero(1), a);
    let h = p("x1^1/2 + x1^-1/2", 1);
    assert_eq!(&h * &h, p("x1 + 2 + x1^-1", 1));
    assert!(a.try_add(&LaurentPoly::one(2)).is_err());
}

#[test]
fn text_and_json_round_trip() {
    let f = p("2 * x1^2 x2^-1 - 1/3 * x1^3/2 + 5", 2);
    assert_eq!(LaurentPoly::parse(&f.to_text(), 2).unwrap(), f);
    assert_eq!(LaurentPoly::from_json(&f.to_json(), 2).unwrap(), f);
    assert_eq!(p("x1 + x1^-1", 1).to_text(), "x1 + x1^-1");
    assert_eq!(LaurentPoly::one(3).to_text(), "1");
    assert_eq!(LaurentPoly::zero(3).to_text(), "0");
}

#[test]
fn exact_division_examples() {
    let q = p("x1^2 - x1^-2", 1).div_exact(&p("x1 - x1^-1", 1)).unwrap();
    assert_eq!(q, p("x1 + x1^-1", 1));
    let num = p("x1^3/2 - x1^-3/2", 1);
    let den = p("x1^1/2 - x1^-1/2", 1);
    let q = num.div_exact(&den).unwrap();
    // multiply back
    assert_eq!(&q * &den, num);
    assert_eq!(q, p("x1 + 1 + x1^-1", 1));
    assert!(p("x1 + 1", 1).div_exact(&p("x1 - 1", 1)).is_err());
    assert!(p("x1", 1).div_exact(&LaurentPoly::zero(1)).is_err());
}

#[test]
fn determinant_examples() {
    let x = |i| LaurentPoly::var(3, i);
    let m = PolyMatrix::from_fn(3, 3, |i, j| x(j).pow((2 - i) as u32));
    let vdm = &(&(&x(0) - &x(1)) * &(&x(0) - &x(2))) * &(&x(1) - &x(2));
    assert_eq!(m.det().unwrap(), vdm);
    assert_eq!(m.det_cofactor().unwrap(), vdm);
    let d = PolyMatrix::from_fn(2, 2, |i, j| if i == j { LaurentPoly::var(2, i) } else { LaurentPoly::zero(2) });
    assert_eq!(d.det().unwrap(), p("x1 x2", 2));
    assert!(PolyMatrix::from_fn(2, 3, |_, _| LaurentPoly::one(1)).det().is_err());
    let empty = PolyMatrix::new(0, 0, vec![]).unwrap();
    assert_eq!(empty.det_in(2).unwrap(), LaurentPoly::one(2));
}

#[test]
fn pfaffian_examples() {
    let vars = 6;
    let two = SkewSymMatrix::from_fn(2, LaurentPoly::zero(vars), |_, _| LaurentPoly::var(vars, 0));
    assert_eq!(two.pfaffian().unwrap(), LaurentPoly::var(vars, 0));
    // 4x4 generic: entries y_ij as separate variables
    let idx = |i: usize, j: usize| match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        _ => 5,
    };
    let m = SkewSymMatrix::from_fn(4, LaurentPoly::zero(vars), |i, j| LaurentPoly::var(vars, idx(i, j)));
    let v = |i| LaurentPoly::var(vars, i);
    let expect = &(&(&v(0) * &v(5)) - &(&v(1) * &v(4))) + &(&v(2) * &v(3));
    assert_eq!(m.pfaffian().unwrap(), expect);
    let odd = SkewSymMatrix::from_fn(3, LaurentPoly::zero(1), |_, _| LaurentPoly::one(1));
    assert!(odd.pfaffian().is_err());
}

#[test]
fn q_series_examples() {
    assert_eq!(q_bracket(Half::int(1)).unwrap(), LaurentPoly::one(1));
    let r = q_bracket(Half::int(4)).unwrap().div_exact(&q_bracket(Half::int(2)).unwrap()).unwrap();
    assert_eq!(q_text(&r), "1 + q^2");
    assert_eq!(q_text(&q_binom(2, 1).unwrap()), "1 + q");
    assert!(q_binom(-1, 0).is_err());
    assert!(q_bracket(Half(1)).is_err());
    // [3/2]/[1/2] = 1 + q^{1/2} + q
    let v = QRatio::new().ratio(Half(3), Half(1)).eval().unwrap();
    assert_eq!(v, q_parse("1 + q^1/2 + q").unwrap());
    assert_eq!(q_angle(Half::int(1)), q_parse("1 + q").unwrap());
}

#[test]
fn specialization_examples() {
    let q = LaurentPoly::var(1, 0);
    let f = p("x1 + x1^-1", 1);
    assert_eq!(q_text(&f.specialize(std::slice::from_ref(&q)).unwrap()), "q^-1 + q");
    let s1 = p("x1 + x2", 2);
    let one = LaurentPoly::one(0);
    assert_eq!(s1.specialize(&[one.clone(), one]).unwrap().as_constant().unwrap(), rat(2));
    // sp_(1)(q) against q^{-1}[4]/[2]
    let closed = &QRatio::new().ratio(Half::int(4), Half::int(2)).eval().unwrap() * &intsymp::ring::qseries::qpow2(-2);
    assert_eq!(f.specialize(&[q]).unwrap(), closed);
    let zero = LaurentPoly::zero(1);
    assert!(f.specialize(std::slice::from_ref(&zero)).is_err());
    assert!(p("x1^2", 1).specialize(&[zero]).unwrap().is_zero());
}

#[test]
fn fractions_add_and_clear() {
    let x = LaurentPoly::var(2, 0);
    let y = LaurentPoly::var(2, 1);
    let one = LaurentPoly::one(2);
    // 1/(1-x) + 1/(1-y) - (2 - x - y)/((1-x)(1-y)) = 0
    let a = Frac::new(one.clone(), &(&one - &x)).unwrap();
    let b = Frac::new(one.clone(), &(&one - &y)).unwrap();
    let c = Frac::new(&(&one + &one) - &(&x + &y), &(&(&one - &x) * &(&one - &y))).unwrap();
    assert!(a.add_r(&b).sub_r(&c).to_poly().unwrap().is_zero());
    // (x - 1) normalizes to (1 - x) up to a unit
    let d = Frac::new(one.clone(), &(&x - &one)).unwrap();
    assert!(a.add_r(&d).to_poly().unwrap().is_zero());
    let e = Frac::new(&x * &x, &x).unwrap();
    assert_eq!(e.to_poly().unwrap(), x);
}

fn small_poly(arity: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-4i32..=4, arity), -3i64..=3), 0..4).prop_map(move |ts| {
        let mut f = LaurentPoly::zero(arity);
        for (e, c) in ts {
            f.add_term(ExpVec(e), rat(c));
        }
        f
    })
}

fn small_monomial(arity: usize) -> impl Strategy<Value = LaurentPoly> {
    (prop::collection::vec(-2i32..=2, arity), -2i64..=2)
        .prop_map(move |(e, c)| LaurentPoly::monomial(rat(c), ExpVec(e.into_iter().map(|v| 2 * v).collect())))
}

proptest! {
    #[test]
    fn pfaffian_squared_is_det(order in prop::sample::select(vec![2usize, 4, 6]), entries in prop::collection::vec(small_monomial(2), 15)) {
        let m = SkewSymMatrix::from_fn(order, LaurentPoly::zero(2), |i, j| entries[(i * 5 + j) % 15].clone());
        let pf = m.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, m.to_dense().det().unwrap());
    }

    #[test]
    fn division_round_trip(a in small_poly(2), b in small_poly(2)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn det_alternating(entries in prop::collection::vec(small_poly(2), 9), r1 in 0usize..3, r2 in 0usize..3) {
        prop_assume!(r1 != r2);
        let m = PolyMatrix::new(3, 3, entries).unwrap();
        let mut s = m.clone();
        s.swap_rows(r1, r2);
        prop_assert_eq!(s.det().unwrap(), -m.det().unwrap());
        prop_assert_eq!(m.det().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn specialize_is_multiplicative(a in small_poly(2), b in small_poly(2), e1 in -2i32..=2, e2 in -2i32..=2) {
        let vals = [LaurentPoly::var_pow(1, 0, e1), LaurentPoly::var_pow(1, 0, e2)];
        let lhs = (&a * &b).specialize(&vals).unwrap();
        let rhs = &a.specialize(&vals).unwrap() * &b.specialize(&vals).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip(a in small_poly(3)) {
        prop_assert_eq!(LaurentPoly::parse(&a.to_text(), 3).unwrap(), a.clone());
        prop_assert_eq!(LaurentPoly::from_json(&a.to_json(), 3).unwrap(), a);
    }
}

#[test]
fn q_binom_symmetric_and_positive() {
    for n in 0..=8 {
        for r in 0..=n {
            let b = q_binom(n, r).unwrap();
            assert_eq!(b, q_binom(n, n - r).unwrap());
            assert!(b.has_nonnegative_integer_coeffs());
        }
    }
}
