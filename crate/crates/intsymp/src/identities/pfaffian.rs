//! Minor summation, the sub-Pfaffian matrices, the matrix `Q^{n,k}` and
//! the Pfaffian evaluation `Pf Q = det W · det U / (...)`.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::characters::intsymp::tableau_sum;
use crate::error::{Error, Result};
use crate::ring::{rat, rat_frac, Frac, LaurentPoly, Matrix, PolyMatrix, Rational, RingElem, SkewMatrix, SkewSymMatrix};
use crate::shapes::{index_set, Family, Partition};

use super::main_thm::{main_lhs, MainIdentityCase};

/// All `size`-element subsets of `0..total` in lexicographic order.
pub fn subsets(total: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, total: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..total {
            if total - i < size - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, total, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, total, size, &mut Vec::new(), &mut out);
    out
}

/// Both sides of the minor-summation formula:
/// `Σ_J Pf Y(J) det X([n]; J)` and `Pf(X Y Xᵀ)`.
pub fn minor_summation_sides<T: RingElem>(x: &Matrix<T>, y: &SkewMatrix<T>, unit: &T) -> Result<(T, T)> {
    let n = x.rows();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if x.cols() != y.order() || n > x.cols() {
        return Err(Error::ShapeMismatch(format!("X is {}x{}, Y has order {}", n, x.cols(), y.order())));
    }
    let mut lhs = unit.zero_like();
    for j in subsets(x.cols(), n) {
        let pf = y.submatrix(&j).pfaffian()?;
        if pf.is_zero_r() {
            continue;
        }
        let d = x.select_cols(&j).det_with(unit)?;
        lhs = lhs.add_r(&pf.mul_r(&d));
    }
    let xy = x.mul(&y.to_dense())?.mul(&x.transpose())?;
    let rhs = SkewMatrix::from_fn(n, unit.zero_like(), |i, j| xy.get(i, j).clone()).pfaffian()?;
    Ok((lhs, rhs))
}

pub fn minor_summation_check(x: &PolyMatrix, y: &SkewSymMatrix) -> Result<bool> {
    let arity = x.arity().unwrap_or(0);
    let (l, r) = minor_summation_sides(x, y, &LaurentPoly::one(arity))?;
    Ok(l == r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubPfKind {
    B,
    C,
    /// `D^ε` with `ε = ±1`.
    D(i8),
}

impl SubPfKind {
    pub const ALL: [SubPfKind; 4] = [SubPfKind::B, SubPfKind::C, SubPfKind::D(1), SubPfKind::D(-1)];

    pub fn name(self) -> String {
        match self {
            SubPfKind::B => "B".into(),
            SubPfKind::C => "C".into(),
            SubPfKind::D(e) => format!("D{e:+}"),
        }
    }

    /// The constant `(i, j)` entry for `i < j` at order `size`.
    pub fn entry(self, i: usize, j: usize, size: usize) -> i64 {
        match self {
            SubPfKind::B => 1,
            SubPfKind::C => (i.is_multiple_of(2) && j % 2 == 1) as i64,
            SubPfKind::D(e) => {
                if j == i + 1 {
                    1
                } else if i == 0 && j == size - 1 {
                    e as i64
                } else {
                    0
                }
            }
        }
    }

    /// The value the case table assigns to `Pf Y(I_n(λ))`.
    pub fn expected(self, lam: &Partition, m: u32) -> i64 {
        match self {
            SubPfKind::B => 1,
            SubPfKind::C => Family::Even.admits(lam, m) as i64,
            SubPfKind::D(e) => {
                if Family::EvenPrime.admits(lam, m) {
                    1
                } else if Family::OddPrime.admits(lam, m) {
                    e as i64
                } else {
                    0
                }
            }
        }
    }
}

/// The `(n+m) × (n+m)` matrix of the given kind with constant entries in `arity` variables.
pub fn build_subpf_matrix(n: usize, m: usize, kind: SubPfKind, arity: usize) -> SkewSymMatrix {
    let size = n + m;
    SkewMatrix::from_fn(size, LaurentPoly::zero(arity), |i, j| {
        LaurentPoly::from_int(arity, kind.entry(i, j, size))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubPfRow {
    pub shape: String,
    pub kind: String,
    pub pfaffian: i64,
    pub expected: i64,
}

/// `Pf Y(I_n(λ))` for every `λ ⊆ (m^n)` and every kind.
pub fn subpf_case_table(n: usize, m: u32) -> Result<Vec<SubPfRow>> {
    let mut rows = Vec::new();
    for kind in SubPfKind::ALL {
        let y = build_subpf_matrix(n, m as usize, kind, 0);
        for lam in Partition::in_rect(m, n) {
            let pf = y.submatrix(&index_set(&lam, n)?).pfaffian()?;
            let v = pf.as_constant().ok_or_else(|| Error::InvalidSpec("non-constant Pfaffian".into()))?;
            rows.push(SubPfRow {
                shape: lam.to_string(),
                kind: kind.name(),
                pfaffian: crate::ring::poly::rational_to_i128(&v).unwrap_or(i128::MAX) as i64,
                expected: kind.expected(&lam, m),
            });
        }
    }
    Ok(rows)
}

fn frac_var(n: usize, i: usize, e: i32) -> Frac {
    Frac::from_poly(LaurentPoly::var_pow(n, i, e))
}

/// `∏ (1 - x_j^{s} x_l)` over `l > k`, one factor at a time.
fn over_tail(f: Frac, n: usize, k: usize, j: usize, s: i32) -> Result<Frac> {
    let one = LaurentPoly::one(n);
    (k..n).try_fold(f, |acc, l| acc.divide_by(&(&one - &(&LaurentPoly::var_pow(n, j, s) * &LaurentPoly::var(n, l)))))
}

/// The `n × (n+m)` matrix whose maximal minors are the bialternant numerators
/// of `sp^{(k,n-k)}_{λ+(a^n)}`.
pub fn x_matrix(n: usize, k: usize, m: usize, a: u32) -> Result<Matrix<Frac>> {
    let mut entries = Vec::with_capacity(n * (n + m));
    for j in 0..n {
        for r in 0..n + m {
            if j < k {
                let e = a as i32 + r as i32 - n as i32 + k as i32 + 1;
                let p = over_tail(frac_var(n, j, e), n, k, j, -1)?;
                let q = over_tail(frac_var(n, j, -e), n, k, j, 1)?;
                entries.push(p.sub_r(&q));
            } else {
                entries.push(frac_var(n, j, a as i32 + r as i32));
            }
        }
    }
    Matrix::new(n, n + m, entries)
}

/// Closed form of `det Ā_∅`.
pub fn abar_empty_det(k: usize, n: usize) -> LaurentPoly {
    let x = |i: usize, e: i32| LaurentPoly::var_pow(n, i, e);
    let mut d = LaurentPoly::one(n);
    for i in 0..k {
        d = &d * &(&x(i, 1) - &x(i, -1));
    }
    for i in 0..k {
        for j in i + 1..k {
            // (x_i^{1/2} x_j^{1/2} - ...)(x_i^{1/2} x_j^{-1/2} - ...) = x_i + x_i^{-1} - x_j - x_j^{-1}
            let f = &(&x(i, 1) + &x(i, -1)) - &(&x(j, 1) + &x(j, -1));
            d = &d * &f;
        }
    }
    for i in k..n {
        for j in i + 1..n {
            d = &d * &(&x(i, 1) - &x(j, 1));
        }
    }
    d
}

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Checks `det X([n]; I_n(λ)) = (-1)^{n(n-1)/2} det Ā_∅ · sp^{(k,n-k)}_{λ+(a^n)}` for every `λ ⊆ (m^n)`.
pub fn x_minor_check(n: usize, k: usize, m: u32, a: u32) -> Result<bool> {
    let xm = x_matrix(n, k, m as usize, a)?;
    let unit = Frac::from_poly(LaurentPoly::one(n));
    let den = abar_empty_det(k, n).scale(&sign(n * (n - 1) / 2));
    for lam in Partition::in_rect(m, n) {
        let d = xm.select_cols(&index_set(&lam, n)?).det_with(&unit)?;
        let want = &tableau_sum(&lam.plus_rect(a, n), k, n)? * &den;
        if !d.equals(&Frac::from_poly(want)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Inputs of `Q^{n,k}(x; a, b)`, all in one common arity.
#[derive(Clone, Debug)]
pub struct QMatrixParams {
    pub n: usize,
    pub k: usize,
    pub x: Vec<LaurentPoly>,
    pub a: Vec<LaurentPoly>,
    pub b: Vec<LaurentPoly>,
}

impl QMatrixParams {
    pub fn new(n: usize, k: usize, x: Vec<LaurentPoly>, a: Vec<LaurentPoly>, b: Vec<LaurentPoly>) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::OddOrder(n));
        }
        if k > n || x.len() != n || a.len() != n || b.len() != k {
            return Err(Error::InvalidSpec(format!(
                "Q needs |x| = |a| = n = {n} and |b| = k = {k}, got {}, {}, {}",
                x.len(),
                a.len(),
                b.len()
            )));
        }
        let arity = x[0].arity();
        if x.iter().chain(&a).chain(&b).any(|p| p.arity() != arity) {
            return Err(Error::ArityMismatch(arity, 0));
        }
        Ok(QMatrixParams { n, k, x, a, b })
    }

    /// `x`, `a`, `b` as independent variables: arity `2n + k`.
    pub fn generic(n: usize, k: usize) -> Result<Self> {
        let ar = 2 * n + k;
        Self::new(
            n,
            k,
            (0..n).map(|i| LaurentPoly::var(ar, i)).collect(),
            (0..n).map(|i| LaurentPoly::var(ar, n + i)).collect(),
            (0..k).map(|i| LaurentPoly::var(ar, 2 * n + i)).collect(),
        )
    }

    pub fn arity(&self) -> usize {
        self.x[0].arity()
    }
}

/// `q(ξ, η; α, β) = (η - ξ)(1 - αβ) + (1 - ξη)(β - α)`.
///
/// The first factor is `η - ξ`: this is the sign for which
/// `Σ_{r<s} (x^r y^s - x^s y^r) = q(x, y; -x^M, -y^M) / ((1-x)(1-y)(1-xy))`
/// and `det W^2 = q(x_1, x_2; a_1, a_2)`.
pub fn q_poly(xi: &LaurentPoly, eta: &LaurentPoly, alpha: &LaurentPoly, beta: &LaurentPoly) -> LaurentPoly {
    let one = LaurentPoly::one(xi.arity());
    &(&(eta - xi) * &(&one - &(alpha * beta))) + &(&(&one - &(xi * eta)) * &(beta - alpha))
}

pub fn build_q(p: &QMatrixParams) -> Result<SkewMatrix<Frac>> {
    let (n, k) = (p.n, p.k);
    let ar = p.arity();
    let one = LaurentPoly::one(ar);
    let inv: Vec<LaurentPoly> = p.x.iter().map(|x| x.monomial_inverse().ok_or(Error::NotAUnit)).collect::<Result<_>>()?;
    let f = |u: &LaurentPoly| -> Result<Frac> {
        (k..n).try_fold(Frac::from_poly(u.pow((n - k) as u32)), |acc, l| acc.divide_by(&(&one - &(u * &p.x[l]))))
    };
    let f_plus: Vec<Frac> = p.x.iter().map(&f).collect::<Result<_>>()?;
    // f(x_i^{-1}) only appears for i <= k, where it has no vanishing factor.
    let f_minus: Vec<Frac> = inv[..k].iter().map(&f).collect::<Result<_>>()?;
    let mut upper = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let q = Frac::from_poly(q_poly(&p.x[i], &p.x[j], &p.a[i], &p.a[j]));
            let one_minus = &one - &(&p.x[i] * &p.x[j]);
            let diff = &p.x[j] - &p.x[i];
            let over = |num: Frac, d: &LaurentPoly| num.divide_by(d);
            let e = if j < k {
                let bi = Frac::from_poly(p.b[i].clone());
                let bj = Frac::from_poly(p.b[j].clone());
                let t1 = over(f_minus[i].mul_r(&f_minus[j]).mul_r(&bi).mul_r(&bj), &one_minus)?;
                let t2 = over(f_minus[i].mul_r(&f_plus[j]).mul_r(&bi), &diff)?;
                let t3 = over(f_plus[i].mul_r(&f_minus[j]).mul_r(&bj), &diff)?;
                let t4 = over(f_plus[i].mul_r(&f_plus[j]), &one_minus)?;
                q.mul_r(&t1.add_r(&t2).sub_r(&t3).sub_r(&t4))
            } else if i < k {
                let bi = Frac::from_poly(p.b[i].clone());
                let t1 = over(f_minus[i].mul_r(&bi), &one_minus)?;
                let t2 = over(f_plus[i].clone(), &diff)?;
                q.mul_r(&t1.sub_r(&t2)).neg_r()
            } else {
                over(q, &one_minus)?
            };
            upper.push(e);
        }
    }
    let mut it = upper.into_iter();
    Ok(SkewMatrix::from_fn(n, Frac::from_poly(LaurentPoly::zero(ar)), |_, _| it.next().unwrap()))
}

/// `W^n(x; a)`: row `i` is `(x_i^{j} + a_i x_i^{n-1-j})_{j}`.
pub fn w_matrix(x: &[LaurentPoly], a: &[LaurentPoly]) -> PolyMatrix {
    let n = x.len();
    Matrix::from_fn(n, n, |i, j| &x[i].pow(j as u32) + &(&a[i] * &x[i].pow((n - 1 - j) as u32)))
}

/// `U^{k,n}(y; b)`: row `i` is `(y_i^{n-k+j} + b_i y_i^{k-1-j})_{j}`.
pub fn u_matrix(y: &[LaurentPoly], b: &[LaurentPoly], n: usize) -> PolyMatrix {
    let k = y.len();
    Matrix::from_fn(k, k, |i, j| &y[i].pow((n - k + j) as u32) + &(&b[i] * &y[i].pow((k - 1 - j) as u32)))
}

/// Left and right sides of the Pfaffian evaluation.
///
/// The first denominator product is read as `(x_j - x_i)(1 - x_i x_j)`.
pub fn pf_det_det_sides(p: &QMatrixParams) -> Result<(Frac, Frac)> {
    let (n, k) = (p.n, p.k);
    let ar = p.arity();
    let one = LaurentPoly::one(ar);
    let lhs = build_q(p)?.pfaffian()?;
    let num = &w_matrix(&p.x, &p.a).det_in(ar)? * &u_matrix(&p.x[..k], &p.b, n).det_in(ar)?;
    let mut rhs = Frac::from_poly(num.scale(&sign(k * k.saturating_sub(1) / 2)));
    for i in 0..n {
        for j in i + 1..n {
            let om = &one - &(&p.x[i] * &p.x[j]);
            if j < k || i < k {
                rhs = rhs.divide_by(&(&p.x[j] - &p.x[i]))?;
            }
            rhs = rhs.divide_by(&om)?;
        }
    }
    Ok((lhs, rhs))
}

/// Random distinct rationals in `(0, 1)` for the point check.
fn random_points(rng: &mut ChaCha8Rng, count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let d = rng.gen_range(2..200i64);
        let v = rat_frac(rng.gen_range(1..d), d);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// One random rational point: `x` distinct in `(0, 1)`, `a`, `b` in `(0, 1)` as well.
pub fn point_params(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<QMatrixParams> {
    let c = |v: &Rational| LaurentPoly::constant(0, v.clone());
    let xs = random_points(rng, n);
    let rest = random_points(rng, n + k);
    QMatrixParams::new(
        n,
        k,
        xs.iter().map(c).collect(),
        rest[..n].iter().map(c).collect(),
        rest[n..].iter().map(c).collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PfCheckMode {
    Symbolic,
    Points { draws: usize, seed: u64 },
}

/// Symbolic comparison with generic `a`, `b`, or exact evaluation at random points.
pub fn verify_pf_det_det(n: usize, k: usize, mode: PfCheckMode) -> Result<bool> {
    match mode {
        PfCheckMode::Symbolic => {
            let (l, r) = pf_det_det_sides(&QMatrixParams::generic(n, k)?)?;
            Ok(l.equals(&r))
        }
        PfCheckMode::Points { draws, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..draws {
                let (l, r) = pf_det_det_sides(&point_params(n, k, &mut rng)?)?;
                if !l.equals(&r) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// The specializations of `a`, `b` and the extra denominator of each variant,
/// as doubled exponents and signs: `(sign_a, exp_a, sign_b, exp_b)`.
fn sum_pf_data(case: &MainIdentityCase) -> (i64, u32, i64, u32) {
    let (n, m, a) = (case.n as u32, case.m, case.a);
    match case.variant {
        1 => (-1, m + n, -1, 2 * a + m + n + 1),
        2 => (-1, m + n + 1, -1, 2 * a + m + n + 1),
        3 => (1, m + n - 1, -1, 2 * a + m + n + 1),
        _ => (-1, m + n - 1, 1, 2 * a + m + n + 1),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SumPfReport {
    pub case: MainIdentityCase,
    /// With the printed sign `(-1)^{n(n-1)}`.
    pub as_written: bool,
    /// With `(-1)^{n(n-1)/2}`, as in the derivation from the minor summation.
    pub half_exponent: bool,
    /// The overall sign `s` with `lhs = s · prefactor · Pf Q / det Ā_∅`, if any.
    pub observed_sign: Option<i8>,
    /// `observed_sign` equals [`sum_pf_sign`].
    pub equal: bool,
}

/// The sign that makes the Pfaffian expression match: `(-1)^{n(n-1)/2}`,
/// times `(-1)^k` for the fourth variant.
pub fn sum_pf_sign(case: &MainIdentityCase) -> i8 {
    let mut e = case.n * (case.n - 1) / 2;
    if case.variant == 4 {
        e += case.k;
    }
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The right side without its leading sign: `prefactor · Pf Q / det Ā_∅`.
pub fn sum_pf_unsigned(case: &MainIdentityCase) -> Result<Frac> {
    let MainIdentityCase { n, k, m, a, variant } = *case;
    if n % 2 == 1 || m == 0 {
        return Err(Error::InvalidSpec("needs n even and m > 0".into()));
    }
    let (sa, ea, sb, eb) = sum_pf_data(case);
    let x: Vec<LaurentPoly> = (0..n).map(|i| LaurentPoly::var(n, i)).collect();
    let av: Vec<LaurentPoly> = x.iter().map(|v| v.pow(ea).scale(&rat(sa))).collect();
    let bv: Vec<LaurentPoly> = x[..k].iter().map(|v| v.pow(eb).scale(&rat(sb))).collect();
    let pf = build_q(&QMatrixParams::new(n, k, x.clone(), av, bv)?)?.pfaffian()?;
    let mut mono = LaurentPoly::one(n);
    for i in 0..n {
        let e = if i < k { -(a as i32) - (m + n as u32) as i32 } else { a as i32 };
        mono = &mono * &LaurentPoly::var_pow(n, i, e);
    }
    let mut out = pf.mul_r(&Frac::from_poly(mono)).divide_by(&abar_empty_det(k, n))?;
    let one = LaurentPoly::one(n);
    for xi in &x {
        match variant {
            1 => out = out.divide_by(&(&one - xi))?,
            2 => out = out.divide_by(&(&one - &xi.pow(2)))?,
            _ => {}
        }
    }
    Ok(out)
}

pub fn verify_sum_eq_pf(case: &MainIdentityCase) -> Result<SumPfReport> {
    let lhs = Frac::from_poly(main_lhs(case)?);
    let base = sum_pf_unsigned(case)?;
    let n = case.n;
    let signed = |e: usize| if e.is_multiple_of(2) { base.clone() } else { base.neg_r() };
    let as_written = lhs.equals(&signed(n * (n - 1)));
    let half_exponent = lhs.equals(&signed(n * (n - 1) / 2));
    let observed_sign = if lhs.equals(&base) {
        Some(1)
    } else if lhs.equals(&base.neg_r()) {
        Some(-1)
    } else {
        None
    };
    let equal = observed_sign == Some(sum_pf_sign(case));
    Ok(SumPfReport { case: *case, as_written, half_exponent, observed_sign, equal })
}

/// `Y(K)`, with `K` 1-based.
pub fn y_matrix(n: usize, kset: &[usize]) -> Result<SkewMatrix<Frac>> {
    let one = LaurentPoly::one(n);
    let inside = |i: usize| kset.contains(&(i + 1));
    let mut upper = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let x = |t| LaurentPoly::var(n, t);
            let ratio = Frac::new(&x(j) - &x(i), &(&one - &(&x(i) * &x(j))))?;
            upper.push(match (inside(i), inside(j)) {
                (true, true) => ratio.neg_r(),
                (false, false) => ratio,
                (true, false) => Frac::from_poly(-&one),
                (false, true) => Frac::from_poly(one.clone()),
            });
        }
    }
    let mut it = upper.into_iter();
    Ok(SkewMatrix::from_fn(n, Frac::from_poly(LaurentPoly::zero(n)), |_, _| it.next().unwrap()))
}

/// `Pf Y(K) = (-1)^{Σ(K)} ∏_{(i,j) ∈ D⁺_n(K)} (x_j - x_i)/(1 - x_i x_j)`.
pub fn pf_y_check(n: usize, kset: &[usize]) -> Result<bool> {
    let pf = y_matrix(n, kset)?.pfaffian()?;
    let one = LaurentPoly::one(n);
    let inside = |i: usize| kset.contains(&(i + 1));
    let s: usize = kset.iter().sum();
    let mut want = Frac::from_poly(LaurentPoly::constant(n, sign(s)));
    for i in 0..n {
        for j in i + 1..n {
            if inside(i) == inside(j) {
                let x = |t| LaurentPoly::var(n, t);
                want = want.mul_r(&Frac::from_poly(&x(j) - &x(i))).divide_by(&(&one - &(&x(i) * &x(j))))?;
            }
        }
    }
    Ok(pf.equals(&want))
}

/// Random `n × cols` matrix of signed monomials with small exponents.
pub fn random_monomial_matrix(rows: usize, cols: usize, arity: usize, rng: &mut ChaCha8Rng) -> PolyMatrix {
    Matrix::from_fn(rows, cols, |_, _| {
        let mut p = LaurentPoly::from_int(arity, if rng.gen_bool(0.5) { 1 } else { -1 });
        for v in 0..arity {
            p = &p * &LaurentPoly::var_pow(arity, v, rng.gen_range(-2..=2));
        }
        if rng.gen_range(0..5) == 0 {
            LaurentPoly::zero(arity)
        } else {
            p
        }
    })
}
