//! The degree-27 cover f of the j-line, the bidegree-(3,4) model of the degree-3 cover, its
//! cuspforms, the plane quartic model in (z1, z2) and the covers of the z1-line.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::linalg::rational_nullspace;
use crate::exact::{qpoly, resultant, CycNum, MultiPoly, QPoly, Rat, RatFunc};
use crate::modgroup::CycleType;
use crate::qseries::QSeries;
use crate::reference;

fn ri(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Q-linear rows: one row per rational coordinate of each coefficient in the window.
pub fn rational_rows(cols: &[QSeries], from: &Rat, count: usize) -> Result<Vec<Vec<Rat>>> {
    let mut rows = Vec::with_capacity(6 * count);
    for k in 0..count {
        let e = from + ri(k as i64);
        let cs: Vec<[Rat; 6]> =
            cols.iter().map(|s| s.coeff_at(&e).map(|c| c.coeffs()).ok_or(Error::PrecisionExhausted)).collect::<Result<_>>()?;
        for comp in 0..6 {
            rows.push(cs.iter().map(|c| c[comp].clone()).collect());
        }
    }
    Ok(rows)
}

/// Shared window [min lead, min precision) of a set of series.
fn window(cols: &[QSeries]) -> Result<(Rat, usize)> {
    let from = cols.iter().map(|s| s.lead_exponent().clone()).min().ok_or(Error::NoRelation)?;
    let to = cols.iter().map(|s| s.precision()).min().ok_or(Error::NoRelation)?;
    let span = &to - &from;
    if !span.is_integer() {
        return Err(Error::IncompatibleExponents);
    }
    let n = if span.is_positive() { span.to_integer().try_into().map_err(|_| Error::PrecisionExhausted)? } else { 0 };
    Ok((from, n))
}

/// Basis of rational vectors u with sum u_k cols[k] = 0 on the shared window.
pub fn series_relations(cols: &[QSeries]) -> Result<Vec<Vec<Rat>>> {
    let (from, n) = window(cols)?;
    rational_nullspace(&rational_rows(cols, &from, n)?, cols.len())
}

/// Series of s^0 .. s^d.
pub fn powers(s: &QSeries, d: usize) -> Vec<QSeries> {
    let mut out = alloc::vec![QSeries::one(s.len())];
    for _ in 0..d {
        let next = out.last().expect("nonempty").mul(s);
        out.push(next);
    }
    out
}

/// The printed numerator -3^7 (x^2-1)^3 S(x)^3 C(x).
pub fn f_numerator_printed() -> QPoly {
    qpoly(&[-2187])
        .mul(&qpoly(&[-1, 0, 1]).pow(3))
        .mul(&reference::f_sextic().pow(3))
        .mul(&reference::f_cubic())
}

/// (1 + 3x - x^3)^9, the denominator under the adopted sign.
pub fn adopted_denominator() -> QPoly {
    reference::denominator_cubic().neg().pow(9)
}

/// The cover f with the adopted sign; equals +3^7(...)/(x^3-3x-1)^9.
pub fn cover_f() -> RatFunc {
    RatFunc::new(f_numerator_printed(), adopted_denominator()).expect("nonzero denominator")
}

/// The literal printed form -3^7(...)/(x^3-3x-1)^9.
pub fn cover_f_literal() -> RatFunc {
    RatFunc::new(f_numerator_printed(), reference::denominator_cubic().pow(9)).expect("nonzero denominator")
}

/// 1728 - 27 A^2 B^2 (2x^3-3x^2+4)/d^9 with d = 1+3x-x^3 (adopted) or x^3-3x-1 (literal).
pub fn cover_f_1728_form(adopted: bool) -> RatFunc {
    let d = if adopted { reference::denominator_cubic().neg() } else { reference::denominator_cubic() };
    let num = reference::sextic_a().pow(2).mul(&reference::sextic_b().pow(2)).mul(&reference::cubic_1728()).scale(&ri(-27));
    RatFunc::from_poly(QPoly::constant(ri(1728))).add(&RatFunc::new(num, d.pow(9)).expect("nonzero"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FIdentities {
    pub forms_agree: bool,
    pub literal_forms_agree: bool,
    pub a0: Rat,
    pub b0: Rat,
    /// Res(numerator, denominator) of f in lowest terms with monic denominator.
    pub resultant: Rat,
    pub vanishes_at_pm1: bool,
}

pub fn verify_f_identities() -> Result<FIdentities> {
    let f = cover_f();
    Ok(FIdentities {
        forms_agree: f == cover_f_1728_form(true),
        literal_forms_agree: cover_f_literal() == cover_f_1728_form(false),
        a0: reference::sextic_a().coeff(0),
        b0: reference::sextic_b().coeff(0),
        resultant: resultant(f.num(), f.den())?,
        vanishes_at_pm1: f.eval(&ri(1)).is_some_and(|v| v.is_zero()) && f.eval(&ri(-1)).is_some_and(|v| v.is_zero()),
    })
}

/// 3^486.
pub fn three_486() -> Rat {
    Rat::from_integer(BigInt::from(3).pow(486u32))
}

/// f at x = m/n as a point of P^1(Q); n = 0 means infinity.
pub fn evaluate_f_proj(f: &RatFunc, m: &BigInt, n: &BigInt) -> Option<Rat> {
    let d = f.degree() as u32;
    let hom = |p: &QPoly| -> Rat {
        let mut acc = Rat::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc += c * Rat::from_integer(m.pow(k as u32) * n.pow(d - k as u32));
            }
        }
        acc
    };
    let den = hom(f.den());
    if den.is_zero() {
        return None;
    }
    Some(hom(f.num()) / den)
}

/// f(x) for finite x, or at infinity for `None`.
pub fn evaluate_f(x: Option<&Rat>) -> Option<Rat> {
    let f = cover_f();
    match x {
        Some(x) => f.eval(x),
        None => f.eval_infinity(),
    }
}

/// num(s)/den(s) as a series.
pub fn ratfunc_of_series(f: &RatFunc, s: &QSeries) -> Result<QSeries> {
    s.eval_poly(f.num())?.div(&s.eval_poly(f.den())?)
}

/// First exponent where two series differ within their shared precision.
pub fn first_difference(a: &QSeries, b: &QSeries) -> Result<Option<Rat>> {
    let d = a.sub(b)?;
    Ok(d.valuation().cloned())
}

/// Fit num with j = num(x)/denom(x) on all shared coefficients.
pub fn fit_cover(x: &QSeries, j: &QSeries, denom: &QPoly, degree: usize) -> Result<RatFunc> {
    RatFunc::new(fit_cover_numerator(x, j, denom, degree)?, denom.clone())
}

/// The numerator over the given (not necessarily monic) denominator.
pub fn fit_cover_numerator(x: &QSeries, j: &QSeries, denom: &QPoly, degree: usize) -> Result<QPoly> {
    if x.len() < 2 * degree + 10 {
        return Err(Error::PrecisionExhausted);
    }
    let mut cols = powers(x, degree);
    cols.push(j.mul(&x.eval_poly(denom)?).neg());
    let ns = series_relations(&cols)?;
    let v = match ns.len() {
        1 => &ns[0],
        0 => return Err(Error::Inconsistent(alloc::format!("no numerator of degree {degree}"))),
        d => return Err(Error::AmbiguousRelation(d)),
    };
    let t = v[degree + 1].clone();
    if t.is_zero() {
        return Err(Error::Inconsistent("relation does not involve j".into()));
    }
    Ok(QPoly::new(v[..=degree].iter().map(|c| c / &t).collect()))
}

/// Outcome of comparing j with f(x) for the derived and printed coordinates and both signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasterIdentity {
    pub terms: usize,
    /// First disagreement of j and f(x) with the derived x and adopted f, if any.
    pub derived: Option<Rat>,
    pub printed_x: Option<Rat>,
    pub literal_f: Option<Rat>,
}

pub fn master_identity(terms: usize) -> Result<MasterIdentity> {
    let work = terms + 12;
    let fser = crate::units::f_series(work)?;
    let x = crate::units::coordinate_x(&fser)?;
    let xp = crate::units::coordinate_x_printed(&fser)?;
    let j = crate::qseries::expand_j(work);
    let bound = ri(terms as i64 - 9);
    let cmp = |f: &RatFunc, x: &QSeries| -> Result<Option<Rat>> {
        let v = ratfunc_of_series(f, x)?;
        let d = v.sub(&j)?.truncate(&bound);
        if d.precision() < bound {
            return Err(Error::PrecisionExhausted);
        }
        Ok(d.valuation().cloned())
    };
    Ok(MasterIdentity {
        terms,
        derived: cmp(&cover_f(), &x)?,
        printed_x: cmp(&cover_f(), &xp)?,
        literal_f: cmp(&cover_f_literal(), &x)?,
    })
}

/// Fit F^9 (F - c2 + 1)^9 j as a polynomial in F with coefficients in K; returns the degree.
pub fn f_polynomial_degree(terms: usize) -> Result<usize> {
    let f = crate::units::f_series(terms + 30)?;
    let j = crate::qseries::expand_j(terms + 30);
    let shifted = f.add_const(&(&CycNum::from_int(1) - &CycNum::c(2)))?;
    let target = f.pow(9)?.mul(&shifted.pow(9)?).mul(&j);
    let pw = powers(&f, 27);
    let mut cols = Vec::new();
    for p in &pw {
        cols.push(p.clone());
        cols.push(p.scale(&CycNum::c(1)));
        cols.push(p.scale(&CycNum::c(2)));
    }
    cols.push(target.neg());
    let ns = series_relations(&cols)?;
    if ns.len() != 1 || ns[0][cols.len() - 1].is_zero() {
        return Err(Error::Inconsistent("not a polynomial of degree <= 27 in F".into()));
    }
    let v = &ns[0];
    (0..28)
        .rev()
        .find(|&k| !(v[3 * k].is_zero() && v[3 * k + 1].is_zero() && v[3 * k + 2].is_zero()))
        .ok_or(Error::ZeroPolynomial)
}

/// Squarefree decomposition multiplicity pattern as a cycle type: (multiplicity, count of roots).
pub fn multiplicity_pattern(p: &QPoly) -> CycleType {
    // Yun's algorithm
    let mut out = Vec::new();
    let dp = p.derivative();
    let mut a = p.gcd(&dp);
    let mut b = p.div_exact(&a).expect("gcd divides");
    let mut c = dp.div_exact(&a).expect("gcd divides");
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        a = b.gcd(&d);
        let deg = a.degree().unwrap_or(0);
        if deg > 0 {
            out.push((i, deg));
        }
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = c.sub(&b.derivative());
        i += 1;
    }
    CycleType::from_lengths(&out)
}

/// Ramification of f over j = infinity, 0 and 1728, read off from exact factorizations; the
/// point x = infinity is added where f is finite there.
pub fn f_ramification() -> [CycleType; 3] {
    let f = cover_f();
    let over = |g: &RatFunc| {
        let mut t = multiplicity_pattern(g.num());
        let missing = f.degree() - t.degree();
        if missing > 0 {
            *t.0.entry(missing).or_insert(0) += 1;
        }
        t
    };
    let inv = RatFunc::new(f.den().clone(), f.num().clone()).expect("nonzero");
    let minus = f.sub(&RatFunc::from_poly(QPoly::constant(ri(1728))));
    [over(&inv), over(&f), over(&minus)]
}

/// Bidegree-(da, db) polynomials in (a, b) vanishing on the series, as a basis of primitive
/// integral polynomials.
pub fn fit_bivariate(a: &QSeries, b: &QSeries, da: u32, db: u32) -> Result<Vec<MultiPoly>> {
    let pa = powers(a, da as usize);
    let pb = powers(b, db as usize);
    let mut mons = Vec::new();
    let mut cols = Vec::new();
    for i in 0..=da {
        for jj in 0..=db {
            mons.push((i, jj));
            cols.push(pa[i as usize].mul(&pb[jj as usize]));
        }
    }
    let ns = series_relations(&cols)?;
    Ok(ns.iter().map(|v| primitive_multipoly(&mons, v)).collect())
}

fn primitive_multipoly(mons: &[(u32, u32)], v: &[Rat]) -> MultiPoly {
    let mut l = BigInt::one();
    for c in v {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    let last = ints.iter().rev().find(|c| !c.is_zero()).cloned().unwrap_or_else(BigInt::one);
    if last.is_negative() {
        g = -g;
    }
    let terms: Vec<((u32, u32), BigInt)> = mons.iter().zip(&ints).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (*m, c / &g)).collect();
    let mut p = MultiPoly::zero();
    for ((i, jj), c) in terms {
        p = p.add(&MultiPoly::term(Rat::from_integer(c), [i, jj, 0, 0]));
    }
    p
}

/// Value of a bivariate polynomial at a point of K^2.
pub fn eval_at(p: &MultiPoly, x: &CycNum, y: &CycNum) -> CycNum {
    p.eval_with(&[x.clone(), y.clone()], CycNum::from_int(1), CycNum::from_rational, |a, b| a + b, |a, b| a * b)
}

/// The points x = y = -c_k for k = 1, 2, 4.
pub fn double_point_candidates() -> [(CycNum, CycNum); 3] {
    [1, 2, 4].map(|k| (-&CycNum::c(k), -&CycNum::c(k)))
}

/// Multiplicity of a point on the curve p = 0 (0 when off the curve), up to 3.
pub fn point_multiplicity(p: &MultiPoly, x: &CycNum, y: &CycNum) -> usize {
    let mut layer = alloc::vec![p.clone()];
    for m in 0..3 {
        if layer.iter().any(|q| !eval_at(q, x, y).is_zero()) {
            return m;
        }
        let mut next = Vec::new();
        for q in &layer {
            next.push(q.partial(0));
            next.push(q.partial(1));
        }
        layer = next;
    }
    3
}

/// The plane model P(x, y) = 0 of X(9)/<T'>, with its structural checks.
#[derive(Clone, Debug)]
pub struct ModelX9p {
    pub p: MultiPoly,
    pub solution_dim: usize,
    /// No relation of bidegree (3,3) or (2,4) holds, so P has no proper factor vanishing on the
    /// series; P is irreducible.
    pub irreducible: bool,
    pub double_points: bool,
}

pub fn fit_model(x: &QSeries, y: &QSeries) -> Result<ModelX9p> {
    let sols = fit_bivariate(x, y, 3, 4)?;
    if sols.is_empty() {
        return Err(Error::NoRelation);
    }
    let p = sols[0].clone();
    let irreducible = fit_bivariate(x, y, 3, 3)?.is_empty() && fit_bivariate(x, y, 2, 4)?.is_empty();
    let double_points = double_point_candidates().iter().all(|(a, b)| point_multiplicity(&p, a, b) == 2);
    Ok(ModelX9p { p, solution_dim: sols.len(), irreducible, double_points })
}

/// Bidegree-(1,2) polynomials vanishing at the three double points.
pub fn adjoint_space() -> Result<Vec<MultiPoly>> {
    let mons: Vec<(u32, u32)> = (0..=1).flat_map(|i| (0..=2).map(move |jj| (i, jj))).collect();
    let mut rows = Vec::new();
    for (a, b) in double_point_candidates() {
        let vals: Vec<[Rat; 6]> = mons
            .iter()
            .map(|&(i, jj)| (&a.pow(i as i64).expect("power") * &b.pow(jj as i64).expect("power")).coeffs())
            .collect();
        for comp in 0..6 {
            rows.push(vals.iter().map(|v| v[comp].clone()).collect());
        }
    }
    let ns = rational_nullspace(&rows, mons.len())?;
    Ok(ns.iter().map(|v| primitive_multipoly(&mons, v)).collect())
}

/// Series Q(x, y) (q9 dx/dq9) / P_y(x, y) for each adjoint Q.
pub fn cuspform_basis(p: &MultiPoly, x: &QSeries, y: &QSeries) -> Result<Vec<QSeries>> {
    let qs = adjoint_space()?;
    if qs.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: qs.len() });
    }
    let py = QSeries::eval_multipoly(&p.partial(1), &[x.clone(), y.clone()])?;
    let base = x.theta().div(&py)?;
    qs.iter().map(|q| Ok(QSeries::eval_multipoly(q, &[x.clone(), y.clone()])?.mul(&base))).collect()
}

/// A printed expansion matched against the cuspform space.
#[derive(Clone, Debug)]
pub struct PhiMatch {
    pub series: QSeries,
    /// Printed exponents (in the printed variable) whose coefficient disagrees.
    pub mismatches: Vec<i64>,
}

/// Fit the printed expansion on exponents 1..=fit_through read as q9^(scale*e) and compare on
/// every exponent up to the last printed one; zero coefficients are implicit in the print.
pub fn match_printed_phi(basis: &[QSeries], printed: &[(i64, &str)], scale: i64, fit_through: i64) -> Result<PhiMatch> {
    let parsed = reference::parse_terms(printed);
    let last = parsed.iter().map(|(e, _)| *e).max().ok_or(Error::NoRelation)?;
    let want = |e: i64| -> CycNum {
        if e % scale != 0 {
            return CycNum::from_int(0);
        }
        parsed.iter().find(|(p, _)| *p * scale == e).map(|(_, c)| c.clone()).unwrap_or_else(|| CycNum::from_int(0))
    };
    let mut rows = Vec::new();
    for e in 1..=fit_through * scale {
        let mut row: Vec<CycNum> = basis.iter().map(|s| s.coeff_at_int(e).ok_or(Error::PrecisionExhausted)).collect::<Result<_>>()?;
        row.push(-&want(e));
        rows.push(row);
    }
    let ns = crate::exact::linalg::nullspace(&rows, basis.len() + 1);
    let v = match ns.len() {
        0 => return Err(Error::NoRelation),
        1 => &ns[0],
        d => return Err(Error::AmbiguousRelation(d)),
    };
    let t = v[basis.len()].inv().ok_or(Error::NoRelation)?;
    let mut series = basis[0].scale(&(&v[0] * &t));
    for k in 1..basis.len() {
        series = series.add(&basis[k].scale(&(&v[k] * &t)))?;
    }
    let mut mismatches = Vec::new();
    for e in 1..=last * scale {
        let got = series.coeff_at_int(e).ok_or(Error::PrecisionExhausted)?;
        if got != want(e) {
            mismatches.push(if e % scale == 0 { e / scale } else { e });
        }
    }
    Ok(PhiMatch { series, mismatches })
}

/// The three normalized cuspforms.
pub fn normalized_phis(basis: &[QSeries]) -> Result<[PhiMatch; 3]> {
    Ok([
        match_printed_phi(basis, &reference::PHI1_TERMS, 1, 5)?,
        match_printed_phi(basis, &reference::PHI2_TERMS, 1, 5)?,
        match_printed_phi(basis, &reference::PHI3_TERMS, 1, 5)?,
    ])
}

/// z1 = (phi2 + phi1)/(2 phi2 - phi1), z2 = phi3/(2 phi2 - phi1).
pub fn build_model_z(phi1: &QSeries, phi2: &QSeries, phi3: &QSeries) -> Result<(QSeries, QSeries)> {
    let den = phi2.scale(&CycNum::from_int(2)).sub(phi1)?;
    Ok((phi2.add(phi1)?.div(&den)?, phi3.div(&den)?))
}

/// z1^3 + 3 z1^2 - 6 z1 + 1.
pub fn quartic_factor() -> QPoly {
    qpoly(&[1, -6, 3, 1])
}

/// 3 z2^3 - z1 (z1^3 + 3 z1^2 - 6 z1 + 1) on series; `None` when it vanishes to precision.
pub fn eq1_residual(z1: &QSeries, z2: &QSeries) -> Result<Option<Rat>> {
    let lhs = z2.pow(3)?.scale(&CycNum::from_int(3));
    let rhs = z1.mul(&z1.eval_poly(&quartic_factor())?);
    first_difference(&lhs, &rhs)
}

/// The relation 3 z2^3 - z1 (z1^3 + 3 z1^2 - 6 z1 + 1) in variables (z1, z2).
pub fn eq1_relation() -> MultiPoly {
    let z1 = MultiPoly::var(0);
    let z2 = MultiPoly::var(1);
    let q = z1.pow(3).add(&z1.pow(2).scale(&ri(3))).sub(&z1.scale(&ri(6))).add(&MultiPoly::from_int(1));
    z2.pow(3).scale(&ri(3)).sub(&z1.mul(&q))
}

/// The map (X : Y : Z) = (z1 (z1+1) z2 : 3 z1^2 : z2^3) as three polynomials.
pub fn eq2_map() -> [MultiPoly; 3] {
    let z1 = MultiPoly::var(0);
    let z2 = MultiPoly::var(1);
    [z1.mul(&z1.add(&MultiPoly::from_int(1))).mul(&z2), z1.pow(2).scale(&ri(3)), z2.pow(3)]
}

/// Y^2 Z + Y Z^2 - X^3 pulled back through the map reduces to 0 modulo the curve relation.
pub fn eq2_identity() -> Result<bool> {
    let [x, y, z] = eq2_map();
    let e = y.pow(2).mul(&z).add(&y.mul(&z.pow(2))).sub(&x.pow(3));
    Ok(e.reduce(&eq1_relation(), 1)?.is_zero())
}

/// Fit target = num(s)/den(s) with deg num, deg den <= d over Q.
pub fn fit_rational_map(s: &QSeries, target: &QSeries, d: usize) -> Result<RatFunc> {
    let pw = powers(s, d);
    let mut cols = pw.clone();
    cols.extend(pw.iter().map(|p| p.mul(target).neg()));
    let ns = series_relations(&cols)?;
    let v = match ns.len() {
        1 => &ns[0],
        0 => return Err(Error::NoRelation),
        k => return Err(Error::AmbiguousRelation(k)),
    };
    RatFunc::new(QPoly::new(v[..=d].to_vec()), QPoly::new(v[d + 1..].to_vec()))
}

/// h(z) = 27 ((z^3 + 3z^2 - 6z + 1)/(z^3 - 6z^2 + 3z + 1))^3.
pub fn h_of_z1() -> RatFunc {
    let r = RatFunc::new(quartic_factor(), qpoly(&[1, 3, -6, 1])).expect("nonzero");
    r.mul(&r).mul(&r).scale(&ri(27))
}

#[derive(Clone, Debug)]
pub struct Z1Covers {
    pub j_hat: RatFunc,
    pub j0_hat: RatFunc,
    /// j_hat = j0_hat(h) as rational functions.
    pub factors_through_h: bool,
}

pub fn verify_covers_of_z1_line(z1: &QSeries, j: &QSeries) -> Result<Z1Covers> {
    let j_hat = fit_rational_map(z1, j, 36)?;
    let h = ratfunc_of_series(&h_of_z1(), z1)?;
    let j0_hat = fit_rational_map(&h, j, 4)?;
    let factors_through_h = j0_hat.compose(&h_of_z1()) == j_hat;
    Ok(Z1Covers { j_hat, j0_hat, factors_through_h })
}

/// -(h - 27)(h - 3)^3 / h.
pub fn j0_expected() -> RatFunc {
    RatFunc::new(qpoly(&[-27, 1]).mul(&qpoly(&[-3, 1]).pow(3)).neg(), qpoly(&[0, 1])).expect("nonzero")
}

/// Coefficient of b^k in a bivariate polynomial, as a polynomial in a.
pub fn coefficient_in_second(p: &MultiPoly, k: u32) -> QPoly {
    let mut c = Vec::new();
    for (e, v) in p.terms() {
        if e[1] == k {
            let i = e[0] as usize;
            if c.len() <= i {
                c.resize(i + 1, Rat::zero());
            }
            c[i] = v.clone();
        }
    }
    QPoly::new(c)
}

/// The relation R(x, z1) = 0, with the x-values over z1 = 0 and z1 = infinity.
#[derive(Clone, Debug)]
pub struct XZ1Relation {
    pub r: MultiPoly,
    pub solution_dim: usize,
    /// R(x, 0) as a polynomial in x.
    pub over_zero: QPoly,
    /// Leading coefficient in z1, as a polynomial in x.
    pub over_infinity: QPoly,
}

pub fn fit_x_z1_relation(x: &QSeries, z1: &QSeries) -> Result<XZ1Relation> {
    let sols = fit_bivariate(x, z1, 3, 4)?;
    let r = sols.first().cloned().ok_or(Error::NoRelation)?;
    let top = r.degree_in(1).unwrap_or(0);
    Ok(XZ1Relation {
        over_zero: coefficient_in_second(&r, 0),
        over_infinity: coefficient_in_second(&r, top),
        r,
        solution_dim: sols.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{coordinate_x, coordinate_y, cusp_values, f_series};
    use alloc::string::String;
    use std::sync::OnceLock;

    struct Pipeline {
        x: QSeries,
        y: QSeries,
        j: QSeries,
        model: ModelX9p,
        basis: Vec<QSeries>,
        phis: [PhiMatch; 3],
        z: (QSeries, QSeries),
    }

    fn pipeline() -> &'static Pipeline {
        static P: OnceLock<Pipeline> = OnceLock::new();
        P.get_or_init(|| {
            let x = coordinate_x(&f_series(90).unwrap()).unwrap();
            let y = coordinate_y(90).unwrap().y;
            let j = crate::qseries::expand_j(90);
            let model = fit_model(&x, &y).unwrap();
            let basis = cuspform_basis(&model.p, &x, &y).unwrap();
            let phis = normalized_phis(&basis).unwrap();
            let z = build_model_z(&phis[0].series, &phis[1].series, &phis[2].series).unwrap();
            Pipeline { x, y, j, model, basis, phis, z }
        })
    }

    #[test]
    fn f_identities() {
        let r = verify_f_identities().unwrap();
        assert!(r.forms_agree);
        assert!(!r.literal_forms_agree);
        assert_eq!((r.a0, r.b0), (ri(-23), ri(28)));
        assert_eq!(r.resultant, three_486());
        assert!(r.vanishes_at_pm1);
    }

    #[test]
    fn ramification_of_f() {
        let t: Vec<String> = f_ramification().iter().map(|c| alloc::format!("{c}")).collect();
        assert_eq!(t, ["9^3", "3^8 1^3", "2^12 1^3"]);
    }

    #[test]
    fn master_identity_separates_x_formulas() {
        let m = master_identity(40).unwrap();
        assert_eq!(m.derived, None);
        assert_eq!(m.printed_x, Some(ri(-9)));
        assert_eq!(m.literal_f, Some(ri(-9)));
    }

    #[test]
    fn fit_recovers_f() {
        let p = pipeline();
        let d = adopted_denominator();
        assert_eq!(fit_cover(&p.x, &p.j, &d, 27).unwrap(), cover_f());
        assert_eq!(fit_cover_numerator(&p.x, &p.j, &d, 27).unwrap(), f_numerator_printed());
        assert!(fit_cover(&p.x, &p.j, &d, 26).is_err());
        assert_eq!(f_polynomial_degree(40).unwrap(), 27);
    }

    #[test]
    fn x_cusp_values_are_roots_of_denominator() {
        let cub = reference::denominator_cubic();
        for v in cusp_values(&pipeline().x).unwrap() {
            let val = cub.coeffs().iter().rev().fold(CycNum::from_int(0), |acc, c| &(&acc * &v) + &CycNum::from_rational(c));
            assert!(val.is_zero());
        }
    }

    #[test]
    fn plane_model() {
        let m = &pipeline().model;
        assert_eq!(m.solution_dim, 1);
        assert!(m.irreducible && m.double_points);
        assert_eq!((m.p.degree_in(0), m.p.degree_in(1)), (Some(3), Some(4)));
        let expected = MultiPoly::from_bivariate(&[
            ((3, 4), 1), ((3, 3), 2), ((3, 2), 6), ((3, 1), 2), ((3, 0), -2),
            ((2, 4), -3), ((2, 3), -15), ((2, 2), -9), ((2, 1), 3), ((2, 0), -3),
            ((1, 4), 3), ((1, 3), 6), ((1, 1), 15), ((1, 0), 3),
            ((0, 4), 5), ((0, 3), 10), ((0, 2), -15), ((0, 1), -8), ((0, 0), -1),
        ]);
        assert!(m.p == expected || m.p == expected.neg());
        // Off the double points the multiplicity drops.
        assert_eq!(point_multiplicity(&m.p, &CycNum::from_int(0), &CycNum::from_int(0)), 0);
    }

    #[test]
    fn cuspforms_against_printed() {
        let p = pipeline();
        assert_eq!(adjoint_space().unwrap().len(), 3);
        assert_eq!(p.basis.len(), 3);
        assert!(p.phis[0].mismatches.is_empty());
        assert_eq!(p.phis[1].mismatches, [8]);
        assert!(p.phis[2].mismatches.is_empty());
        // Reading the printed variable as q = q9^9 admits no fit.
        assert!(match_printed_phi(&p.basis, &reference::PHI2_TERMS, 9, 5).is_err());
    }

    #[test]
    fn z_model_equations() {
        let (z1, z2) = &pipeline().z;
        assert_eq!(eq1_residual(z1, z2).unwrap(), None);
        assert!(eq2_identity().unwrap());
        assert_eq!(z1.coeff_at_int(0).unwrap(), crate::exact::parse_k("2-c1-2c2").unwrap());
    }

    #[test]
    fn x_against_z1() {
        let p = pipeline();
        let r = fit_x_z1_relation(&p.x, &p.z.0).unwrap();
        assert_eq!(r.solution_dim, 1);
        let pm = |s: i64| qpoly(&[s, 1]);
        assert_eq!(r.over_zero.monic(), pm(1).pow(3));
        assert_eq!(r.over_infinity.monic(), pm(-1).pow(3));
        let _ = &p.y;
    }

    #[test]
    fn z1_line_covers() {
        let x = coordinate_x(&f_series(200).unwrap()).unwrap();
        let y = coordinate_y(200).unwrap().y;
        let b = cuspform_basis(&pipeline().model.p, &x, &y).unwrap();
        let ph = normalized_phis(&b).unwrap();
        let z1 = build_model_z(&ph[0].series, &ph[1].series, &ph[2].series).unwrap().0;
        let c = verify_covers_of_z1_line(&z1, &crate::qseries::expand_j(200)).unwrap();
        assert_eq!(c.j_hat.degree(), 36);
        assert_eq!(c.j0_hat.degree(), 4);
        assert_eq!(c.j0_hat, j0_expected());
        assert!(c.factors_through_h);
    }
}
