//! Siegel functions on X(9) as q9-series, products over cusp orbits, Moebius recognition and
//! the coordinates x on the genus-0 curve and y on its degree-3 cover.

use core::fmt;

use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::linalg::{nullspace, rank};
use crate::exact::{CycNum, Rat};
use crate::modgroup::{closure, cusp_orbit, g_generators, group_g, CuspClass};
use crate::qseries::QSeries;
use crate::reference;

/// Siegel parameters (a, b) mod 9 up to sign, stored as the canonical cusp representative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SiegelParams {
    pub a: u8,
    pub b: u8,
}

impl SiegelParams {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let c = CuspClass::new(a, b).ok_or(Error::ImprimitiveParams(a, b))?;
        Ok(Self::from_cusp(c))
    }

    pub fn from_cusp(c: CuspClass) -> Self {
        SiegelParams { a: c.0, b: c.1 }
    }

    /// Leading exponent a^2/18 - a/2 + 3/4 = (9/2) B2(a/9); symmetric under a -> 9 - a.
    pub fn alpha(&self) -> Rat {
        alpha(self.a as i64)
    }
}

impl fmt::Display for SiegelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.a, self.b)
    }
}

pub fn alpha(a: i64) -> Rat {
    Rat::new(BigInt::from(a * a), BigInt::from(18)) - Rat::new(BigInt::from(a), BigInt::from(2))
        + Rat::new(BigInt::from(3), BigInt::from(4))
}

/// The exponent as printed, (a^2/9 + a - 9/6)/2.
pub fn alpha_printed(a: i64) -> Rat {
    (Rat::new(BigInt::from(a * a), BigInt::from(9)) + Rat::from_integer(BigInt::from(a))
        - Rat::new(BigInt::from(3), BigInt::from(2)))
        / Rat::from_integer(BigInt::from(2))
}

/// 18 * B2(a/9), the other printed form of the exponent.
pub fn alpha_printed_bernoulli(a: i64) -> Rat {
    alpha(a) * Rat::from_integer(BigInt::from(4))
}

/// s(a,b) = q9^alpha prod_{n>=0} (1 - z^b q9^(9n+a)) prod_{n>=1} (1 - z^-b q9^(9n-a)) to `terms`
/// terms; for a = 0 the n = 0 factor is the constant 1 - z^b.
pub fn siegel_expand(p: &SiegelParams, terms: usize) -> QSeries {
    let a = p.a as usize;
    let zb = CycNum::zeta_pow(p.b as i64);
    let zmb = CycNum::zeta_pow(-(p.b as i64));
    let mut coeffs = alloc::vec![CycNum::from_int(0); terms];
    if terms > 0 {
        coeffs[0] = if a == 0 { &CycNum::from_int(1) - &zb } else { CycNum::from_int(1) };
    }
    let mut s = QSeries::new(p.alpha(), coeffs).expect("alpha on the 1/36 lattice");
    if a > 0 {
        s.mul_one_minus(&zb, a);
    }
    let mut n = 1;
    while 9 * n < terms + a {
        if 9 * n + a < terms {
            s.mul_one_minus(&zb, 9 * n + a);
        }
        if 9 * n - a < terms {
            s.mul_one_minus(&zmb, 9 * n - a);
        }
        n += 1;
    }
    s
}

/// A product of Siegel functions with integer multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnitProduct {
    factors: Vec<(SiegelParams, i64)>,
}

impl UnitProduct {
    pub fn new(factors: Vec<(SiegelParams, i64)>) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|(_, m)| *m == 0) {
            return Err(Error::EmptyProduct);
        }
        Ok(UnitProduct { factors })
    }

    /// All multiplicities 1 over a list of cusps.
    pub fn from_cusps(cs: &[CuspClass]) -> Result<Self> {
        Self::new(cs.iter().map(|c| (SiegelParams::from_cusp(*c), 1)).collect())
    }

    pub fn factors(&self) -> &[(SiegelParams, i64)] {
        &self.factors
    }

    /// Quotient self / other.
    pub fn divide(&self, other: &Self) -> Self {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().map(|(p, m)| (*p, -m)));
        UnitProduct { factors: f }
    }
}

/// sum m a^2 = sum m b^2 = sum m a b = 0 mod 9.
pub fn quadratic_relations(u: &UnitProduct) -> bool {
    let (mut s1, mut s2, mut s3) = (0i64, 0i64, 0i64);
    for (p, m) in &u.factors {
        let (a, b) = (p.a as i64, p.b as i64);
        s1 += m * a * a;
        s2 += m * b * b;
        s3 += m * a * b;
    }
    s1 % 9 == 0 && s2 % 9 == 0 && s3 % 9 == 0
}

pub fn orbit_product(u: &UnitProduct, terms: usize) -> Result<QSeries> {
    let mut acc: Option<QSeries> = None;
    for (p, m) in &u.factors {
        let s = siegel_expand(p, terms).pow(*m)?;
        acc = Some(match acc {
            None => s,
            Some(a) => a.mul(&s),
        });
    }
    let out = acc.ok_or(Error::EmptyProduct)?;
    if quadratic_relations(u) && !out.has_integral_exponents() {
        return Err(Error::FractionalExponent);
    }
    Ok(out)
}

/// Scale a series so its leading coefficient is 1.
pub fn normalize_lead(s: &QSeries) -> Result<QSeries> {
    let c = s.lead_coeff().ok_or(Error::DivisionByZero)?;
    Ok(s.scale(&c.inv().ok_or(Error::DivisionByZero)?))
}

/// The G-orbit of a cusp as a unit product with multiplicities 1.
pub fn g_orbit_unit(c: CuspClass) -> UnitProduct {
    let orb: Vec<CuspClass> = cusp_orbit(&group_g(), c).into_iter().collect();
    UnitProduct::from_cusps(&orb).expect("orbit is nonempty")
}

/// Normalized products over the G-orbits of (1,0), (4,0), (7,0); the first is F.
pub fn orbit_products(terms: usize) -> Result<[QSeries; 3]> {
    let mk = |a| normalize_lead(&orbit_product(&g_orbit_unit(CuspClass(a, 0)), terms)?);
    Ok([mk(1)?, mk(4)?, mk(7)?])
}

pub fn f_series(terms: usize) -> Result<QSeries> {
    normalize_lead(&orbit_product(&g_orbit_unit(CuspClass(1, 0)), terms)?)
}

/// Projective 2x2 matrix [m11, m12, m21, m22] acting by s -> (m11 s + m12) / (m21 s + m22).
pub type Mobius = [CycNum; 4];

pub fn mobius_apply(m: &Mobius, s: &QSeries) -> Result<QSeries> {
    let num = s.scale(&m[0]).add_const(&m[1])?;
    let den = s.scale(&m[2]).add_const(&m[3])?;
    num.div(&den)
}

/// Scale so the first nonzero of m21, m22, m11, m12 is 1.
pub fn mobius_normalize(m: &Mobius) -> Mobius {
    let pivot = [2, 3, 0, 1].into_iter().find(|&i| !m[i].is_zero()).expect("nonzero matrix");
    let l = m[pivot].inv().expect("nonzero pivot");
    [&m[0] * &l, &m[1] * &l, &m[2] * &l, &m[3] * &l]
}

fn cross_zero(a: &CycNum, b: &CycNum, c: &CycNum, d: &CycNum) -> bool {
    (a * d - b * c).is_zero()
}

/// Equality of projective matrices.
pub fn mobius_equal(m: &Mobius, n: &Mobius) -> bool {
    (0..4).all(|i| (0..4).all(|j| cross_zero(&m[i], &m[j], &n[i], &n[j])))
}

/// Equality after allowing an independent scalar on the target series, i.e. numerator rows and
/// denominator rows proportional separately.
pub fn mobius_equal_up_to_scalar(m: &Mobius, n: &Mobius) -> bool {
    cross_zero(&m[0], &m[1], &n[0], &n[1]) && cross_zero(&m[2], &m[3], &n[2], &n[3])
}

pub fn fmt_mobius(m: &Mobius, var: &str) -> alloc::string::String {
    let lin = |a: &CycNum, b: &CycNum| match (a.is_zero(), b.is_zero()) {
        (true, _) => alloc::format!("{b}"),
        (false, true) => alloc::format!("({a}){var}"),
        (false, false) => alloc::format!("({a}){var} + ({b})"),
    };
    alloc::format!("[{}] / [{}]", lin(&m[0], &m[1]), lin(&m[2], &m[3]))
}

/// Fit t = (m11 s + m12)/(m21 s + m22) on all shared coefficients.
pub fn match_mobius(s: &QSeries, t: &QSeries) -> Result<Mobius> {
    let st = s.mul(t);
    let prec = [s.precision(), t.precision(), st.precision()].into_iter().min().expect("three");
    let base = [s.lead_exponent(), t.lead_exponent(), st.lead_exponent(), &Rat::from_integer(0.into())]
        .into_iter()
        .min()
        .expect("four")
        .clone();
    let span = &prec - &base;
    if !span.is_integer() {
        return Err(Error::IncompatibleExponents);
    }
    let n: i64 = span.to_integer().try_into().map_err(|_| Error::PrecisionExhausted)?;
    let one = QSeries::one(n.max(1) as usize + 1);
    let cols = [s.clone(), one, st.neg(), t.neg()];
    let mut rows = Vec::new();
    for k in 0..n.max(0) {
        let e = &base + Rat::from_integer(k.into());
        let row: Option<Vec<CycNum>> = cols.iter().map(|c| c.coeff_at(&e)).collect();
        rows.push(row.ok_or(Error::PrecisionExhausted)?);
    }
    let ns = nullspace(&rows, 4);
    match ns.len() {
        0 => Err(Error::NoRelation),
        1 => {
            let v = &ns[0];
            Ok(mobius_normalize(&[v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]))
        }
        d => Err(Error::AmbiguousRelation(d)),
    }
}

fn c(m: i64) -> CycNum {
    CycNum::c(m)
}

fn int(n: i64) -> CycNum {
    CycNum::from_int(n)
}

/// The two Moebius maps printed for the sibling products: 1/(F - c2 + 1) and (1 - c2)/F.
pub fn printed_sibling_maps() -> [Mobius; 2] {
    let one_m_c2 = &int(1) - &c(2);
    [[int(0), int(1), int(1), one_m_c2.clone()], [int(0), one_m_c2, int(1), int(0)]]
}

/// The printed x = (-c1 F + 1 - c2)/(F - c1 + 3(1 - c2)).
pub fn printed_x_map() -> Mobius {
    let one_m_c2 = &int(1) - &c(2);
    [-&c(1), one_m_c2.clone(), int(1), &(-&c(1)) + &one_m_c2.scale_int(&BigInt::from(3))]
}

/// x = (-c1 F + c2 - 1)/(F - c2), the map that reproduces the printed x expansion.
pub fn x_map() -> Mobius {
    [-&c(1), &c(2) - &int(1), int(1), -&c(2)]
}

pub fn coordinate_x(f: &QSeries) -> Result<QSeries> {
    mobius_apply(&x_map(), f)
}

pub fn coordinate_x_printed(f: &QSeries) -> Result<QSeries> {
    mobius_apply(&printed_x_map(), f)
}

/// A truncated series from printed (exponent, coefficient) pairs, known through `through`.
pub fn printed_series(terms: &[(i64, &str)], through: i64) -> QSeries {
    let parsed = reference::parse_terms(terms);
    let lead = parsed.iter().map(|(e, _)| *e).min().expect("nonempty");
    let mut v = alloc::vec![CycNum::from_int(0); (through - lead + 1) as usize];
    for (e, c) in parsed {
        v[(e - lead) as usize] = c;
    }
    QSeries::new(Rat::from_integer(lead.into()), v).expect("integral exponent")
}

/// Recover the Moebius map from F to the printed x expansion.
pub fn fit_x_map(f: &QSeries) -> Result<Mobius> {
    match_mobius(f, &printed_series(&reference::X_TERMS, 4))
}

/// Values at the three cusps of the constant term of a series with coefficients in K:
/// the conjugates under zeta -> zeta^k for k = 1, 2, 4.
pub fn cusp_values(s: &QSeries) -> Result<[CycNum; 3]> {
    let c0 = s.coeff_at_int(0).ok_or(Error::PrecisionExhausted)?;
    Ok([c0.clone(), c0.galois(2)?, c0.galois(4)?])
}

/// The cusp triples {(1,0),(4,6),(4,3)} and its multiples by 4 and 7.
pub fn cusp_triples() -> [[CuspClass; 3]; 3] {
    let t = closure(9, &[g_generators().1]).expect("invertible");
    let base: Vec<CuspClass> = cusp_orbit(&t, CuspClass(1, 0)).into_iter().collect();
    let mk = |u: i64| {
        let mut v: Vec<CuspClass> = base.iter().map(|c| c.scale(u)).collect();
        v.sort();
        [v[0], v[1], v[2]]
    };
    [mk(1), mk(4), mk(7)]
}

/// The three triple products, normalized to leading coefficient 1.
pub fn triple_products(terms: usize) -> Result<[QSeries; 3]> {
    let tr = cusp_triples();
    let mk = |i: usize| normalize_lead(&orbit_product(&UnitProduct::from_cusps(&tr[i])?, terms)?);
    Ok([mk(0)?, mk(1)?, mk(2)?])
}

/// y together with the data of its construction.
#[derive(Clone, Debug)]
pub struct YCoordinate {
    pub y: QSeries,
    /// Rank of the span of the three triple products.
    pub rank: usize,
    /// y = (alpha A + beta B)/(gamma A + delta B) with A, B the first two triple products.
    pub combination: Mobius,
}

/// Coefficient rows of several series on a shared exponent window.
pub fn coefficient_rows(series: &[QSeries], from: &Rat, count: usize) -> Result<Vec<Vec<CycNum>>> {
    (0..count)
        .map(|k| {
            let e = from + Rat::from_integer(BigInt::from(k));
            series.iter().map(|s| s.coeff_at(&e).ok_or(Error::PrecisionExhausted)).collect()
        })
        .collect()
}

pub fn coordinate_y(terms: usize) -> Result<YCoordinate> {
    let tp = triple_products(terms)?;
    let lead = tp[0].lead_exponent().clone();
    let rows = coefficient_rows(&tp, &lead, terms.saturating_sub(2))?;
    let rk = rank(&rows, 3);
    let (a, b) = (&tp[0], &tp[1]);
    let yp = printed_series(&reference::Y_TERMS, 3);
    let cols = [a.clone(), b.clone(), yp.mul(a).neg(), yp.mul(b).neg()];
    let fit_rows = coefficient_rows(&cols, &lead, reference::Y_TERMS.len())?;
    let ns = nullspace(&fit_rows, 4);
    let v = match ns.len() {
        0 => return Err(Error::NoRelation),
        1 => &ns[0],
        d => return Err(Error::AmbiguousRelation(d)),
    };
    let m = mobius_normalize(&[v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]);
    let num = a.scale(&m[0]).add(&b.scale(&m[1]))?;
    let den = a.scale(&m[2]).add(&b.scale(&m[3]))?;
    let y = num.div(&den)?;
    Ok(YCoordinate { y, rank: rk, combination: m })
}


#[cfg(test)]
mod pipeline_tests {
    use super::*;

    fn agrees_with_printed(s: &QSeries, terms: &[(i64, &str)], through: i64) -> bool {
        crate::cover::first_difference(&s.truncate(&Rat::from_integer((through + 1).into())), &printed_series(terms, through))
            .unwrap()
            .is_none()
    }

    #[test]
    fn sibling_maps() {
        let [f, t2, t3] = orbit_products(30).unwrap();
        let m2 = match_mobius(&f, &t2).unwrap();
        let m3 = match_mobius(&f, &t3).unwrap();
        let [p2, p3] = printed_sibling_maps();
        assert!(mobius_equal_up_to_scalar(&m2, &p2));
        // The second sibling is (F + 1 - c2)/F, not the printed (1 - c2)/F.
        assert!(!mobius_equal_up_to_scalar(&m3, &p3));
        let one_m_c2 = &int(1) - &c(2);
        assert!(mobius_equal_up_to_scalar(&m3, &[int(1), one_m_c2, int(1), int(0)]));
    }

    #[test]
    fn x_coordinate() {
        let f = f_series(30).unwrap();
        assert!(mobius_equal_up_to_scalar(&fit_x_map(&f).unwrap(), &x_map()));
        assert!(agrees_with_printed(&coordinate_x(&f).unwrap(), &reference::X_TERMS, 4));
        assert!(!agrees_with_printed(&coordinate_x_printed(&f).unwrap(), &reference::X_TERMS, 4));
        assert!(!mobius_equal_up_to_scalar(&x_map(), &printed_x_map()));
    }

    #[test]
    fn y_coordinate() {
        let y = coordinate_y(30).unwrap();
        assert_eq!(y.rank, 2);
        assert!(agrees_with_printed(&y.y, &reference::Y_TERMS, 3));
        assert!(y.y.is_real());
    }
}
