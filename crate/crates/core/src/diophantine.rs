//! Integral values of f: Thue equations for the denominator form, the mod-9 lemma, the 3-adic
//! cube obstruction, the rational points of the z-model, and the table of integral values.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{Signed, Zero};

use crate::cover::{cover_f, evaluate_f_proj};
use crate::curves::{conductor, torsion_points, Point, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::exact::rat::{rat_int, val_rat};
use crate::exact::{qpoly, QPoly, Rat};
use crate::reference::TABLE;

/// m^3 - 3mn^2 - n^3, the homogenized denominator cubic.
pub fn cubic_form(m: i64, n: i64) -> i128 {
    let (m, n) = (m as i128, n as i128);
    m * m * m - 3 * m * n * n - n * n * n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ThueSolution {
    pub m: i64,
    pub n: i64,
    pub value: i64,
}

impl ThueSolution {
    /// x = m/n as a reduced pair with n >= 0; infinity is (1, 0).
    pub fn x(&self) -> (i64, i64) {
        normalize_pair(self.m, self.n)
    }
}

pub fn normalize_pair(m: i64, n: i64) -> (i64, i64) {
    if n == 0 {
        (1, 0)
    } else if n < 0 {
        (-m, -n)
    } else {
        (m, n)
    }
}

/// Real roots of t^3 - 3t - 1, as 2cos(2 pi k / 9) for k = 1, 2, 4.
const ROOTS: [f64; 3] = [1.879_385_241_571_817, -0.347_296_355_333_860_7, -1.532_088_886_237_956];

/// Coprime (m, n) with max(|m|,|n|) <= bound and m^3 - 3mn^2 - n^3 in {1, -1, 3, -3}.
///
/// |F(m,n)| <= 3 forces |m - theta n| < 2 for some root theta, so only a window around each
/// theta n is scanned; `thue_search_naive` is the full square sweep.
pub fn thue_search(bound: i64) -> BTreeMap<i64, Vec<ThueSolution>> {
    let mut out: BTreeMap<i64, Vec<ThueSolution>> = [1, -1, 3, -3].into_iter().map(|v| (v, Vec::new())).collect();
    for n in -bound..=bound {
        let mut ms: Vec<i64> = if n == 0 {
            alloc::vec![-1, 1]
        } else {
            ROOTS.iter().flat_map(|t| {
                let c = (t * n as f64) as i64;
                (c - 3)..=(c + 3)
            })
            .filter(|m| m.abs() <= bound)
            .collect()
        };
        ms.sort_unstable();
        ms.dedup();
        for m in ms {
            record(&mut out, m, n);
        }
    }
    out
}

fn record(out: &mut BTreeMap<i64, Vec<ThueSolution>>, m: i64, n: i64) {
    let v = cubic_form(m, n);
    if v.abs() <= 3 && v.abs() != 2 && v != 0 && m.gcd(&n) == 1 {
        out.get_mut(&(v as i64)).expect("value key").push(ThueSolution { m, n, value: v as i64 });
    }
}

/// The full square sweep, for cross-checking the windowed search.
pub fn thue_search_naive(bound: i64) -> BTreeMap<i64, Vec<ThueSolution>> {
    let mut out: BTreeMap<i64, Vec<ThueSolution>> = [1, -1, 3, -3].into_iter().map(|v| (v, Vec::new())).collect();
    for n in -bound..=bound {
        for m in -bound..=bound {
            record(&mut out, m, n);
        }
    }
    out
}

/// Over (Z/9)^2: 9 | F(m,n) exactly when 3 | m and 3 | n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mod9Lemma {
    pub pairs: usize,
    pub holds: bool,
}

pub fn mod9_denominator_lemma() -> Mod9Lemma {
    let mut holds = true;
    let mut pairs = 0;
    for m in 0..9 {
        for n in 0..9 {
            pairs += 1;
            let div9 = cubic_form(m, n) % 9 == 0;
            holds &= div9 == (m % 3 == 0 && n % 3 == 0);
        }
    }
    Mod9Lemma { pairs, holds }
}

/// Integer coefficient vectors of the numerator and denominator of f.
struct IntegralF {
    num: Vec<BigInt>,
    den: Vec<BigInt>,
}

impl IntegralF {
    fn new() -> Self {
        let f = cover_f();
        let ints = |p: &QPoly| -> Vec<BigInt> {
            p.coeffs().iter().map(|c| {
                assert!(c.is_integer(), "f has integral coefficients");
                c.to_integer()
            })
            .collect()
        };
        IntegralF { num: ints(f.num()), den: ints(f.den()) }
    }

    /// Homogeneous Horner evaluation of a degree-27 form.
    fn hom(c: &[BigInt], m: &BigInt, npow: &[BigInt]) -> BigInt {
        let d = npow.len() - 1;
        let mut acc = c.get(d).cloned().unwrap_or_default();
        for k in (0..d).rev() {
            acc = acc * m + c.get(k).map(|ck| ck * &npow[d - k]).unwrap_or_default();
        }
        acc
    }

    /// f(m/n) when it is an integer.
    fn integral_value(&self, m: i64, n: i64) -> Option<BigInt> {
        let bm = BigInt::from(m);
        let bn = BigInt::from(n);
        let d = self.den.len().max(self.num.len()) - 1;
        let mut npow = Vec::with_capacity(d + 1);
        let mut acc = BigInt::from(1);
        for _ in 0..=d {
            npow.push(acc.clone());
            acc *= &bn;
        }
        let den = Self::hom(&self.den, &bm, &npow);
        if den.is_zero() {
            return None;
        }
        let (q, r) = Self::hom(&self.num, &bm, &npow).div_rem(&den);
        r.is_zero().then_some(q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralRow {
    /// x = m/n, with (1, 0) for infinity.
    pub x: (i64, i64),
    pub f: BigInt,
    /// F(m, n) for the normalized pair.
    pub denominator_form: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralValues {
    /// Rows from the Thue sweep, ordered by x.
    pub rows: Vec<IntegralRow>,
    /// Rows from the brute-force height sweep that are not among `rows`.
    pub extra_from_sweep: Vec<IntegralRow>,
    pub thue_bound: i64,
    pub sweep_height: i64,
}

/// Reduced x = m/n (n >= 0) of height <= h with f(x) integral, by direct evaluation.
pub fn height_sweep(h: i64) -> Vec<IntegralRow> {
    let f = IntegralF::new();
    let mut out = Vec::new();
    for n in 0..=h {
        for m in -h..=h {
            if m.gcd(&n) != 1 || (n == 0 && m != 1) {
                continue;
            }
            if let Some(v) = f.integral_value(m, n) {
                out.push(IntegralRow { x: (m, n), f: v, denominator_form: cubic_form(m, n) as i64 });
            }
        }
    }
    out.sort_by(|a, b| a.x.cmp(&b.x));
    out
}

/// Combine the Thue sweep with evaluation of f, and cross-check by a height sweep.
pub fn integral_values(thue_bound: i64, sweep_height: i64) -> IntegralValues {
    let f = IntegralF::new();
    let mut xs: Vec<(i64, i64)> = thue_search(thue_bound).values().flatten().map(|s| s.x()).collect();
    xs.sort_unstable();
    xs.dedup();
    let rows: Vec<IntegralRow> = xs
        .into_iter()
        .filter_map(|(m, n)| {
            f.integral_value(m, n).map(|v| IntegralRow { x: (m, n), f: v, denominator_form: cubic_form(m, n) as i64 })
        })
        .collect();
    let extra_from_sweep = height_sweep(sweep_height).into_iter().filter(|r| !rows.iter().any(|q| q.x == r.x)).collect();
    IntegralValues { rows, extra_from_sweep, thue_bound, sweep_height }
}

/// One printed table row recomputed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCheck {
    pub x: (i64, i64),
    pub f_value: Option<Rat>,
    pub j_printed: Rat,
    pub j_curve: Rat,
    pub conductor: Vec<(u64, u32)>,
    pub conductor_printed: Vec<(u64, u32)>,
}

impl TableCheck {
    pub fn passes(&self) -> bool {
        self.f_value.as_ref() == Some(&self.j_printed) && self.j_curve == self.j_printed && self.conductor == self.conductor_printed
    }
}

pub fn check_table() -> Result<Vec<TableCheck>> {
    let f = cover_f();
    TABLE
        .iter()
        .map(|row| {
            let e = WeierstrassCurve::from_ints(row.curve)?;
            let j_printed: Rat = row.j.parse::<BigInt>().map(Rat::from_integer).map_err(|_| Error::Inconsistent("table j".into()))?;
            Ok(TableCheck {
                x: row.x,
                f_value: evaluate_f_proj(&f, &BigInt::from(row.x.0), &BigInt::from(row.x.1)),
                j_printed,
                j_curve: e.j(),
                conductor: conductor(&e)?.factorization(),
                conductor_printed: row.conductor.to_vec(),
            })
        })
        .collect()
}

/// 2x^3 + 3x^2 - 3x - 5 = 3(x+1)^3 - (x+2)^3 as polynomials.
pub fn cube_identity_holds() -> bool {
    let lhs = qpoly(&[-5, -3, 3, 2]);
    let rhs = qpoly(&[1, 1]).pow(3).scale(&rat_int(3)).sub(&qpoly(&[2, 1]).pow(3));
    lhs == rhs
}

/// v3 of 3(2x^3 + 3x^2 - 3x - 5).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeObstruction {
    pub value: Rat,
    pub v3: i64,
}

impl CubeObstruction {
    pub fn obstructs(&self) -> bool {
        self.v3.rem_euclid(3) != 0
    }
}

pub fn cube_obstruction(x: &Rat) -> Result<CubeObstruction> {
    let c = qpoly(&[-5, -3, 3, 2]).eval(x);
    if c.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let value = rat_int(3) * c;
    let v3 = val_rat(&value, 3).expect("nonzero");
    Ok(CubeObstruction { value, v3 })
}

/// Reduced fractions m/n with n > 0 and max(|m|, n) <= h.
pub fn reduced_fractions(h: i64) -> impl Iterator<Item = (i64, i64)> {
    (1..=h).flat_map(move |n| (-h..=h).filter(move |m| m.gcd(&n) == 1).map(move |m| (m, n)))
}

/// A rational point of 3 z2^3 = z1 (z1^3 + 3 z1^2 - 6 z1 + 1), or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ZPoint {
    Finite(Rat, Rat),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X9PrimeSearch {
    pub bound: i64,
    pub points: Vec<ZPoint>,
    /// Image of each point on Y^2 + Y = X^3, in affine form or O.
    pub images: Vec<(ZPoint, Point)>,
    pub preimage_counts: BTreeMap<Point, usize>,
    pub images_are_torsion: bool,
}

fn icbrt(n: i128) -> Option<i128> {
    let r = if n < 0 { -(-n).cbrt() } else { n.cbrt() };
    (r * r * r == n).then_some(r)
}

/// Image under (X : Y : Z) = (3(z1+1) z2 : 9 z1 : z1^3 + 3z1^2 - 6z1 + 1), which is the
/// coordinate-wise quotient of (z1(z1+1)z2 : 3z1^2 : z2^3) by z1/3 on the curve.
pub fn eq2_image(p: &ZPoint) -> Point {
    match p {
        ZPoint::Finite(z1, z2) => {
            let x = rat_int(3) * (z1 + rat_int(1)) * z2;
            let y = rat_int(9) * z1;
            let z = qpoly(&[1, -6, 3, 1]).eval(z1);
            if z.is_zero() {
                Point::Infinity
            } else {
                Point::Affine(&x / &z, &y / &z)
            }
        }
        ZPoint::Infinity => image_at_infinity(),
    }
}

/// With z1 = 3/s^3, the curve gives z2 = 3/s^4 (1 + O(s^3)). The coordinates
/// (z1(z1+1)z2, 3z1^2, z2^3) then have orders -10, -6, -12 in s with leading coefficient 27 each,
/// so only Z survives in the limit.
fn image_at_infinity() -> Point {
    let (o1, o2) = (-3i64, -4i64);
    debug_assert_eq!(3 * o2, 4 * o1);
    let orders = [2 * o1 + o2, 2 * o1, 3 * o2];
    let lead = [rat_int(27), rat_int(27), rat_int(27)];
    let min = *orders.iter().min().expect("three");
    let [x, y, z] = [0, 1, 2].map(|i| if orders[i] == min { lead[i].clone() } else { Rat::zero() });
    if z.is_zero() {
        Point::Infinity
    } else {
        Point::Affine(&x / &z, &y / &z)
    }
}

/// Rational points with height(z1) <= bound; z2 is then forced by an exact cube root.
pub fn x9prime_point_search(bound: i64) -> Result<X9PrimeSearch> {
    let mut points = alloc::vec![ZPoint::Infinity];
    for (m, n) in reduced_fractions(bound) {
        let (mi, ni) = (m as i128, n as i128);
        let num = mi * (mi * mi * mi + 3 * mi * mi * ni - 6 * mi * ni * ni + ni * ni * ni);
        let den = 3 * ni * ni * ni * ni;
        let g = num.gcd(&den);
        if g == 0 {
            points.push(ZPoint::Finite(Rat::zero(), Rat::zero()));
            continue;
        }
        if let (Some(a), Some(b)) = (icbrt(num / g), icbrt(den / g)) {
            let z1 = Rat::new(BigInt::from(m), BigInt::from(n));
            points.push(ZPoint::Finite(z1, Rat::new(BigInt::from(a), BigInt::from(b))));
        }
    }
    points.sort();
    let e = WeierstrassCurve::from_ints([0, 0, 1, 0, 0])?;
    let torsion = torsion_points(&e)?.points;
    let images: Vec<(ZPoint, Point)> = points.iter().map(|p| (p.clone(), eq2_image(p))).collect();
    let mut preimage_counts: BTreeMap<Point, usize> = torsion.iter().map(|t| (t.clone(), 0)).collect();
    let mut images_are_torsion = true;
    for (_, q) in &images {
        images_are_torsion &= e.contains(q) && torsion.contains(q);
        *preimage_counts.entry(q.clone()).or_default() += 1;
    }
    Ok(X9PrimeSearch { bound, points, images, preimage_counts, images_are_torsion })
}
