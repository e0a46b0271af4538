//! Weierstrass curves over Q: invariants, conductors by Tate's algorithm, 3-division polynomial,
//! the mod-3 image classifier, torsion by Nagell-Lutz, and Frobenius traces.

mod galois;
mod tate;

pub use galois::{
    ap, classify_gl2_f3, frobenius_mod9_check, gprime_fingerprints, FrobeniusData, FrobeniusReport, Gl2F3Report,
};
pub use tate::{conductor, local_data, Conductor, Kodaira, LocalData};

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
pub use crate::exact::rat::is_rational_cube;
use crate::exact::rat::{factor, rat_int};
use crate::exact::{rational_roots, QPoly, Rat};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, stored as [a1, a2, a3, a4, a6].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a: [Rat; 5],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub b2: Rat,
    pub b4: Rat,
    pub b6: Rat,
    pub b8: Rat,
    pub c4: Rat,
    pub c6: Rat,
    pub disc: Rat,
    pub j: Rat,
}

impl WeierstrassCurve {
    pub fn new(a: [Rat; 5]) -> Result<Self> {
        let e = WeierstrassCurve { a };
        if e.b_invariants().discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        Self::new(a.map(rat_int))
    }

    pub fn from_bigints(a: [BigInt; 5]) -> Result<Self> {
        Self::new(a.map(Rat::from_integer))
    }

    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, if the model is integral.
    pub fn integral_coeffs(&self) -> Result<[BigInt; 5]> {
        if !self.is_integral() {
            return Err(Error::NonIntegralModel);
        }
        Ok(self.a.clone().map(|c| c.to_integer()))
    }

    fn b_invariants(&self) -> BInv<Rat> {
        BInv::<Rat>::new(&self.a)
    }

    pub fn invariants(&self) -> Invariants {
        let b = self.b_invariants();
        let (c4, c6) = b.c();
        let disc = b.discriminant();
        let j = &c4 * &c4 * &c4 / &disc;
        Invariants { b2: b.b2, b4: b.b4, b6: b.b6, b8: b.b8, c4, c6, disc, j }
    }

    pub fn j(&self) -> Rat {
        self.invariants().j
    }

    pub fn contains(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine(x, y) => {
                let [a1, a2, a3, a4, a6] = &self.a;
                y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6
            }
        }
    }

    pub fn neg(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine(x, y) => Point::Affine(x.clone(), -y - &self.a[0] * x - &self.a[2]),
        }
    }

    pub fn add(&self, p: &Point, q: &Point) -> Point {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine(x1, y1), Point::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, a6] = &self.a;
        let (lambda, nu) = if x1 == x2 {
            let denom = y1 + y2 + a1 * x2 + a3;
            if denom.is_zero() {
                return Point::Infinity;
            }
            let d = rat_int(2) * y1 + a1 * x1 + a3;
            let lambda = (rat_int(3) * x1 * x1 + rat_int(2) * a2 * x1 + a4 - a1 * y1) / &d;
            let nu = (-(x1 * x1 * x1) + a4 * x1 + rat_int(2) * a6 - a3 * y1) / &d;
            (lambda, nu)
        } else {
            let d = x2 - x1;
            ((y2 - y1) / &d, (y1 * x2 - y2 * x1) / &d)
        };
        let x3 = &lambda * &lambda + a1 * &lambda - a2 - x1 - x2;
        let y3 = -(&lambda + a1) * &x3 - nu - a3;
        Point::Affine(x3, y3)
    }

    /// Order of p if it is at most `bound`.
    pub fn order_up_to(&self, p: &Point, bound: usize) -> Option<usize> {
        let mut q = p.clone();
        for k in 1..=bound {
            if q == Point::Infinity {
                return Some(k);
            }
            q = self.add(&q, p);
        }
        None
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = &self.a;
        write!(f, "[{a1},{a2},{a3},{a4},{a6}]")
    }
}

/// b- and c-invariants over any ring-like coefficient type.
pub(crate) struct BInv<T> {
    pub b2: T,
    pub b4: T,
    pub b6: T,
    pub b8: T,
}

macro_rules! binv_impl {
    ($t:ty, $lit:expr) => {
        impl BInv<$t> {
            pub fn new(a: &[$t; 5]) -> Self {
                let [a1, a2, a3, a4, a6] = a;
                let k = |n: i64| -> $t { $lit(n) };
                BInv {
                    b2: a1 * a1 + k(4) * a2,
                    b4: k(2) * a4 + a1 * a3,
                    b6: a3 * a3 + k(4) * a6,
                    b8: a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4,
                }
            }

            pub fn c(&self) -> ($t, $t) {
                let k = |n: i64| -> $t { $lit(n) };
                let (b2, b4, b6) = (&self.b2, &self.b4, &self.b6);
                (b2 * b2 - k(24) * b4, -(b2 * b2 * b2) + k(36) * b2 * b4 - k(216) * b6)
            }

            pub fn discriminant(&self) -> $t {
                let k = |n: i64| -> $t { $lit(n) };
                let (b2, b4, b6, b8) = (&self.b2, &self.b4, &self.b6, &self.b8);
                -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6
            }
        }
    };
}

binv_impl!(Rat, rat_int);
binv_impl!(BigInt, BigInt::from);

/// A rational point, possibly the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Point {
    Infinity,
    Affine(Rat, Rat),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine(x, y) => write!(f, "({x},{y})"),
        }
    }
}

/// A curve with the given j-invariant; j = 0 and 1728 use fixed models.
pub fn curve_from_j(j: &Rat) -> WeierstrassCurve {
    let e = if j.is_zero() {
        WeierstrassCurve::from_ints([0, 0, 0, 0, 1])
    } else if j == &rat_int(1728) {
        WeierstrassCurve::from_ints([0, 0, 0, 1, 0])
    } else {
        let (n, d) = (j.numer().clone(), j.denom().clone());
        let m = &n - BigInt::from(1728) * &d;
        let a4 = BigInt::from(-3) * &n * &m * &d * &d;
        let a6 = BigInt::from(-2) * &n * &m * &m * &d * &d * &d;
        WeierstrassCurve::from_bigints([BigInt::zero(), BigInt::zero(), BigInt::zero(), a4, a6])
    }
    .expect("nonsingular for every j");
    debug_assert_eq!(&e.j(), j);
    e
}

/// psi_3 = 3X^4 + b2 X^3 + 3 b4 X^2 + 3 b6 X + b8.
pub fn division_poly_3(e: &WeierstrassCurve) -> QPoly {
    let b = e.b_invariants();
    let three = rat_int(3);
    QPoly::new(alloc::vec![b.b8, &three * &b.b6, &three * &b.b4, b.b2, three])
}

/// A rational root of psi_3 is the x-coordinate of a Galois-stable subgroup of order 3.
pub fn has_rational_3_isogeny(e: &WeierstrassCurve) -> bool {
    !rational_roots(&division_poly_3(e)).is_empty()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Mod3Image {
    Surjective,
    CubeCase,
    IsogenyCase,
    CmSpecial,
}

/// Not surjective mod 3 exactly when j is a cube or a rational 3-isogeny exists.
/// j = 0 and j = 1728 are reported separately. The cube test runs first.
pub fn mod3_image_class(e: &WeierstrassCurve) -> Mod3Image {
    let j = e.j();
    if j.is_zero() || j == rat_int(1728) {
        Mod3Image::CmSpecial
    } else if is_rational_cube(&j) {
        Mod3Image::CubeCase
    } else if has_rational_3_isogeny(e) {
        Mod3Image::IsogenyCase
    } else {
        Mod3Image::Surjective
    }
}

/// Torsion subgroup: the points and the invariant factors of its structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Torsion {
    pub points: Vec<Point>,
    pub structure: Vec<usize>,
}

/// Nagell-Lutz on Y^2 = X^3 - 27 c4 X - 54 c6, with X = 36x + 3b2, Y = 108(2y + a1 x + a3).
pub fn torsion_points(e: &WeierstrassCurve) -> Result<Torsion> {
    e.integral_coeffs()?;
    let inv = e.invariants();
    let a = rat_int(-27) * &inv.c4;
    let b = rat_int(-54) * &inv.c6;
    let d = (rat_int(4) * &a * &a * &a + rat_int(27) * &b * &b).to_integer();
    let fac = factor(&d, 1_000_000).ok_or(Error::Factorization)?;
    let mut ys = alloc::vec![BigInt::one()];
    for (p, k) in &fac {
        let mut next = Vec::new();
        for y in &ys {
            let mut pp = BigInt::one();
            for _ in 0..=k / 2 {
                next.push(y * &pp);
                pp *= p;
            }
        }
        ys = next;
    }
    ys.push(BigInt::zero());
    let mut pts = alloc::vec![Point::Infinity];
    for y in ys {
        for yy in [y.clone(), -y.clone()] {
            if yy.is_negative() && y.is_zero() {
                continue;
            }
            let yy = Rat::from_integer(yy);
            let cubic = QPoly::new(alloc::vec![&b - &yy * &yy, a.clone(), Rat::zero(), Rat::one()]);
            for xx in rational_roots(&cubic) {
                if !xx.is_integer() {
                    continue;
                }
                let x = (&xx - rat_int(3) * &inv.b2) / rat_int(36);
                let y = (&yy / rat_int(108) - &e.a[0] * &x - &e.a[2]) / rat_int(2);
                let p = Point::Affine(x, y);
                debug_assert!(e.contains(&p));
                if e.order_up_to(&p, 12).is_some() && !pts.contains(&p) {
                    pts.push(p);
                }
            }
        }
    }
    pts.sort();
    let n = pts.len();
    let cyclic = pts.iter().any(|p| e.order_up_to(p, 12) == Some(n));
    let structure = if n == 1 {
        Vec::new()
    } else if cyclic {
        alloc::vec![n]
    } else {
        alloc::vec![2, n / 2]
    };
    Ok(Torsion { points: pts, structure })
}

/// Prime factorization of a positive integer as a map, for conductor comparisons.
pub fn factor_map(n: &BigInt) -> Result<BTreeMap<BigInt, u32>> {
    Ok(factor(n, 1_000_000).ok_or(Error::Factorization)?.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qpoly;
    use crate::exact::rat::rat;

    fn e(a: [i64; 5]) -> WeierstrassCurve {
        WeierstrassCurve::from_ints(a).unwrap()
    }

    #[test]
    fn invariants_examples() {
        assert_eq!(e([0, 0, 0, -27, -42]).j(), rat_int(4374));
        assert_eq!(e([0, 0, 1, -135, -604]).j(), rat_int(-44789760));
        let i = e([0, 0, 1, 0, 0]).invariants();
        assert_eq!((i.j, i.disc), (rat_int(0), rat_int(-27)));
        assert_eq!(WeierstrassCurve::from_ints([0, 0, 0, 0, 0]), Err(Error::SingularCurve));
    }

    #[test]
    fn invariant_identities() {
        for a in [[1, -1, 1, -3, 2], [0, 0, 1, -135, -604], [1, 2, 3, 4, 5]] {
            let i = e(a).invariants();
            assert_eq!(rat_int(1728) * &i.disc, &i.c4 * &i.c4 * &i.c4 - &i.c6 * &i.c6);
            assert_eq!(rat_int(4) * &i.b8, &i.b2 * &i.b6 - &i.b4 * &i.b4);
        }
    }

    #[test]
    fn from_j() {
        assert_eq!(curve_from_j(&rat_int(0)), e([0, 0, 0, 0, 1]));
        assert_eq!(curve_from_j(&rat_int(1728)), e([0, 0, 0, 1, 0]));
        for j in [rat_int(4374), rat(-7, 12), rat_int(8000)] {
            assert_eq!(curve_from_j(&j).j(), j);
        }
    }

    #[test]
    fn psi3_examples() {
        assert_eq!(division_poly_3(&e([0, 0, 0, -27, -42])), qpoly(&[-729, -504, -162, 0, 3]));
        assert!(!has_rational_3_isogeny(&e([0, 0, 0, -27, -42])));
        assert_eq!(division_poly_3(&e([0, 0, 1, 0, 0])), qpoly(&[0, 3, 0, 0, 3]));
        assert!(has_rational_3_isogeny(&e([0, 0, 1, 0, 0])));
        assert_eq!(division_poly_3(&e([0, 0, 0, 1, 0])), qpoly(&[-1, 0, 6, 0, 3]));
        assert!(!has_rational_3_isogeny(&e([0, 0, 0, 1, 0])));
    }

    #[test]
    fn cube_examples() {
        assert!(is_rational_cube(&rat_int(8)));
        assert!(!is_rational_cube(&rat_int(4374)));
        assert!(!is_rational_cube(&rat_int(-44789760)));
    }

    #[test]
    fn mod3_classes() {
        assert_eq!(mod3_image_class(&curve_from_j(&rat_int(4374))), Mod3Image::Surjective);
        assert_eq!(mod3_image_class(&e([0, 0, 1, 0, 0])), Mod3Image::CmSpecial);
        assert_eq!(mod3_image_class(&curve_from_j(&rat_int(8000))), Mod3Image::CubeCase);
        assert_eq!(mod3_image_class(&e([0, 0, 1, 0, -7])), Mod3Image::CmSpecial);
        assert_eq!(mod3_image_class(&e([0, 0, 1, -1, 0])), Mod3Image::Surjective);
        // (0,0) has order 3 on y^2 + xy + y = x^3.
        assert_eq!(mod3_image_class(&e([1, 0, 1, 0, 0])), Mod3Image::IsogenyCase);
    }

    #[test]
    fn group_law() {
        let c = e([0, 0, 1, -1, 0]);
        let p = Point::Affine(rat_int(0), rat_int(0));
        let p2 = c.add(&p, &p);
        assert!(c.contains(&p2));
        assert_eq!(c.add(&p, &c.neg(&p)), Point::Infinity);
        let p3 = c.add(&p2, &p);
        assert_eq!(c.add(&p, &p2), p3);
        assert_eq!(c.order_up_to(&p, 12), None);
    }

    #[test]
    fn torsion_examples() {
        let t = torsion_points(&e([0, 0, 1, 0, 0])).unwrap();
        let pts = [Point::Infinity, Point::Affine(rat_int(0), rat_int(-1)), Point::Affine(rat_int(0), rat_int(0))];
        assert_eq!(t.points, pts);
        assert_eq!(t.structure, [3]);
        let t = torsion_points(&e([0, 0, 0, 0, 1])).unwrap();
        assert_eq!((t.points.len(), t.structure.as_slice()), (6, &[6][..]));
        let t = torsion_points(&e([0, 0, 0, 0, -2])).unwrap();
        assert_eq!(t.points, [Point::Infinity]);
        let t = torsion_points(&e([0, 0, 0, -1, 0])).unwrap();
        assert_eq!(t.structure, [2, 2]);
        assert!(torsion_points(&WeierstrassCurve::new([rat(1, 2), rat_int(0), rat_int(0), rat_int(1), rat_int(0)]).unwrap()).is_err());
    }
}
