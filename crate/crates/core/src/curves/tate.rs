//! Tate's algorithm on an integral model, with the non-minimality loop.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{BInv, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::exact::rat::{factor, val_int};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kodaira {
    I0,
    In(u32),
    II,
    III,
    IV,
    I0Star,
    InStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalData {
    pub p: u64,
    pub conductor_exponent: u32,
    pub kodaira: Kodaira,
    /// Valuation of the minimal discriminant.
    pub disc_valuation: u32,
    /// A model minimal at p.
    pub minimal: [BigInt; 5],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conductor {
    pub n: BigInt,
    pub local: Vec<LocalData>,
}

impl Conductor {
    /// (p, f_p) for the bad primes, ascending.
    pub fn factorization(&self) -> Vec<(u64, u32)> {
        self.local.iter().filter(|l| l.conductor_exponent > 0).map(|l| (l.p, l.conductor_exponent)).collect()
    }
}

type Coeffs = [BigInt; 5];

fn pval(x: &BigInt, p: u64) -> u32 {
    val_int(x, p).unwrap_or(u32::MAX)
}

/// Substitution x = x' + r, y = y' + s x' + t.
fn rst(a: &Coeffs, r: &BigInt, s: &BigInt, t: &BigInt) -> Coeffs {
    let [a1, a2, a3, a4, a6] = a;
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    [
        a1 + &two * s,
        a2 - s * a1 + &three * r - s * s,
        a3 + r * a1 + &two * t,
        a4 - s * a3 + &two * r * a2 - (t + r * s) * a1 + &three * r * r - &two * s * t,
        a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1,
    ]
}

fn exact_div(a: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(d);
    debug_assert!(r.is_zero(), "{a} not divisible by {d}");
    q
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// The singular point of the reduction mod p, assuming p divides the discriminant.
fn singular_point(a: &Coeffs, p: u64) -> (BigInt, BigInt) {
    let bp = BigInt::from(p);
    if p <= 3 {
        let [a1, a2, a3, a4, a6] = a.clone().map(|c| c.mod_floor(&bp).to_i64().expect("small"));
        let pi = p as i64;
        for x in 0..pi {
            for y in 0..pi {
                let f = y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6;
                let fx = a1 * y - 3 * x * x - 2 * a2 * x - a4;
                let fy = 2 * y + a1 * x + a3;
                if [f, fx, fy].iter().all(|v| v.rem_euclid(pi) == 0) {
                    return (BigInt::from(x), BigInt::from(y));
                }
            }
        }
        unreachable!("p divides the discriminant");
    }
    let b = BInv::<BigInt>::new(a);
    let (c4, c6) = b.c();
    let x = if (&c4 % &bp).is_zero() {
        -&b.b2 * inv_mod(&BigInt::from(12), &bp)
    } else {
        -(&c6 + &b.b2 * &c4) * inv_mod(&(BigInt::from(12) * &c4), &bp)
    }
    .mod_floor(&bp);
    let y = (-(&a[0] * &x + &a[2]) * inv_mod(&BigInt::from(2), &bp)).mod_floor(&bp);
    (x, y)
}

/// Local data at p by Tate's algorithm. The model must be integral.
pub fn local_data(e: &WeierstrassCurve, p: u64) -> Result<LocalData> {
    let mut a = e.integral_coeffs()?;
    let bp = BigInt::from(p);
    let p2 = &bp * &bp;
    let zero = BigInt::zero();
    let pdiv = |x: &BigInt| (x % &bp).is_zero();
    let half = |x: &BigInt| -> BigInt { (-x * inv_mod(&BigInt::from(2), &bp)).mod_floor(&bp) };
    loop {
        let n = pval(&BInv::<BigInt>::new(&a).discriminant(), p);
        let done = |kodaira, f: u32, a: &Coeffs| LocalData {
            p,
            conductor_exponent: f,
            kodaira,
            disc_valuation: n,
            minimal: a.clone(),
        };
        if n == 0 {
            return Ok(done(Kodaira::I0, 0, &a));
        }
        let (r, t) = singular_point(&a, p);
        a = rst(&a, &r, &zero, &t);
        debug_assert!(pdiv(&a[2]) && pdiv(&a[3]) && pdiv(&a[4]));
        let b = BInv::<BigInt>::new(&a);
        if !pdiv(&b.b2) {
            return Ok(done(Kodaira::In(n), 1, &a));
        }
        if pval(&a[4], p) < 2 {
            return Ok(done(Kodaira::II, n, &a));
        }
        if pval(&b.b8, p) < 3 {
            return Ok(done(Kodaira::III, n - 1, &a));
        }
        if pval(&b.b6, p) < 3 {
            return Ok(done(Kodaira::IV, n - 2, &a));
        }
        // Now p | a1, a2; p^2 | a3, a4; p^3 | a6.
        let (s, t) = if p == 2 {
            (a[1].mod_floor(&bp), BigInt::from(2) * exact_div(&a[4], &BigInt::from(4)).mod_floor(&bp))
        } else {
            (half(&a[0]), (-&a[2] * inv_mod(&BigInt::from(2), &p2)).mod_floor(&p2))
        };
        a = rst(&a, &zero, &s, &t);
        debug_assert!(pdiv(&a[0]) && pdiv(&a[1]) && pval(&a[2], p) >= 2 && pval(&a[3], p) >= 2);
        debug_assert!(pval(&a[4], p) >= 3);
        let p3 = &p2 * &bp;
        let bb = exact_div(&a[1], &bp);
        let cc = exact_div(&a[3], &p2);
        let dd = exact_div(&a[4], &p3);
        let w = BigInt::from(27) * &dd * &dd - &bb * &bb * &cc * &cc + BigInt::from(4) * &bb * &bb * &bb * &dd
            - BigInt::from(18) * &bb * &cc * &dd
            + BigInt::from(4) * &cc * &cc * &cc;
        let x = BigInt::from(3) * &cc - &bb * &bb;
        if !pdiv(&w) {
            return Ok(done(Kodaira::I0Star, n - 4, &a));
        }
        if !pdiv(&x) {
            // Double root: move it to 0, then sharpen divisibility of a3, a4, a6 step by step.
            let r0 = match p {
                2 => cc.mod_floor(&bp),
                3 => (&bb * &cc).mod_floor(&bp),
                _ => ((&bb * &cc - BigInt::from(9) * &dd) * inv_mod(&(BigInt::from(2) * &x), &bp)).mod_floor(&bp),
            };
            a = rst(&a, &(&bp * r0), &zero, &zero);
            let mut m = 1u32;
            let mut mx = p2.clone();
            let mut my = p2.clone();
            loop {
                let xa3 = exact_div(&a[2], &my);
                let xa6 = exact_div(&a[4], &(&mx * &my));
                if !pdiv(&(&xa3 * &xa3 + BigInt::from(4) * &xa6)) {
                    break;
                }
                let tau = if p == 2 { xa6.mod_floor(&bp) } else { half(&xa3) };
                a = rst(&a, &zero, &zero, &(&my * tau));
                my *= &bp;
                m += 1;
                let xa2 = exact_div(&a[1], &bp);
                let xa4 = exact_div(&a[3], &(&bp * &mx));
                let xa6 = exact_div(&a[4], &(&mx * &my));
                if !pdiv(&(&xa4 * &xa4 - BigInt::from(4) * &xa2 * &xa6)) {
                    break;
                }
                let rho = if p == 2 {
                    (&xa6 * &xa2).mod_floor(&bp)
                } else {
                    (-&xa4 * inv_mod(&(BigInt::from(2) * &xa2), &bp)).mod_floor(&bp)
                };
                a = rst(&a, &(&mx * rho), &zero, &zero);
                mx *= &bp;
                m += 1;
            }
            return Ok(done(Kodaira::InStar(m), n - m - 4, &a));
        }
        // Triple root: move it to 0.
        let r0 = if p == 3 {
            (-&dd).mod_floor(&bp)
        } else {
            (-&bb * inv_mod(&BigInt::from(3), &bp)).mod_floor(&bp)
        };
        a = rst(&a, &(&bp * r0), &zero, &zero);
        let p4 = &p2 * &p2;
        let x3 = exact_div(&a[2], &p2);
        let x6 = exact_div(&a[4], &p4);
        if !pdiv(&(&x3 * &x3 + BigInt::from(4) * &x6)) {
            return Ok(done(Kodaira::IVStar, n - 6, &a));
        }
        let tau = if p == 2 { x6.mod_floor(&bp) } else { half(&x3) };
        a = rst(&a, &zero, &zero, &(&p2 * tau));
        if pval(&a[3], p) < 4 {
            return Ok(done(Kodaira::IIIStar, n - 7, &a));
        }
        if pval(&a[4], p) < 6 {
            return Ok(done(Kodaira::IIStar, n - 8, &a));
        }
        // Non-minimal: scale by p.
        for (i, k) in [1u32, 2, 3, 4, 6].into_iter().enumerate() {
            a[i] = exact_div(&a[i], &bp.pow(k));
        }
    }
}

/// Conductor of an integral model: Tate's algorithm at every prime dividing the discriminant.
pub fn conductor(e: &WeierstrassCurve) -> Result<Conductor> {
    let a = e.integral_coeffs()?;
    let disc = BInv::<BigInt>::new(&a).discriminant();
    let fac = factor(&disc.abs(), 1_000_000).ok_or(Error::Factorization)?;
    let mut n = BigInt::one();
    let mut local = Vec::new();
    for (p, _) in fac {
        let p = p.to_u64().ok_or(Error::Factorization)?;
        let l = local_data(e, p)?;
        n *= BigInt::from(p).pow(l.conductor_exponent);
        local.push(l);
    }
    Ok(Conductor { n, local })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reference::TABLE;

    fn e(a: [i64; 5]) -> WeierstrassCurve {
        WeierstrassCurve::from_ints(a).unwrap()
    }

    #[test]
    fn printed_examples() {
        assert_eq!(conductor(&e([0, 0, 0, -27, -42])).unwrap().n, BigInt::from(1944));
        assert_eq!(conductor(&e([0, 0, 1, -135, -604])).unwrap().n, BigInt::from(6075));
        assert_eq!(conductor(&e([0, 0, 0, -162, 792])).unwrap().n, BigInt::from(62208));
    }

    #[test]
    fn known_small_conductors() {
        // 11a1, 37a1, 27a1, 32a1, 36a1, 14a1, 15a1, 24a1, 26b1.
        let cases: [([i64; 5], u64); 9] = [
            ([0, -1, 1, -10, -20], 11),
            ([0, 0, 1, -1, 0], 37),
            ([0, 0, 1, 0, -7], 27),
            ([0, 0, 0, 4, 0], 32),
            ([0, 0, 0, 0, 1], 36),
            ([1, 0, 1, 4, -6], 14),
            ([1, 1, 1, -10, -10], 15),
            ([0, -1, 0, -4, 4], 24),
            ([1, -1, 1, -3, 3], 26),
        ];
        for (a, n) in cases {
            assert_eq!(conductor(&e(a)).unwrap().n, BigInt::from(n), "{a:?}");
        }
    }

    #[test]
    fn non_minimal_models() {
        // Scaling 11a1 by u = 2 and u = 3 leaves the conductor unchanged.
        let base = [0i64, -1, 1, -10, -20];
        for u in [2i64, 3, 5] {
            let ws = [1u32, 2, 3, 4, 6];
            let mut a = base;
            for i in 0..5 {
                a[i] *= u.pow(ws[i]);
            }
            assert_eq!(conductor(&e(a)).unwrap().n, BigInt::from(11));
        }
        let c = conductor(&crate::curves::curve_from_j(&crate::exact::rat::rat_int(4374))).unwrap();
        assert_eq!(c.factorization()[0].0, 2);
    }

    #[test]
    fn table_conductors() {
        for row in &TABLE {
            let c = conductor(&e(row.curve)).unwrap();
            assert_eq!(c.factorization(), row.conductor.to_vec(), "{:?}", row.curve);
        }
    }

    #[test]
    fn exponent_bounds() {
        for row in &TABLE {
            for l in conductor(&e(row.curve)).unwrap().local {
                let bound = match l.p {
                    2 => 8,
                    3 => 5,
                    _ => 2,
                };
                assert!(l.conductor_exponent <= bound);
                assert_eq!(l.conductor_exponent == 0, l.kodaira == Kodaira::I0);
            }
        }
    }
}
