//! Integer and rational helpers on top of `num-bigint` / `num-rational`.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_big(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// p-adic valuation of a nonzero integer. Returns `None` for zero.
pub fn val_int(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation of a nonzero rational.
pub fn val_rat(x: &Rat, p: u64) -> Option<i64> {
    let a = val_int(x.numer(), p)? as i64;
    let b = val_int(x.denom(), p).unwrap_or(0) as i64;
    Some(a - b)
}

/// Exact integer cube root, if one exists.
pub fn int_cube_root(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    if &(&r * &r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact integer square root of a nonnegative integer, if one exists.
pub fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

pub fn is_rational_cube(r: &Rat) -> bool {
    int_cube_root(r.numer()).is_some() && int_cube_root(r.denom()).is_some()
}

pub fn rational_cube_root(r: &Rat) -> Option<Rat> {
    Some(Rat::new(int_cube_root(r.numer())?, int_cube_root(r.denom())?))
}

/// Small primes up to `bound` by a plain sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = alloc::vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

fn mod_pow(b: &BigInt, e: &BigInt, m: &BigInt) -> BigInt {
    b.modpow(e, m)
}

/// Deterministic Miller-Rabin for n < 3.3e24, probabilistic beyond that with a fixed base set.
pub fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let bp = BigInt::from(p);
        if n == &bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = mod_pow(&BigInt::from(a), &d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factor a nonzero integer by trial division up to `trial_bound`; a leftover cofactor is
/// accepted when it is a probable prime or a perfect square/cube of one.
/// Returns `None` if the cofactor cannot be resolved.
pub fn factor(n: &BigInt, trial_bound: u64) -> Option<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    let mut p: u64 = 2;
    while p <= trial_bound {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return Some(out);
    }
    if is_probable_prime(&n) {
        out.push((n, 1));
        return Some(out);
    }
    for k in 2..=6u32 {
        let r = n.nth_root(k);
        if r.pow(k) == n && is_probable_prime(&r) {
            out.push((r, k));
            out.sort();
            return Some(out);
        }
    }
    None
}

/// Legendre symbol (a/p) for an odd prime p, returned as -1, 0 or 1.
pub fn legendre(a: i64, p: u64) -> i32 {
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let e = (p - 1) / 2;
    let v = pow_mod_u64(r, e, p);
    if v == 1 {
        1
    } else {
        -1
    }
}

pub fn pow_mod_u64(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mm = m as u128;
    let mut bb = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    acc as u64
}

pub fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

/// Reduce a rational modulo a prime; `None` when p divides the denominator.
pub fn rat_mod_p(x: &Rat, p: u64) -> Option<u64> {
    let bp = BigInt::from(p);
    let n = x.numer().mod_floor(&bp).to_u64()?;
    let d = x.denom().mod_floor(&bp).to_u64()?;
    if d == 0 {
        return None;
    }
    Some((n as u128 * inv_mod_u64(d, p)? as u128 % p as u128) as u64)
}

/// Rational reconstruction of `a mod m`: finds n/d with |n|, d <= sqrt(m/2).
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rat> {
    let a = a.mod_floor(m);
    let bound = (m >> 1usize).sqrt();
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rat::new(r1, t1))
}

/// Sign-aware gcd of two i128 values (nonnegative result).
pub fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(val_int(&int(4374), 3), Some(7));
        assert_eq!(val_int(&int(4374), 2), Some(1));
        assert_eq!(val_rat(&rat(5, 81), 3), Some(-4));
        assert_eq!(val_int(&int(0), 3), None);
    }

    #[test]
    fn cubes() {
        assert!(is_rational_cube(&rat_int(8)));
        assert!(is_rational_cube(&rat(-27, 64)));
        assert!(!is_rational_cube(&rat_int(4374)));
        assert!(!is_rational_cube(&rat_int(-44789760)));
    }

    #[test]
    fn factoring() {
        let f = factor(&int(2 * 2 * 2 * 3 * 3 * 3 * 3 * 3 * 97 * 97), 1000).unwrap();
        assert_eq!(f, alloc::vec![(int(2), 3), (int(3), 5), (int(97), 2)]);
        let big = BigInt::from(1_000_000_007u64) * BigInt::from(1_000_000_007u64) * 12;
        let f = factor(&big, 100).unwrap();
        assert_eq!(f.last().unwrap(), &(BigInt::from(1_000_000_007u64), 2));
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        let x = rat(-355, 113);
        let a = (x.numer() * x.denom().modinv(&m).unwrap()).mod_floor(&m);
        assert_eq!(rational_reconstruct(&a, &m), Some(x));
    }

    #[test]
    fn legendre_small() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(14, 7), 0);
    }
}
