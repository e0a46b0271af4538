//! The cyclotomic field Q(zeta_9) in the power basis 1, z, ..., z^5 with z^6 = -z^3 - 1,
//! and its real cubic subfield K = Q(c1) viewed on the basis {1, c1, c2}.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Element of Q(zeta_9): six integer numerators over a common positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    num: [BigInt; 6],
    den: BigInt,
}

fn reduce_wide(mut t: [BigInt; 11]) -> [BigInt; 6] {
    for k in (6..11).rev() {
        if !t[k].is_zero() {
            let v = core::mem::take(&mut t[k]);
            t[k - 3] -= &v;
            t[k - 6] -= &v;
        }
    }
    let [a, b, c, d, e, f, ..] = t;
    [a, b, c, d, e, f]
}

impl CycNum {
    fn from_parts(num: [BigInt; 6], den: BigInt) -> Self {
        let mut x = CycNum { num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -core::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in self.num.iter_mut() {
                *c /= &g;
            }
        }
    }

    pub fn new(coeffs: [Rat; 6]) -> Self {
        let mut den = BigInt::one();
        for c in &coeffs {
            den = den.lcm(c.denom());
        }
        let num = core::array::from_fn(|i| coeffs[i].numer() * (&den / coeffs[i].denom()));
        Self::from_parts(num, den)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        let mut num: [BigInt; 6] = Default::default();
        num[0] = n;
        CycNum { num, den: BigInt::one() }
    }

    pub fn from_rational(r: &Rat) -> Self {
        let mut num: [BigInt; 6] = Default::default();
        num[0] = r.numer().clone();
        CycNum { num, den: r.denom().clone() }
    }

    /// zeta^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(9) as usize;
        let mut t: [BigInt; 11] = Default::default();
        t[k] = BigInt::one();
        CycNum { num: reduce_wide(t), den: BigInt::one() }
    }

    /// c_m = zeta^m + zeta^-m.
    pub fn c(m: i64) -> Self {
        Self::zeta_pow(m) + Self::zeta_pow(-m)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        Rat::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> [Rat; 6] {
        core::array::from_fn(|i| self.coeff(i))
    }

    pub fn numerators(&self) -> &[BigInt; 6] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let num = core::array::from_fn(|i| &self.num[i] * r.numer());
        Self::from_parts(num, &self.den * r.denom())
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        let num = core::array::from_fn(|i| &self.num[i] * n);
        Self::from_parts(num, self.den.clone())
    }

    /// The automorphism zeta -> zeta^k. Requires gcd(k, 9) = 1.
    pub fn galois(&self, k: i64) -> Result<Self> {
        if k.gcd(&9) != 1 {
            return Err(Error::NotAUnit(k));
        }
        let k = k.rem_euclid(9) as usize;
        let mut t: [BigInt; 11] = Default::default();
        for i in 0..6 {
            t[(i * k) % 9] += &self.num[i];
        }
        Ok(CycNum { num: reduce_wide(t), den: self.den.clone() })
    }

    pub fn conj(&self) -> Self {
        self.galois(8).expect("8 is a unit")
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Field norm to Q.
    pub fn norm(&self) -> Rat {
        let mut acc = self.clone();
        for k in [2, 4, 5, 7, 8] {
            acc = &acc * &self.galois(k).expect("unit");
        }
        acc.as_rational().expect("norm is rational")
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut others = self.galois(2).expect("unit");
        for k in [4, 5, 7, 8] {
            others = &others * &self.galois(k).expect("unit");
        }
        let n = (self * &others).as_rational().expect("norm is rational");
        Some(others.scale(&n.recip()))
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycNum::from_int(1);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Some(acc)
    }

    pub fn to_k(&self) -> Result<KView> {
        if !self.is_real() {
            return Err(Error::NotReal);
        }
        let c = [self.coeff(0), -self.coeff(5), -self.coeff(4)];
        Ok(KView(c))
    }
}

impl Default for CycNum {
    fn default() -> Self {
        CycNum::from_int(0)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, o: &CycNum) -> CycNum {
        if self.den == o.den {
            let num = core::array::from_fn(|i| &self.num[i] + &o.num[i]);
            return CycNum::from_parts(num, self.den.clone());
        }
        let num = core::array::from_fn(|i| &self.num[i] * &o.den + &o.num[i] * &self.den);
        CycNum::from_parts(num, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, o: &CycNum) -> CycNum {
        if self.den == o.den {
            let num = core::array::from_fn(|i| &self.num[i] - &o.num[i]);
            return CycNum::from_parts(num, self.den.clone());
        }
        let num = core::array::from_fn(|i| &self.num[i] * &o.den - &o.num[i] * &self.den);
        CycNum::from_parts(num, &self.den * &o.den)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, o: &CycNum) -> CycNum {
        let mut t: [BigInt; 11] = Default::default();
        for i in 0..6 {
            if self.num[i].is_zero() {
                continue;
            }
            for j in 0..6 {
                if !o.num[j].is_zero() {
                    t[i + j] += &self.num[i] * &o.num[j];
                }
            }
        }
        CycNum::from_parts(reduce_wide(t), &self.den * &o.den)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { num: core::array::from_fn(|i| -&self.num[i]), den: self.den.clone() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, o: CycNum) -> CycNum {
                <&CycNum as $tr<&CycNum>>::$m(&self, &o)
            }
        }
        impl<'a> $tr<&'a CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, o: &CycNum) -> CycNum {
                <&CycNum as $tr<&CycNum>>::$m(&self, o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Field for CycNum {
    fn zero() -> Self {
        CycNum::from_int(0)
    }
    fn one() -> Self {
        CycNum::from_int(1)
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        CycNum::inv(self)
    }
    fn from_rat(r: &Rat) -> Self {
        CycNum::from_rational(r)
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: &[(Rat, &str)]) -> fmt::Result {
    let mut first = true;
    for (c, name) in terms {
        if Zero::is_zero(c) {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        if name.is_empty() {
            write!(f, "{a}")?;
        } else if One::is_one(&a) {
            write!(f, "{name}")?;
        } else {
            write!(f, "{a}*{name}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for CycNum {
    /// Real elements print on {1, c1, c2}; others on powers of z = zeta_9.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Ok(k) = self.to_k() {
            return fmt::Display::fmt(&k, f);
        }
        let c = self.coeffs();
        let names = ["", "z", "z^2", "z^3", "z^4", "z^5"];
        let terms: Vec<(Rat, &str)> = (0..6).map(|i| (c[i].clone(), names[i])).collect();
        fmt_terms(f, &terms)
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of the real cubic subfield K on the basis {1, c1, c2}.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct KView(pub [Rat; 3]);

impl KView {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        KView([a, b, c])
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        KView([Rat::from_integer(a.into()), Rat::from_integer(b.into()), Rat::from_integer(c.into())])
    }

    /// Back to the power basis: c1 = z - z^2 - z^5, c2 = -z + z^2 - z^4.
    pub fn to_cyc(&self) -> CycNum {
        let [a, b, c] = &self.0;
        CycNum::new([a.clone(), b - c, c - b, <Rat as Zero>::zero(), -c, -b])
    }
}

impl fmt::Display for KView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(self.0[0].clone(), ""), (self.0[1].clone(), "c1"), (self.0[2].clone(), "c2")];
        fmt_terms(f, &terms)
    }
}

/// Shorthand for the element a + b*c1 + c*c2 of K.
pub fn k_elem(a: i64, b: i64, c: i64) -> CycNum {
    KView::from_ints(a, b, c).to_cyc()
}

/// Parse a K-element written as an integer combination of 1, c1, c2, c4, c7, e.g. "2c2+c4-3".
/// Used for reading printed expansions; c4 = -c1-c2 and c7 = c2.
pub fn parse_k(s: &str) -> Option<CycNum> {
    let mut acc = CycNum::from_int(0);
    let bytes: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    if bytes.is_empty() {
        return None;
    }
    while i < bytes.len() {
        let mut sign = 1i64;
        if bytes[i] == '+' || bytes[i] == '-' {
            if bytes[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: i64 = if i > start {
            bytes[start..i].iter().collect::<String>().parse().ok()?
        } else {
            1
        };
        let term = if i < bytes.len() && bytes[i] == 'c' {
            i += 1;
            let ms = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let m: i64 = bytes[ms..i].iter().collect::<String>().parse().ok()?;
            CycNum::c(m)
        } else {
            if i == start {
                return None;
            }
            CycNum::from_int(1)
        };
        acc = &acc + &term.scale_int(&BigInt::from(sign * coef));
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_identities() {
        let z3 = CycNum::zeta_pow(3);
        assert_eq!(&z3 * &z3, -CycNum::from_int(1) - z3.clone());
        let c1 = CycNum::c(1);
        assert_eq!(&c1 * &c1, CycNum::c(2) + CycNum::from_int(2));
        assert_eq!(&(&c1 * &CycNum::c(2)) * &CycNum::c(4), CycNum::from_int(-1));
        assert_eq!(CycNum::c(7), CycNum::c(2));
        assert_eq!(CycNum::c(4), -CycNum::c(1) - CycNum::c(2));
    }

    #[test]
    fn galois_action() {
        let c1 = CycNum::c(1);
        let c2 = CycNum::c(2);
        assert_eq!(c1.galois(2).unwrap(), c2);
        assert_eq!(c2.galois(2).unwrap(), -&c1 - &c2);
        assert_eq!(c1.galois(8).unwrap(), c1);
        assert_eq!(c1.galois(3), Err(Error::NotAUnit(3)));
    }

    #[test]
    fn k_view() {
        assert_eq!(CycNum::c(7).to_k().unwrap(), KView::from_ints(0, 0, 1));
        assert_eq!(CycNum::zeta_pow(1).to_k(), Err(Error::NotReal));
        let x = CycNum::from_int(2) + CycNum::c(4);
        assert_eq!(x.to_k().unwrap(), KView::from_ints(2, -1, -1));
        assert_eq!(x.to_k().unwrap().to_cyc(), x);
    }

    #[test]
    fn inverses() {
        let c1 = CycNum::c(1);
        assert_eq!(c1.inv().unwrap(), k_elem(1, 0, -1));
        assert_eq!(CycNum::c(2).inv().unwrap(), CycNum::from_int(1) - CycNum::c(4));
        let z = CycNum::zeta_pow(1) + CycNum::from_int(3);
        assert!((&z * &z.inv().unwrap()).is_one());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_k("2c2+c4").unwrap(), k_elem(0, -1, 1));
        assert_eq!(parse_k("3c4-6c7+9").unwrap(), k_elem(9, -3, -9));
        assert_eq!(parse_k("-3").unwrap(), CycNum::from_int(-3));
        assert_eq!(parse_k("c4-c1").unwrap(), k_elem(0, -2, -1));
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", k_elem(2, -1, 0)), "2 - c1");
        assert_eq!(alloc::format!("{}", CycNum::zeta_pow(1)), "z");
    }
}
