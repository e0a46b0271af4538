//! Dense univariate polynomials over a field, with resultants and rational roots.

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Coefficients stored low degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let inv = d.lc().inv().ok_or(Error::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); n - dd];
        for k in (dd..n).rev() {
            let c = r[k].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + j] = r[k - dd + j].sub(&c.mul(dc));
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.lc().inv() {
            Some(i) if !self.is_zero() => self.scale(&i),
            _ => self.clone(),
        }
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_rat(&Rat::from_integer(BigInt::from(i)))))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// self(g(x)).
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Resultant by the Euclidean remainder sequence over the field, normalized as
    /// lc(p)^deg(q) * prod over roots a of p of q(a).
    pub fn resultant_field(&self, q: &Self) -> Result<F> {
        let m = self.degree().ok_or(Error::ZeroPolynomial)?;
        let n = q.degree().ok_or(Error::ZeroPolynomial)?;
        if n == 0 {
            return Ok(pow_f(&q.lc(), m));
        }
        if m == 0 {
            return Ok(pow_f(&self.lc(), n));
        }
        let r = self.rem(q)?;
        let Some(k) = r.degree() else {
            return Ok(F::zero());
        };
        let sub = q.resultant_field(&r)?;
        let mut v = pow_f(&q.lc(), m - k).mul(&sub);
        if (m * n) % 2 == 1 {
            v = v.neg();
        }
        Ok(v)
    }
}

fn pow_f<F: Field>(x: &F, e: usize) -> F {
    let mut acc = F::one();
    for _ in 0..e {
        acc = acc.mul(x);
    }
    acc
}

impl<F: Field + fmt::Display> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

pub type QPoly = UniPoly<Rat>;

/// Polynomial over Q from integer coefficients, low degree first.
pub fn qpoly(c: &[i64]) -> QPoly {
    UniPoly::new(c.iter().map(|&v| Rat::from_integer(BigInt::from(v))).collect())
}

/// Integer polynomial scaled from a rational one: returns (content-free integer coefficients,
/// the rational factor r with p = r * q).
pub fn primitive_part(p: &QPoly) -> (Vec<BigInt>, Rat) {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return (ints, <Rat as Zero>::zero());
    }
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
    (ints, Rat::new(g, den))
}

fn int_degree(a: &[BigInt]) -> usize {
    a.len() - 1
}

fn int_trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

/// Pseudo-remainder of a by b over Z: lc(b)^(deg a - deg b + 1) * a mod b.
fn int_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = int_degree(b);
    let mut r = a.to_vec();
    let lb = &b[db];
    let mut steps = a.len() - db;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bc;
        }
        r = int_trim(r);
        steps -= 1;
    }
    for _ in 0..steps {
        for c in r.iter_mut() {
            *c *= lb;
        }
    }
    r
}

fn int_content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    g
}

/// Resultant of two integer polynomials by the subresultant remainder sequence.
pub fn resultant_int(a: &[BigInt], b: &[BigInt]) -> Result<BigInt> {
    let a = int_trim(a.to_vec());
    let b = int_trim(b.to_vec());
    if a.is_empty() || b.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let (m, n) = (int_degree(&a), int_degree(&b));
    if n == 0 {
        return Ok(b[0].pow(m as u32));
    }
    if m == 0 {
        return Ok(a[0].pow(n as u32));
    }
    let ca = int_content(&a);
    let cb = int_content(&b);
    let t = ca.pow(n as u32) * cb.pow(m as u32);
    let mut a: Vec<BigInt> = a.iter().map(|c| c / &ca).collect();
    let mut b: Vec<BigInt> = b.iter().map(|c| c / &cb).collect();
    let mut s = BigInt::one();
    if m < n {
        core::mem::swap(&mut a, &mut b);
        if m % 2 == 1 && n % 2 == 1 {
            s = -s;
        }
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (int_degree(&a), int_degree(&b));
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = int_prem(&a, &b);
        a = b;
        if r.is_empty() {
            return Ok(BigInt::zero());
        }
        let div = &g * h.pow(delta);
        b = r.iter().map(|c| c / &div).collect();
        g = a[int_degree(&a)].clone();
        h = if delta == 0 { h } else { g.pow(delta) / h.pow(delta - 1) };
        let db = int_degree(&b);
        if db == 0 {
            let da = int_degree(&a) as u32;
            let hh = b[0].pow(da) / h.pow(da.saturating_sub(1));
            let hh = if da == 0 { BigInt::one() } else { hh };
            return Ok(s * t * hh);
        }
    }
}

/// Resultant over Q, computed on cleared integer polynomials by the subresultant sequence.
pub fn resultant(p: &QPoly, q: &QPoly) -> Result<Rat> {
    let m = p.degree().ok_or(Error::ZeroPolynomial)?;
    let n = q.degree().ok_or(Error::ZeroPolynomial)?;
    let (pi, pr) = primitive_part(p);
    let (qi, qr) = primitive_part(q);
    let r = resultant_int(&pi, &qi)?;
    Ok(Rat::from_integer(r) * pow_f(&pr, n) * pow_f(&qr, m))
}

/// Sturm sequence of a squarefree polynomial.
fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[k - 2].rem(&chain[k - 1]).expect("nonzero").neg();
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_variations(chain: &[QPoly], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for p in chain {
        let val = p.eval(x);
        let s = if Zero::is_zero(&val) { 0 } else if val.is_positive() { 1 } else { -1 };
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// All rational roots, sorted ascending without multiplicity.
///
/// The squarefree part is scaled to a monic integer polynomial whose rational roots are
/// integers; those are isolated by exact Sturm bisection on integer intervals.
pub fn rational_roots(p: &QPoly) -> Vec<Rat> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    if d == 0 {
        return Vec::new();
    }
    let sqf = p.div_exact(&p.gcd(&p.derivative())).expect("gcd divides");
    let (c, _) = primitive_part(&sqf);
    let d = c.len() - 1;
    let lc = c[d].clone();
    // h(t) = lc^(d-1) * sqf(t / lc), monic with integer coefficients.
    let mut h = Vec::with_capacity(d + 1);
    for (i, ci) in c.iter().enumerate().take(d) {
        h.push(Rat::from_integer(ci * lc.pow((d - 1 - i) as u32)));
    }
    h.push(<Rat as One>::one());
    let h = UniPoly::new(h);
    let mut bound = BigInt::zero();
    for ci in h.coeffs() {
        bound = bound.max(ci.numer().abs());
    }
    let bound = bound + BigInt::one();
    let chain = sturm_chain(&h);
    let count = |lo: &BigInt, hi: &BigInt| {
        sign_variations(&chain, &Rat::from_integer(lo.clone()))
            - sign_variations(&chain, &Rat::from_integer(hi.clone()))
    };
    let mut out = Vec::new();
    let mut stack = vec![(-&bound - BigInt::one(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        if count(&lo, &hi) == 0 {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if Zero::is_zero(&h.eval(&Rat::from_integer(hi.clone()))) {
                out.push(Rat::new(hi, lc.clone()));
            }
            continue;
        }
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, rat_int};

    #[test]
    fn division() {
        let p = qpoly(&[-1, 0, 1]);
        let (q, r) = p.div_rem(&qpoly(&[-1, 1])).unwrap();
        assert_eq!(q, qpoly(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.gcd(&qpoly(&[1, 2, 1])), qpoly(&[1, 1]));
    }

    #[test]
    fn resultants() {
        assert_eq!(resultant(&qpoly(&[-1, 0, 1]), &qpoly(&[-2, 1])).unwrap(), rat_int(3));
        let a = qpoly(&[1, -3, 0, 1]);
        let b = qpoly(&[-1, -3, 0, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), rat_int(-8));
        assert_eq!(a.resultant_field(&b).unwrap(), rat_int(-8));
        assert_eq!(resultant(&QPoly::zero(), &b), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn roots() {
        assert_eq!(rational_roots(&qpoly(&[-1, 0, 1])), vec![rat_int(-1), rat_int(1)]);
        assert!(rational_roots(&qpoly(&[-1, -3, 0, 1])).is_empty());
        assert!(rational_roots(&qpoly(&[-729, -504, -162, 0, 3])).is_empty());
        assert_eq!(rational_roots(&qpoly(&[0, 3, 0, 0, 3])), vec![rat_int(-1), rat_int(0)]);
        assert_eq!(rational_roots(&qpoly(&[-1, 0, 4]).mul(&qpoly(&[-1, 0, 4]))), vec![rat(-1, 2), rat(1, 2)]);
    }
}
