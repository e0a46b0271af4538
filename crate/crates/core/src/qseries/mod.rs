//! Truncated Laurent series in q9 = exp(2 pi i tau / 9) with coefficients in Q(zeta_9).
//!
//! A series stores its leading exponent (a rational with denominator dividing 36) and a run of
//! coefficients at consecutive integer steps. The exclusive precision bound is
//! `lead + coeffs.len()`; arithmetic never extends it.

mod classical;

pub use classical::{expand_h3, expand_j, j_coefficients, verify_j_of_h, JOfHReport};

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{CycNum, MultiPoly, QPoly, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    lead: Rat,
    coeffs: Vec<CycNum>,
}

fn on_lattice(r: &Rat) -> bool {
    (r * Rat::from_integer(BigInt::from(36))).is_integer()
}

fn int_diff(a: &Rat, b: &Rat) -> Result<i64> {
    let d = a - b;
    if !d.is_integer() {
        return Err(Error::IncompatibleExponents);
    }
    d.to_integer().to_i64().ok_or(Error::PrecisionExhausted)
}

impl QSeries {
    /// Series with the given leading exponent and coefficients; leading zeros are absorbed.
    pub fn new(lead: Rat, coeffs: Vec<CycNum>) -> Result<Self> {
        if !on_lattice(&lead) {
            return Err(Error::IncompatibleExponents);
        }
        let mut s = QSeries { lead, coeffs };
        s.normalize();
        Ok(s)
    }

    fn normalize(&mut self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if k > 0 {
            self.coeffs.drain(..k);
            self.lead += Rat::from_integer(BigInt::from(k));
        }
    }

    /// Series with integer coefficients starting at an integer exponent.
    pub fn from_ints(lead: i64, coeffs: &[i64]) -> Self {
        Self::new(Rat::from_integer(lead.into()), coeffs.iter().map(|&c| CycNum::from_int(c)).collect())
            .expect("integer exponent")
    }

    /// The constant c known to `terms` terms.
    pub fn constant(c: CycNum, terms: usize) -> Self {
        let mut v = vec![CycNum::from_int(0); terms];
        if terms > 0 {
            v[0] = c;
        }
        Self::new(Rat::zero(), v).expect("integer exponent")
    }

    pub fn one(terms: usize) -> Self {
        Self::constant(CycNum::from_int(1), terms)
    }

    /// q9 to the integer power k, with absolute precision bound `prec`.
    pub fn monomial(k: i64, prec: i64) -> Self {
        let n = (prec - k).max(0) as usize;
        let mut v = vec![CycNum::from_int(0); n];
        if n > 0 {
            v[0] = CycNum::from_int(1);
        }
        Self::new(Rat::from_integer(k.into()), v).expect("integer exponent")
    }

    pub fn lead_exponent(&self) -> &Rat {
        &self.lead
    }

    /// Exclusive exponent bound up to which the series is known.
    pub fn precision(&self) -> Rat {
        &self.lead + Rat::from_integer(BigInt::from(self.coeffs.len()))
    }

    /// Number of known terms from the leading exponent on.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Zero to its full precision.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn lead_coeff(&self) -> Option<&CycNum> {
        self.coeffs.first()
    }

    /// Coefficient at exponent e; `None` when e is off the lattice or beyond the precision.
    pub fn coeff_at(&self, e: &Rat) -> Option<CycNum> {
        if *e >= self.precision() {
            return None;
        }
        let d = e - &self.lead;
        if !d.is_integer() || d.is_negative() {
            return Some(CycNum::from_int(0));
        }
        self.coeffs.get(d.to_integer().to_usize()?).cloned()
    }

    pub fn coeff_at_int(&self, e: i64) -> Option<CycNum> {
        self.coeff_at(&Rat::from_integer(e.into()))
    }

    /// Truncate to the absolute exponent bound `prec`.
    pub fn truncate(&self, prec: &Rat) -> Self {
        let d = prec - &self.lead;
        let keep = if d.is_positive() { d.ceil().to_integer().to_usize().unwrap_or(0) } else { 0 };
        let mut s = self.clone();
        if keep < s.coeffs.len() {
            s.coeffs.truncate(keep);
        }
        s
    }

    pub fn truncate_terms(&self, terms: usize) -> Self {
        let mut s = self.clone();
        s.coeffs.truncate(terms);
        s
    }

    pub fn neg(&self) -> Self {
        QSeries { lead: self.lead.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        let mut s = QSeries { lead: self.lead.clone(), coeffs: self.coeffs.iter().map(|x| x * c).collect() };
        s.normalize();
        s
    }

    /// Multiply by q9^r.
    pub fn shift(&self, r: &Rat) -> Result<Self> {
        Self::new(&self.lead + r, self.coeffs.clone())
    }

    fn add_signed(&self, o: &Self, negate: bool) -> Result<Self> {
        let off = int_diff(&o.lead, &self.lead)?;
        let prec = core::cmp::min(self.precision(), o.precision());
        let lead = core::cmp::min(self.lead.clone(), o.lead.clone());
        let n = (&prec - &lead).to_integer().to_i64().unwrap_or(0).max(0) as usize;
        let (s_off, o_off) = if off >= 0 { (0i64, off) } else { (-off, 0) };
        let mut out = Vec::with_capacity(n);
        for i in 0..n as i64 {
            let a = usize::try_from(i - s_off).ok().and_then(|k| self.coeffs.get(k));
            let b = usize::try_from(i - o_off).ok().and_then(|k| o.coeffs.get(k));
            let v = match (a, b) {
                (Some(a), Some(b)) => {
                    if negate {
                        a - b
                    } else {
                        a + b
                    }
                }
                (Some(a), None) => a.clone(),
                (None, Some(b)) => {
                    if negate {
                        -b
                    } else {
                        b.clone()
                    }
                }
                (None, None) => CycNum::from_int(0),
            };
            out.push(v);
        }
        Self::new(lead, out)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.add_signed(o, false)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add_signed(o, true)
    }

    pub fn add_const(&self, c: &CycNum) -> Result<Self> {
        let terms = (self.precision().ceil().to_integer().to_i64().unwrap_or(0)).max(0) as usize;
        self.add(&Self::constant(c.clone(), terms))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut out = vec![CycNum::from_int(0); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        let mut s = QSeries { lead: &self.lead + &o.lead, coeffs: out };
        s.normalize();
        s
    }

    pub fn inv(&self) -> Result<Self> {
        let a0 = self.coeffs.first().ok_or(Error::DivisionByZero)?;
        let inv0 = a0.inv().ok_or(Error::DivisionByZero)?;
        let n = self.coeffs.len();
        let mut out: Vec<CycNum> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = CycNum::from_int(0);
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out.push(-&(&acc * &inv0));
        }
        Self::new(-&self.lead, out)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc: Option<Self> = None;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => b.clone(),
                    Some(a) => a.mul(&b),
                });
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc.unwrap_or_else(|| Self::one(self.coeffs.len())))
    }

    /// q9 d/dq9.
    pub fn theta(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = &self.lead + Rat::from_integer(BigInt::from(i));
            out.push(c.scale(&e));
        }
        let mut s = QSeries { lead: self.lead.clone(), coeffs: out };
        s.normalize();
        s
    }

    /// Apply zeta -> zeta^k to every coefficient.
    pub fn galois(&self, k: i64) -> Result<Self> {
        Ok(QSeries { lead: self.lead.clone(), coeffs: self.coeffs.iter().map(|c| c.galois(k)).collect::<Result<_>>()? })
    }

    /// Substitute q9 -> q9^k for a positive integer k.
    pub fn power_substitute(&self, k: usize) -> Result<Self> {
        let mut out = vec![CycNum::from_int(0); self.coeffs.len() * k];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Self::new(&self.lead * Rat::from_integer(BigInt::from(k)), out)
    }

    /// Substitute q9 -> zeta^k q9; needs integral exponents.
    pub fn twist(&self, k: i64) -> Result<Self> {
        if !self.has_integral_exponents() {
            return Err(Error::FractionalExponent);
        }
        let l = self.lead.to_integer().to_i64().ok_or(Error::PrecisionExhausted)?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * &CycNum::zeta_pow(k * (l + i as i64)))
            .collect();
        Ok(QSeries { lead: self.lead.clone(), coeffs })
    }

    /// Multiply in place by (1 - c q9^k) for k >= 1 relative to the current run.
    pub(crate) fn mul_one_minus(&mut self, c: &CycNum, k: usize) {
        let n = self.coeffs.len();
        for i in (k..n).rev() {
            if !self.coeffs[i - k].is_zero() {
                let t = &self.coeffs[i - k] * c;
                self.coeffs[i] = &self.coeffs[i] - &t;
            }
        }
    }

    /// Evaluate a polynomial with rational coefficients at this series.
    pub fn eval_poly(&self, p: &QPoly) -> Result<Self> {
        let terms = self.coeffs.len();
        let mut acc: Option<Self> = None;
        for c in p.coeffs().iter().rev() {
            let cc = CycNum::from_rational(c);
            acc = Some(match acc {
                None => Self::constant(cc, terms),
                Some(a) => a.mul(self).add_const(&cc)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Self::new(Rat::from_integer(terms.into()), Vec::new()).expect("integral")))
    }

    /// Evaluate a multivariate polynomial at series with integral exponents.
    pub fn eval_multipoly(p: &MultiPoly, vals: &[QSeries]) -> Result<Self> {
        if !vals.iter().all(|v| v.has_integral_exponents()) {
            return Err(Error::IncompatibleExponents);
        }
        let terms = vals.iter().map(|v| v.len()).min().unwrap_or(0);
        Ok(p.eval_with(
            vals,
            Self::one(terms),
            |r| Self::constant(CycNum::from_rational(r), terms),
            |a, b| a.add(b).expect("integral exponents"),
            |a, b| a.mul(b),
        ))
    }

    /// Lowest exponent where the series is nonzero, if any.
    pub fn valuation(&self) -> Option<&Rat> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(&self.lead)
        }
    }

    /// True when every coefficient lies in the real subfield K.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    /// True when all exponents are integers.
    pub fn has_integral_exponents(&self) -> bool {
        self.lead.is_integer()
    }
}

/// Integer power series helpers (low degree first) for the classical expansions.
pub(crate) fn int_series_mul(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().take(n).enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().take(n - i).enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of an integer series with constant term +-1.
pub(crate) fn int_series_inv(a: &[BigInt], n: usize) -> Vec<BigInt> {
    let a0 = &a[0];
    debug_assert!(a0.abs().is_one());
    let mut out: Vec<BigInt> = Vec::with_capacity(n);
    out.push(a0.clone());
    for k in 1..n {
        let mut acc = BigInt::zero();
        for j in 1..=k.min(a.len() - 1) {
            acc += &a[j] * &out[k - j];
        }
        out.push(-(acc * a0));
    }
    out
}

/// prod_{n >= 1} (1 - x^(step n))^e truncated to n terms, for e >= 0.
pub(crate) fn euler_product(step: usize, e: u32, n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n];
    if n == 0 {
        return out;
    }
    out[0] = BigInt::one();
    let mut k = step;
    while k < n {
        for _ in 0..e {
            for i in (k..n).rev() {
                let t = out[i - k].clone();
                out[i] -= t;
            }
        }
        k += step;
    }
    out
}

pub(crate) fn sigma3(n: usize) -> BigInt {
    let mut s = BigInt::zero();
    for d in 1..=n {
        if n % d == 0 {
            s += BigInt::from(d).pow(3u32);
        }
    }
    s
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let e = &self.lead + Rat::from_integer(BigInt::from(i));
            if e.is_zero() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*q9^{e}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q9^{})", self.precision())
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, rat_int};

    #[test]
    fn monomials_multiply() {
        let a = QSeries::monomial(-1, 10);
        let b = QSeries::monomial(1, 12);
        let p = a.mul(&b);
        assert_eq!(p.lead_exponent(), &rat_int(0));
        assert_eq!(p.coeff_at_int(0), Some(CycNum::from_int(1)));
        assert_eq!(p.coeff_at_int(1), Some(CycNum::from_int(0)));
    }

    #[test]
    fn geometric_series() {
        let s = QSeries::from_ints(0, &[1, -1, 0, 0, 0, 0]);
        let inv = s.inv().unwrap();
        assert_eq!(inv, QSeries::from_ints(0, &[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn fractional_exponents_add() {
        let a = QSeries::new(rat(11, 36), vec![CycNum::from_int(1)]).unwrap();
        let b = QSeries::new(rat(25, 36), vec![CycNum::from_int(1)]).unwrap();
        let p = a.mul(&b);
        assert_eq!(p.lead_exponent(), &rat_int(1));
        assert!(p.has_integral_exponents());
        assert_eq!(a.add(&b), Err(Error::IncompatibleExponents));
        assert_eq!(QSeries::new(rat(1, 5), vec![]), Err(Error::IncompatibleExponents));
    }

    #[test]
    fn zero_inversion() {
        let z = QSeries::new(rat_int(3), vec![]).unwrap();
        assert_eq!(z.inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn precision_is_minimum() {
        let a = QSeries::from_ints(0, &[1, 2, 3, 4]);
        let b = QSeries::from_ints(1, &[1, 1]);
        let s = a.add(&b).unwrap();
        assert_eq!(s.precision(), rat_int(3));
        assert_eq!(a.mul(&b).precision(), rat_int(3));
    }
}
