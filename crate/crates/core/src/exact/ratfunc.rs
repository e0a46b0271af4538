//! Univariate rational functions over Q with coprime numerator and monic denominator.

use core::fmt;

use num_traits::Zero;

use super::field::Field;
use super::poly::QPoly;
use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: QPoly::one() });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let s = den.lc().inv().ok_or(Error::DivisionByZero)?;
        Ok(RatFunc { num: num.scale(&s), den: den.scale(&s) })
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc { num: p, den: QPoly::one() }
    }

    pub fn x() -> Self {
        Self::from_poly(QPoly::x())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Degree as a map P^1 -> P^1.
    pub fn degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.den).sub(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.num.scale(s), self.den.clone()).expect("nonzero")
    }

    /// Value at a finite point; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Value at infinity; `None` when infinity is a pole.
    pub fn eval_infinity(&self) -> Option<Rat> {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        if self.num.is_zero() || dn < dd {
            Some(<Rat as Zero>::zero())
        } else if dn == dd {
            Some(self.num.lc() / self.den.lc())
        } else {
            None
        }
    }

    /// self(g).
    pub fn compose(&self, g: &Self) -> Self {
        let d = self.degree();
        let hom = |p: &QPoly| {
            let mut acc = QPoly::zero();
            let mut gnum_pow = QPoly::one();
            let mut gden_pows = alloc::vec![QPoly::one()];
            for _ in 0..d {
                let next = gden_pows.last().expect("nonempty").mul(&g.den);
                gden_pows.push(next);
            }
            for i in 0..=d {
                let c = p.coeff(i);
                if !Zero::is_zero(&c) {
                    acc = acc.add(&gnum_pow.mul(&gden_pows[d - i]).scale(&c));
                }
                gnum_pow = gnum_pow.mul(&g.num);
            }
            acc
        };
        Self::new(hom(&self.num), hom(&self.den)).expect("nonzero denominator")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
