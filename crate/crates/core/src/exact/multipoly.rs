//! Sparse polynomials over Q in at most four variables.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;
use crate::error::{Error, Result};

pub const MAX_VARS: usize = 4;

pub type Exponent = [u32; MAX_VARS];

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponent, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, [0; MAX_VARS])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rat::from_integer(BigInt::from(c)))
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Self::term(Rat::one(), e)
    }

    pub fn term(c: Rat, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MultiPoly { terms }
    }

    /// Builds a bivariate polynomial sum c * x0^i * x1^j from ((i, j), c) pairs.
    pub fn from_bivariate(coeffs: &[((u32, u32), i64)]) -> Self {
        let mut p = Self::zero();
        for &((i, j), c) in coeffs {
            p.add_term([i, j, 0, 0], Rat::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Exponent, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, -c);
        }
        r
    }

    pub fn neg(&self) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = core::array::from_fn(|i| e1[i] + e2[i]);
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::from_int(1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut r = Self::zero();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[var] -= 1;
            r.add_term(e2, c * Rat::from_integer(BigInt::from(e[var])));
        }
        r
    }

    /// Replace variable `var` by the polynomial `value`.
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        let mut r = Self::zero();
        let mut powers: Vec<Self> = alloc::vec![Self::from_int(1)];
        for (e, c) in &self.terms {
            while powers.len() <= e[var] as usize {
                let next = powers.last().expect("nonempty").mul(value);
                powers.push(next);
            }
            let mut e2 = *e;
            e2[var] = 0;
            r = r.add(&Self::term(c.clone(), e2).mul(&powers[e[var] as usize]));
        }
        r
    }

    /// Evaluate with values in any commutative ring given by closures.
    pub fn eval_with<T: Clone>(
        &self,
        vals: &[T],
        one: T,
        from_rat: impl Fn(&Rat) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> T {
        let mut powers: Vec<Vec<T>> = vals.iter().map(|v| alloc::vec![one.clone(), v.clone()]).collect();
        let mut acc: Option<T> = None;
        for (e, c) in &self.terms {
            let mut t = from_rat(c);
            for (i, pw) in powers.iter_mut().enumerate() {
                let k = e[i] as usize;
                if k == 0 {
                    continue;
                }
                while pw.len() <= k {
                    let next = mul(pw.last().expect("nonempty"), &pw[1]);
                    pw.push(next);
                }
                t = mul(&t, &pw[k]);
            }
            acc = Some(match acc {
                None => t,
                Some(a) => add(&a, &t),
            });
        }
        acc.unwrap_or_else(|| from_rat(&Rat::zero()))
    }

    pub fn eval(&self, vals: &[Rat]) -> Rat {
        self.eval_with(vals, Rat::one(), |r| r.clone(), |a, b| a + b, |a, b| a * b)
    }

    /// Exhaustively rewrite `c * var^k -> -(relation - c * var^k) / c`, where `c * var^k` is
    /// the only term of the relation of top degree in `var` and `c` is a constant.
    pub fn reduce(&self, relation: &Self, var: usize) -> Result<Self> {
        let k = relation
            .degree_in(var)
            .filter(|&k| k > 0)
            .ok_or_else(|| Error::UnsupportedRelation("variable absent from relation".into()))?;
        let top: Vec<(&Exponent, &Rat)> = relation.terms.iter().filter(|(e, _)| e[var] == k).collect();
        let mut pure = [0; MAX_VARS];
        pure[var] = k;
        if top.len() != 1 || *top[0].0 != pure {
            return Err(Error::UnsupportedRelation("leading term is not a constant times a pure power".into()));
        }
        let c = top[0].1.clone();
        let tail = relation.sub(&Self::term(c.clone(), pure)).scale(&(-c.recip()));
        let mut p = self.clone();
        loop {
            let hit = p.terms.iter().find(|(e, _)| e[var] >= k).map(|(e, c)| (*e, c.clone()));
            let Some((e, coef)) = hit else {
                return Ok(p);
            };
            p.terms.remove(&e);
            let mut e2 = e;
            e2[var] -= k;
            p = p.add(&Self::term(coef, e2).mul(&tail));
        }
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = (0..MAX_VARS)
                .filter(|&i| e[i] > 0)
                .map(|i| {
                    let n = names.get(i).copied().unwrap_or("v");
                    if e[i] == 1 {
                        String::from(n)
                    } else {
                        alloc::format!("{n}^{}", e[i])
                    }
                })
                .collect();
            if mono.is_empty() {
                s.push_str(&alloc::format!("{a}"));
            } else if a.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&alloc::format!("{a}*{}", mono.join("*")));
            }
        }
        s
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&["x0", "x1", "x2", "x3"]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z1() -> MultiPoly {
        MultiPoly::var(0)
    }
    fn z2() -> MultiPoly {
        MultiPoly::var(1)
    }

    fn quartic() -> MultiPoly {
        // z1^3 + 3z1^2 - 6z1 + 1
        z1().pow(3).add(&z1().pow(2).scale(&Rat::from_integer(3.into()))).sub(&z1().scale(&Rat::from_integer(6.into()))).add(&MultiPoly::from_int(1))
    }

    #[test]
    fn plane_cubic_image_reduces_to_zero() {
        let rel = z2().pow(3).scale(&Rat::from_integer(3.into())).sub(&z1().mul(&quartic()));
        let x = z1().mul(&z1().add(&MultiPoly::from_int(1))).mul(&z2());
        let y = z1().pow(2).scale(&Rat::from_integer(3.into()));
        let z = z2().pow(3);
        let e = y.pow(2).mul(&z).add(&y.mul(&z.pow(2))).sub(&x.pow(3));
        assert!(!e.is_zero());
        assert!(e.reduce(&rel, 1).unwrap().is_zero());
        assert_eq!(z1().reduce(&rel, 1).unwrap(), z1());
    }

    #[test]
    fn cube_rewrite() {
        let lhs = z1().add(&MultiPoly::from_int(1)).pow(3).sub(&z1().scale(&Rat::from_integer(9.into())));
        assert!(lhs.sub(&quartic()).is_zero());
    }

    #[test]
    fn unsupported_shape() {
        let rel = z1().mul(&z2().pow(3)).sub(&MultiPoly::from_int(1));
        assert!(matches!(z2().pow(4).reduce(&rel, 1), Err(Error::UnsupportedRelation(_))));
    }
}
