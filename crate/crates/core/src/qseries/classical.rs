//! The level-3 hauptmodul H3 = (eta(tau/3)/eta(3 tau))^3 + 3 and the j-invariant.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

use super::{euler_product, int_series_inv, int_series_mul, sigma3, QSeries};
use crate::exact::{CycNum, Rat};

/// H3 to `terms` q9-terms starting at q9^-3.
///
/// The eta quotient is q9^-3 * prod (1 - Q^n)^3 / prod (1 - Q^(9n))^3 with Q = q9^3.
pub fn expand_h3(terms: usize) -> QSeries {
    let n_q = terms / 3 + 2;
    let num = euler_product(1, 3, n_q);
    let den = euler_product(9, 3, n_q);
    let ratio = int_series_mul(&num, &int_series_inv(&den, n_q), n_q);
    let mut coeffs = alloc::vec![CycNum::from_int(0); terms];
    for (i, c) in ratio.iter().enumerate() {
        if 3 * i < terms {
            coeffs[3 * i] = CycNum::from_bigint(c.clone());
        }
    }
    // the constant term sits at index 3
    if terms > 3 {
        coeffs[3] = &coeffs[3] + &CycNum::from_int(3);
    }
    QSeries::new(Rat::from_integer((-3).into()), coeffs).expect("integral exponent")
}

/// j = E4^3 / Delta to `terms` q9-terms starting at q9^-9 = q^-1.
pub fn expand_j(terms: usize) -> QSeries {
    let n = terms / 9 + 2;
    let mut e4 = alloc::vec![BigInt::zero(); n];
    e4[0] = BigInt::from(1);
    for (k, slot) in e4.iter_mut().enumerate().skip(1) {
        *slot = sigma3(k) * 240;
    }
    let e4_3 = int_series_mul(&int_series_mul(&e4, &e4, n), &e4, n);
    // Delta / q = prod (1 - q^n)^24
    let delta = euler_product(1, 24, n);
    let jq = int_series_mul(&e4_3, &int_series_inv(&delta, n), n);
    let mut coeffs = alloc::vec![CycNum::from_int(0); terms];
    for (i, c) in jq.iter().enumerate() {
        if 9 * i < terms {
            coeffs[9 * i] = CycNum::from_bigint(c.clone());
        }
    }
    QSeries::new(Rat::from_integer((-9).into()), coeffs).expect("integral exponent")
}

/// Outcome of testing j against the two readings of the level-3 relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JOfHReport {
    pub terms: usize,
    /// j (H^3 - 27)^3 - H^3 (H^3 + 216)^3 vanishes on the checked terms.
    pub cubed_holds: bool,
    /// Leading exponents of j (H^3 - 27)^3 and of H^3 (H^3 + 216) without the cube.
    pub uncubed_leads: (Rat, Rat),
    /// The uncubed reading vanishes on the checked terms.
    pub uncubed_holds: bool,
}

/// Compares j (H^3 - 27)^3 with H^3 (H^3 + 216)^k for k = 3 and k = 1 on the first `terms`
/// q9-terms from q9^-36.
pub fn verify_j_of_h(terms: usize) -> JOfHReport {
    let work = terms + 12;
    let h = expand_h3(work);
    let j = expand_j(work);
    let h3 = h.pow(3).expect("nonnegative power");
    let lhs = j.mul(&h3.add_const(&CycNum::from_int(-27)).expect("integral").pow(3).expect("power"));
    let inner = h3.add_const(&CycNum::from_int(216)).expect("integral");
    let rhs3 = h3.mul(&inner.pow(3).expect("power"));
    let rhs1 = h3.mul(&inner);
    let bound = Rat::from_integer(BigInt::from(terms as i64 - 36));
    let vanish = |a: &QSeries, b: &QSeries| {
        let d = a.sub(b).expect("integral").truncate(&bound);
        d.is_zero() && d.precision() >= bound
    };
    JOfHReport {
        terms,
        cubed_holds: vanish(&lhs, &rhs3),
        uncubed_leads: (lhs.lead_exponent().clone(), rhs1.lead_exponent().clone()),
        uncubed_holds: terms == 0 || vanish(&lhs, &rhs1),
    }
}

/// First coefficients of j in q as integers, for tests and reports.
pub fn j_coefficients(n: usize) -> Vec<BigInt> {
    let s = expand_j(9 * n);
    (0..n)
        .map(|k| {
            s.coeff_at_int(9 * k as i64 - 9)
                .and_then(|c| c.as_rational())
                .map(|r| r.to_integer())
                .unwrap_or_default()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h3_printed_terms() {
        let h = expand_h3(60);
        let want = [(-3, 1), (6, 5), (15, -7), (24, 3), (33, 15), (42, -32)];
        for (e, c) in want {
            assert_eq!(h.coeff_at_int(e), Some(CycNum::from_int(c)), "q9^{e}");
        }
        assert_eq!(h.coeff_at_int(0), Some(CycNum::from_int(0)));
    }

    #[test]
    fn j_classical() {
        let c = j_coefficients(3);
        assert_eq!(c, alloc::vec![BigInt::from(1), BigInt::from(744), BigInt::from(196884)]);
    }

    #[test]
    fn j_of_h() {
        let r = verify_j_of_h(36);
        assert!(r.cubed_holds);
        assert!(!r.uncubed_holds);
        assert_eq!(r.uncubed_leads, (Rat::from_integer((-36).into()), Rat::from_integer((-18).into())));
        assert!(verify_j_of_h(0).cubed_holds);
    }
}
