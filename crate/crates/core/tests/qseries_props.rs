use modnine_core::exact::rat::rat;
use modnine_core::exact::{CycNum, Rat};
use modnine_core::qseries::{expand_h3, expand_j, j_coefficients, QSeries};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = CycNum> {
    proptest::array::uniform6((-5i64..=5, 1i64..=3).prop_map(|(n, d)| rat(n, d))).prop_map(CycNum::new)
}

/// A series with a nonzero leading coefficient, so products never lose their lead.
fn series() -> impl Strategy<Value = QSeries> {
    (-3i64..=3, 0i64..9, (1i64..=4), proptest::collection::vec(coeff(), 1..12)).prop_map(|(l, frac, c0, mut cs)| {
        if cs[0].is_zero() {
            cs[0] = CycNum::from_int(c0);
        }
        QSeries::new(Rat::from_integer(l.into()) + rat(frac, 9), cs).unwrap()
    })
}

proptest! {
    #[test]
    fn mul_is_associative_and_commutative(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn precision_is_the_minimum(a in series(), b in series()) {
        let p = a.mul(&b);
        prop_assert_eq!(p.len(), a.len().min(b.len()));
        let s = a.add(&b);
        if let Ok(s) = s {
            prop_assert!(s.precision() <= a.precision().min(b.precision()));
        }
    }

    #[test]
    fn inverse(a in series()) {
        let one = a.mul(&a.inv().unwrap());
        prop_assert_eq!(one, QSeries::one(a.len()));
    }
}

#[test]
fn h3_coefficients_are_integers() {
    let h = expand_h3(90);
    assert!(h.has_integral_exponents());
    for c in h.coeffs() {
        let r = c.as_rational().expect("no zeta components");
        assert!(r.is_integer());
    }
}

#[test]
fn j_coefficients_are_positive_integers() {
    let c = j_coefficients(30);
    assert_eq!(c[0], 1.into());
    assert_eq!(c[1], 744.into());
    assert_eq!(c[2], 196884.into());
    assert!(c[2..].iter().all(|x| *x > 0.into()));
    assert!(expand_j(270).coeffs().iter().all(|x| x.as_rational().is_some_and(|r| r.is_integer())));
}
