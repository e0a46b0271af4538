use modnine_core::modgroup::CuspClass;
use modnine_core::Error;
use modnine_core::units::{
    g_orbit_unit, normalize_lead, orbit_product, quadratic_relations, siegel_expand, SiegelParams, UnitProduct,
};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = (i64, i64)> {
    (0i64..9, 0i64..9).prop_filter("primitive label", |(a, b)| a % 3 != 0 || b % 3 != 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sign_flip_normalizes_to_the_same_function((a, b) in params()) {
        let p = SiegelParams::new(a, b).unwrap();
        let q = SiegelParams::new(-a, -b).unwrap();
        prop_assert_eq!(p, q);
        prop_assert_eq!(siegel_expand(&p, 20), siegel_expand(&q, 20));
    }

    /// Products of G-orbit units have coefficients in the real cubic field once normalized.
    #[test]
    fn orbit_units_are_defined_over_k(e in proptest::array::uniform3(-2i64..=2)) {
        prop_assume!(e.iter().any(|&x| x != 0));
        let mut factors = Vec::new();
        for (k, a) in [1u8, 4, 7].iter().enumerate() {
            for (p, m) in g_orbit_unit(CuspClass(*a, 0)).factors() {
                if e[k] != 0 {
                    factors.push((*p, m * e[k]));
                }
            }
        }
        let u = UnitProduct::new(factors).unwrap();
        prop_assert!(quadratic_relations(&u));
        let s = normalize_lead(&orbit_product(&u, 14).unwrap()).unwrap();
        prop_assert!(s.has_integral_exponents());
        for c in s.coeffs() {
            prop_assert!(c.to_k().is_ok());
        }
    }
}

#[test]
fn single_siegel_function_fails_relations() {
    let u = UnitProduct::new(vec![(SiegelParams::new(1, 0).unwrap(), 1)]).unwrap();
    assert!(!quadratic_relations(&u));
    assert!(UnitProduct::new(vec![]).is_err());
    assert!(SiegelParams::new(3, 6).is_err());
    // Relations hold but the total multiplicity is 3.
    let p = |b| SiegelParams::new(0, b).unwrap();
    let u = UnitProduct::new(vec![(p(1), 1), (p(2), 2)]).unwrap();
    assert!(quadratic_relations(&u));
    assert_eq!(orbit_product(&u, 8), Err(Error::FractionalExponent));
}

/// Given the quadratic relations, the q9 exponents are integral exactly when 4 divides the total
/// multiplicity (each factor contributes 3/4 to the constant part of the leading exponent).
/// Exhaustive over two-factor products with multiplicities up to 3.
#[test]
fn relations_and_degree_give_integral_exponents() {
    let labels: Vec<CuspClass> = CuspClass::all();
    let mut seen = [0usize; 2];
    for p in &labels {
        for q in &labels {
            for m in -3i64..=3 {
                for n in -3i64..=3 {
                    if m == 0 || n == 0 || p >= q {
                        continue;
                    }
                    let u = UnitProduct::new(vec![(SiegelParams::from_cusp(*p), m), (SiegelParams::from_cusp(*q), n)])
                        .unwrap();
                    if !quadratic_relations(&u) {
                        continue;
                    }
                    let integral = (m + n) % 4 == 0;
                    seen[integral as usize] += 1;
                    match orbit_product(&u, 4) {
                        Ok(s) => assert!(integral && s.has_integral_exponents(), "{p} {m} {q} {n}"),
                        Err(e) => assert!(!integral && e == Error::FractionalExponent, "{p} {m} {q} {n}"),
                    }
                }
            }
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}
