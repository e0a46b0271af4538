use modnine_core::cover::{cover_f, evaluate_f_proj};
use modnine_core::diophantine::{
    cube_obstruction, cubic_form, height_sweep, integral_values, normalize_pair, thue_search, thue_search_naive,
};
use modnine_core::exact::rat::{is_rational_cube, rat};
use modnine_core::exact::Rat;
use num_integer::Integer;
use proptest::prelude::*;

#[test]
fn thue_window_matches_naive_sweep() {
    assert_eq!(thue_search(150), thue_search_naive(150));
}

#[test]
fn thue_solutions_are_primitive_with_the_right_value() {
    for (v, sols) in thue_search(2000) {
        assert!([1, -1, 3, -3].contains(&v));
        for s in sols {
            assert_eq!(s.m.gcd(&s.n), 1);
            assert_eq!(cubic_form(s.m, s.n), v as i128);
        }
    }
}

/// Sweep and Thue side agree: integral values have denominator form in {+-1, +-3}, and each
/// Thue solution gives an integral value.
#[test]
fn sweep_and_thue_agree() {
    let f = cover_f();
    let sweep = height_sweep(120);
    assert_eq!(sweep.len(), 9);
    for r in &sweep {
        assert!([1, -1, 3, -3].contains(&r.denominator_form), "{:?}", r.x);
    }
    for sols in thue_search(120).values() {
        for s in sols {
            let (m, n) = s.x();
            let v = evaluate_f_proj(&f, &m.into(), &n.into()).unwrap();
            assert!(v.is_integer(), "{m}/{n}");
        }
    }
}

#[test]
fn integral_values_stable_past_256() {
    let a = integral_values(300, 256);
    let b = integral_values(2000, 320);
    assert_eq!(a.rows, b.rows);
    assert!(a.extra_from_sweep.is_empty() && b.extra_from_sweep.is_empty());
}

fn fraction() -> impl Strategy<Value = (i64, i64)> {
    (-400i64..=400, 1i64..=400).prop_filter_map("reduced", |(m, n)| (m.gcd(&n) == 1).then_some((m, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cube_obstruction_everywhere((m, n) in fraction()) {
        // 2x^3 + 3x^2 - 3x - 5 has no rational root, so the value is never zero.
        prop_assert!(cube_obstruction(&rat(m, n)).unwrap().obstructs());
    }

    #[test]
    fn f_is_never_a_nonzero_cube((m, n) in fraction()) {
        let f = cover_f();
        if let Some(v) = evaluate_f_proj(&f, &m.into(), &n.into()) {
            prop_assert!(v == Rat::from_integer(0.into()) || !is_rational_cube(&v));
        }
    }

    #[test]
    fn normalize_pair_is_sign_invariant(m in -50i64..50, n in -50i64..50) {
        prop_assume!((m, n) != (0, 0));
        let (a, b) = normalize_pair(m, n);
        prop_assert_eq!(normalize_pair(-m, -n), (a, b));
        prop_assert!(b >= 0);
        prop_assert!(b > 0 || a == 1);
    }
}
