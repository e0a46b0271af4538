use modnine_core::curves::{
    ap, conductor, curve_from_j, frobenius_mod9_check, local_data, mod3_image_class, Mod3Image, WeierstrassCurve,
};
use modnine_core::exact::rat::{primes_up_to, rat, rat_int, val_rat};
use modnine_core::modgroup::{extend_to_gprime, gl2, group_g, Subgroup};
use modnine_core::reference::TABLE;
use num_bigint::BigInt;
use proptest::prelude::*;

fn curve() -> impl Strategy<Value = WeierstrassCurve> {
    proptest::array::uniform5(-12i64..=12).prop_filter_map("singular", |a| WeierstrassCurve::from_ints(a).ok())
}

fn c4_disc(a: &[BigInt; 5]) -> (modnine_core::exact::Rat, modnine_core::exact::Rat) {
    let e = WeierstrassCurve::from_bigints(a.clone()).unwrap();
    let i = e.invariants();
    (i.c4, i.disc)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariant_identities(e in curve()) {
        let i = e.invariants();
        prop_assert_eq!(rat_int(1728) * &i.disc, &i.c4 * &i.c4 * &i.c4 - &i.c6 * &i.c6);
        prop_assert_eq!(rat_int(4) * &i.b8, &i.b2 * &i.b6 - &i.b4 * &i.b4);
        prop_assert_eq!(&i.j * &i.disc, &i.c4 * &i.c4 * &i.c4);
    }

    /// At p >= 5 the exponent is 0, 1 or 2 for good, multiplicative or additive reduction, read
    /// off the valuations of c4 and the discriminant of the minimal model.
    #[test]
    fn tate_matches_valuations_at_large_primes(e in curve()) {
        let n = conductor(&e).unwrap();
        for l in &n.local {
            let cap = match l.p {
                2 => 8,
                3 => 5,
                _ => 2,
            };
            prop_assert!(l.conductor_exponent <= cap);
            if l.p < 5 {
                continue;
            }
            let (c4, d) = c4_disc(&l.minimal);
            let vd = val_rat(&d, l.p).unwrap();
            let vc = if c4 == rat_int(0) { i64::MAX } else { val_rat(&c4, l.p).unwrap() };
            let want = if vd == 0 { 0 } else if vc == 0 { 1 } else { 2 };
            prop_assert_eq!(l.conductor_exponent, want);
        }
        for p in primes_up_to(40) {
            let lp = local_data(&e, p).unwrap();
            prop_assert_eq!(lp.conductor_exponent > 0, n.local.iter().any(|l| l.p == p));
        }
    }

    #[test]
    fn hasse_bound(e in curve()) {
        for p in primes_up_to(200) {
            if let Ok(d) = ap(&e, p) {
                prop_assert!(d.ap * d.ap <= 4 * p as i64);
            }
        }
    }
}

#[test]
fn table_curves_have_frobenius_in_g_prime() {
    let gp = extend_to_gprime(&group_g()).unwrap().group;
    let full = Subgroup { n: 9, gens: Vec::new(), elements: gl2(9).into_iter().collect() };
    for row in &TABLE {
        let e = WeierstrassCurve::from_ints(row.curve).unwrap();
        let r = frobenius_mod9_check(&e, &gp, 1000).unwrap();
        assert!(r.all_pass(), "{e}: {:?}", r.failures.first());
        assert!(frobenius_mod9_check(&e, &full, 1000).unwrap().all_pass());
    }
    let control = WeierstrassCurve::from_ints([0, 0, 0, 1, 1]).unwrap();
    assert!(!frobenius_mod9_check(&control, &gp, 100).unwrap().all_pass());
    assert!(frobenius_mod9_check(&control, &full, 100).unwrap().all_pass());
}

/// Frobenius mod 3 as a semantic oracle: a Borel image makes every characteristic polynomial
/// split, while the other classes contain elements with irreducible characteristic polynomial.
/// (The (trace, det) pairs of the non-split Cartan normalizer already cover all of GL2(F3), so
/// that class is not separated from the surjective one at this level.)
fn has_irreducible_frobenius(e: &WeierstrassCurve) -> bool {
    let bad: Vec<u64> = conductor(e).unwrap().factorization().iter().map(|x| x.0).collect();
    primes_up_to(400).into_iter().filter(|p| *p != 3 && !bad.contains(p)).any(|p| {
        let t = ap(e, p).unwrap().ap.rem_euclid(3);
        let d = (p % 3) as i64;
        (0..3).all(|r| (r * r - t * r + d).rem_euclid(3) != 0)
    })
}

#[test]
fn mod3_classes_against_frobenius() {
    let isog = WeierstrassCurve::from_ints([0, 1, 0, 3, -1]).unwrap();
    assert_eq!(mod3_image_class(&isog), Mod3Image::IsogenyCase);
    assert!(!has_irreducible_frobenius(&isog));

    let cube = curve_from_j(&rat(8, 1));
    assert_eq!(mod3_image_class(&cube), Mod3Image::CubeCase);
    assert!(has_irreducible_frobenius(&cube));

    for row in &TABLE {
        let e = WeierstrassCurve::from_ints(row.curve).unwrap();
        assert_eq!(mod3_image_class(&e), Mod3Image::Surjective);
        assert!(has_irreducible_frobenius(&e), "{e}");
    }

    for a in [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0]] {
        assert_eq!(mod3_image_class(&WeierstrassCurve::from_ints(a).unwrap()), Mod3Image::CmSpecial);
    }
}
