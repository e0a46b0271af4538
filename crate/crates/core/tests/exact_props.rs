use modnine_core::exact::linalg::rational_nullspace;
use modnine_core::exact::rat::{rat, rat_int};
use modnine_core::exact::{qpoly, rational_roots, resultant, CycNum, KView, QPoly, Rat};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn cyc() -> impl Strategy<Value = CycNum> {
    proptest::array::uniform6(small_rat()).prop_map(CycNum::new)
}

fn real() -> impl Strategy<Value = CycNum> {
    (small_rat(), small_rat(), small_rat()).prop_map(|(a, b, c)| KView::new(a, b, c).to_cyc())
}

fn eval_c(p: &QPoly, x: &CycNum) -> CycNum {
    p.coeffs().iter().rev().fold(CycNum::from_int(0), |acc, c| &(&acc * x) + &CycNum::from_rational(c))
}

proptest! {
    #[test]
    fn ring_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn inverses(a in cyc()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn real_subfield_round_trip(a in real()) {
        prop_assert!(a.is_real());
        prop_assert_eq!(a.to_k().unwrap().to_cyc(), a);
    }

    #[test]
    fn real_iff_conjugation_fixed(a in cyc()) {
        prop_assert_eq!(a.is_real(), a.conj() == a);
        prop_assert_eq!(a.to_k().is_ok(), a.is_real());
    }

    #[test]
    fn galois_is_a_ring_map(a in cyc(), b in cyc(), k in prop::sample::select(vec![1i64, 2, 4, 5, 7, 8])) {
        prop_assert_eq!((&a * &b).galois(k).unwrap(), &a.galois(k).unwrap() * &b.galois(k).unwrap());
        prop_assert_eq!((&a + &b).galois(k).unwrap(), &a.galois(k).unwrap() + &b.galois(k).unwrap());
    }

    /// Sylvester resultant: Res(p, q) = (-1)^(deg p deg q) lc(q)^deg p * prod p(r) over the roots r
    /// of q, with q built from rational roots.
    #[test]
    fn resultant_against_product_of_values(
        p in proptest::collection::vec(-9i64..=9, 1..6),
        roots in proptest::collection::vec(small_rat(), 1..4),
        lc in prop::sample::select(vec![-3i64, -1, 1, 2, 5]),
    ) {
        let p = qpoly(&p);
        prop_assume!(!p.is_zero());
        let mut q = QPoly::constant(rat_int(lc));
        for r in &roots {
            q = q.mul(&QPoly::new(vec![-r.clone(), rat_int(1)]));
        }
        let deg = p.degree().unwrap() as i32;
        let sign = if deg as usize * roots.len() % 2 == 0 { 1 } else { -1 };
        let want = roots.iter().fold(rat_int(sign) * Rat::from_integer(lc.into()).pow(deg), |acc, r| acc * p.eval(r));
        prop_assert_eq!(resultant(&p, &q).unwrap(), want);
    }

    #[test]
    fn rational_roots_are_exact(roots in proptest::collection::vec(small_rat(), 0..4), extra in 1i64..5) {
        // (x^2 + extra) contributes no rational roots.
        let mut p = qpoly(&[extra, 0, 1]);
        for r in &roots {
            p = p.mul(&QPoly::new(vec![-r.clone(), rat_int(1)]));
        }
        let mut want = roots.clone();
        want.sort();
        want.dedup();
        let mut got = rational_roots(&p);
        got.sort();
        prop_assert_eq!(got, want);
    }
}

#[test]
fn minimal_polynomial_of_c1_by_linear_algebra() {
    // Kernel of the coefficient vectors of 1, c1, c1^2, c1^3 in the power basis.
    let c1 = CycNum::c(1);
    let powers: Vec<CycNum> = (0..4).map(|k| c1.pow(k).unwrap()).collect();
    let rows: Vec<Vec<Rat>> = (0..6).map(|i| powers.iter().map(|p| p.coeff(i)).collect()).collect();
    let ker = rational_nullspace(&rows, 4).unwrap();
    assert_eq!(ker.len(), 1);
    let m = QPoly::new(ker[0].clone()).monic();
    assert_eq!(m, qpoly(&[1, -3, 0, 1]));
    let roots: Vec<CycNum> = [1, 2, 4].iter().map(|&k| CycNum::c(k)).collect();
    for r in &roots {
        assert!(eval_c(&m, r).is_zero());
        assert!(eval_c(&qpoly(&[-1, -3, 0, 1]), &-r).is_zero());
    }
}

#[test]
fn galois_two_cycles_the_real_generators() {
    let c = |k| CycNum::c(k);
    assert_eq!(c(1).galois(2).unwrap(), c(2));
    assert_eq!(c(2).galois(2).unwrap(), c(4));
    assert_eq!(c(4).galois(2).unwrap(), c(1));
    let a = KView::from_ints(3, -1, 2).to_cyc();
    let cubed = a.galois(2).unwrap().galois(2).unwrap().galois(2).unwrap();
    assert_eq!(cubed, a);
    assert_ne!(a.galois(2).unwrap(), a);
    assert!(c(1).galois(3).is_err());
}

#[test]
fn resultant_examples() {
    assert_eq!(resultant(&qpoly(&[-1, 0, 1]), &qpoly(&[-2, 1])).unwrap(), rat_int(3));
    assert_eq!(resultant(&qpoly(&[1, -3, 0, 1]), &qpoly(&[-1, -3, 0, 1])).unwrap(), rat_int(-8));
    assert!(resultant(&QPoly::zero(), &qpoly(&[1, 1])).is_err());
}
