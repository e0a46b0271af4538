//! Frobenius traces, mod-9 fingerprints against G', and the subgroup lattice of GL2(F3).

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{conductor, local_data, BInv, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::exact::rat::primes_up_to;
use crate::modgroup::{closure, gl2, MatMod, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    pub p: u64,
    pub ap: i64,
}

fn reduce(a: &[BigInt; 5], p: u64) -> [u64; 5] {
    let bp = BigInt::from(p);
    a.clone().map(|c| c.mod_floor(&bp).to_u64().expect("reduced"))
}

/// a_p = p + 1 - #E(F_p) on a model with good reduction at p.
fn trace_on_model(a: &[BigInt; 5], p: u64) -> i64 {
    if p == 2 {
        let [a1, a2, a3, a4, a6] = reduce(a, p);
        let mut count = 1i64;
        for x in 0..2 {
            for y in 0..2 {
                let l = y * y + a1 * x * y + a3 * y;
                let r = x * x * x + a2 * x * x + a4 * x + a6;
                if (l + r) % 2 == 0 {
                    count += 1;
                }
            }
        }
        return 3 - count;
    }
    let b = BInv::<BigInt>::new(a);
    let [b2, b4, b6] = [&b.b2, &b.b4, &b.b6].map(|c| c.mod_floor(&BigInt::from(p)).to_u64().expect("reduced"));
    let pu = p as usize;
    let mut square = alloc::vec![-1i64; pu];
    square[0] = 0;
    for y in 1..p {
        square[((y * y) % p) as usize] = 1;
    }
    let pp = p as u128;
    let mut sum = 0i64;
    for x in 0..p {
        let xx = x as u128;
        let g = (4 * xx * xx % pp * xx + b2 as u128 * xx % pp * xx + 2 * b4 as u128 * xx + b6 as u128) % pp;
        sum += square[g as usize];
    }
    -sum
}

/// Frobenius trace at a prime of good reduction (the model may be non-minimal at p).
pub fn ap(e: &WeierstrassCurve, p: u64) -> Result<FrobeniusData> {
    let l = local_data(e, p)?;
    if l.conductor_exponent > 0 {
        return Err(Error::BadReduction(p));
    }
    Ok(FrobeniusData { p, ap: trace_on_model(&l.minimal, p) })
}

/// The (trace, det) pairs realized by a matrix group.
pub fn gprime_fingerprints(g: &Subgroup) -> BTreeSet<(u8, u8)> {
    g.elements.iter().map(|m| (m.trace(), m.det())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FrobeniusReport {
    pub checked: Vec<FrobeniusData>,
    /// Primes whose (a_p, p) mod 9 is not realized in the group.
    pub failures: Vec<FrobeniusData>,
    /// (a_p, p) mod 3 over the checked primes.
    pub fingerprints_mod3: BTreeSet<(u8, u8)>,
}

impl FrobeniusReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Sweep the good primes p < pmax with p != 3 (det must be a unit mod 9).
pub fn frobenius_mod9_check(e: &WeierstrassCurve, g: &Subgroup, pmax: u64) -> Result<FrobeniusReport> {
    let mut report = FrobeniusReport::default();
    if pmax <= 5 {
        return Ok(report);
    }
    let bad: BTreeSet<u64> = conductor(e)?.factorization().into_iter().map(|(p, _)| p).collect();
    let prints = gprime_fingerprints(g);
    let a = e.integral_coeffs()?;
    let disc = BInv::<BigInt>::new(&a).discriminant();
    for p in primes_up_to(pmax - 1) {
        if p == 3 || bad.contains(&p) {
            continue;
        }
        let fd = if (&disc % BigInt::from(p)).is_zero() { ap(e, p)? } else { FrobeniusData { p, ap: trace_on_model(&a, p) } };
        let t9 = fd.ap.rem_euclid(9) as u8;
        if !prints.contains(&(t9, (p % 9) as u8)) {
            report.failures.push(fd);
        }
        report.fingerprints_mod3.insert((fd.ap.rem_euclid(3) as u8, (p % 3) as u8));
        report.checked.push(fd);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gl2F3Report {
    pub group_order: usize,
    pub sl2_index: usize,
    pub subgroups: usize,
    pub conjugacy_classes: usize,
    /// Subgroups with surjective determinant.
    pub surjective_det: usize,
    /// Among those: proper iff the image of H & SL2 in PSL2(F3) lies in the Klein group or in a
    /// subgroup of order 3.
    pub criterion_holds: bool,
    /// Counterexamples to the literal reading, where containment would characterize surjectivity.
    pub literal_reading_failures: usize,
}

fn all_subgroups(elements: &[MatMod]) -> Result<BTreeSet<BTreeSet<MatMod>>> {
    let mut found: BTreeSet<BTreeSet<MatMod>> = BTreeSet::new();
    let mut frontier: Vec<Vec<MatMod>> = alloc::vec![Vec::new()];
    found.insert(BTreeSet::from([MatMod::identity(3)]));
    while let Some(gens) = frontier.pop() {
        let current = closure(3, &gens)?.elements;
        for g in elements {
            if current.contains(g) {
                continue;
            }
            let mut next = gens.clone();
            next.push(*g);
            let h = closure(3, &next)?.elements;
            if found.insert(h) {
                frontier.push(next);
            }
        }
    }
    Ok(found)
}

/// Enumerate the subgroups of GL2(F3) and test the mod-3 surjectivity criterion on each.
pub fn classify_gl2_f3() -> Result<Gl2F3Report> {
    let g = gl2(3);
    let subs = all_subgroups(&g)?;
    let proj = |m: &MatMod| m.proj();
    // The Klein group: images of the elements of order 4 in SL2(F3), plus the identity.
    let klein: BTreeSet<MatMod> =
        g.iter().filter(|m| m.det() == 1 && m.order() == 4).map(proj).chain([MatMod::identity(3).proj()]).collect();
    let threes: Vec<BTreeSet<MatMod>> = g
        .iter()
        .filter(|m| m.det() == 1 && m.proj_order() == 3)
        .map(|m| (0..3).map(|k| m.pow(k).proj()).collect())
        .collect();
    let mut classes: BTreeSet<BTreeSet<MatMod>> = BTreeSet::new();
    for h in &subs {
        let canon = g
            .iter()
            .map(|x| h.iter().map(|m| m.conjugate_by(x)).collect::<BTreeSet<_>>())
            .min()
            .expect("nonempty");
        classes.insert(canon);
    }
    let mut surjective_det = 0;
    let mut holds = true;
    let mut literal_failures = 0;
    for h in &subs {
        let dets: BTreeSet<u8> = h.iter().map(|m| m.det()).collect();
        if dets.len() != 2 {
            continue;
        }
        surjective_det += 1;
        let image: BTreeSet<MatMod> = h.iter().filter(|m| m.det() == 1).map(proj).collect();
        let small = image.is_subset(&klein) || threes.iter().any(|t| image.is_subset(t));
        let proper = h.len() < g.len();
        holds &= proper == small;
        if (!proper) != small {
            literal_failures += 1;
        }
    }
    Ok(Gl2F3Report {
        group_order: g.len(),
        sl2_index: g.len() / g.iter().filter(|m| m.det() == 1).count(),
        subgroups: subs.len(),
        conjugacy_classes: classes.len(),
        surjective_det,
        criterion_holds: holds,
        literal_reading_failures: literal_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgroup::{extend_to_gprime, group_g};

    fn e(a: [i64; 5]) -> WeierstrassCurve {
        WeierstrassCurve::from_ints(a).unwrap()
    }

    /// Direct count over all (x, y) in F_p^2.
    fn brute_ap(a: [i64; 5], p: i64) -> i64 {
        let [a1, a2, a3, a4, a6] = a;
        let mut n = 1;
        for x in 0..p {
            for y in 0..p {
                let v = y * y + a1 * x * y + a3 * y - x * x * x - a2 * x * x - a4 * x - a6;
                if v.rem_euclid(p) == 0 {
                    n += 1;
                }
            }
        }
        p + 1 - n
    }

    #[test]
    fn ap_examples() {
        assert_eq!(ap(&e([0, 0, 0, -27, -42]), 5).unwrap().ap, 1);
        assert_eq!(ap(&e([0, 0, 1, 0, 0]), 7).unwrap().ap, -1);
        assert_eq!(ap(&e([0, 0, 0, -27, -42]), 3), Err(Error::BadReduction(3)));
    }

    #[test]
    fn ap_matches_brute_force() {
        for a in [[0, 0, 0, -27, -42], [1, -1, 1, -3, 2], [0, -1, 1, -10, -20]] {
            let bad: Vec<u64> = conductor(&e(a)).unwrap().factorization().iter().map(|x| x.0).collect();
            for p in primes_up_to(60) {
                if bad.contains(&p) {
                    continue;
                }
                let got = ap(&e(a), p).unwrap().ap;
                assert_eq!(got, brute_ap(a, p as i64), "{a:?} at {p}");
                assert!(got * got <= 4 * p as i64);
            }
        }
    }

    #[test]
    fn eleven_a_traces() {
        // a_p of 11a1 for p = 2, 3, 5, 7, 13.
        let c = e([0, -1, 1, -10, -20]);
        let got: Vec<i64> = [2, 3, 5, 7, 13].iter().map(|&p| ap(&c, p).unwrap().ap).collect();
        assert_eq!(got, [-2, -1, 1, -2, 4]);
    }

    #[test]
    fn gl2_f3_lattice() {
        let r = classify_gl2_f3().unwrap();
        assert_eq!((r.group_order, r.sl2_index), (48, 2));
        assert_eq!(r.conjugacy_classes, 16);
        assert!(r.criterion_holds);
        assert!(r.literal_reading_failures > 0);
    }

    #[test]
    fn frobenius_sweep() {
        let gp = extend_to_gprime(&group_g()).unwrap().group;
        let r = frobenius_mod9_check(&e([0, 0, 0, -27, -42]), &gp, 1000).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.fingerprints_mod3.len(), 6);
        let control = frobenius_mod9_check(&e([0, 0, 0, 1, 1]), &gp, 100).unwrap();
        assert!(!control.all_pass());
        let empty = frobenius_mod9_check(&e([0, 0, 0, -27, -42]), &gp, 5).unwrap();
        assert!(empty.checked.is_empty() && empty.all_pass());
    }

    #[test]
    fn full_gl2_is_weaker() {
        let full = Subgroup { n: 9, gens: Vec::new(), elements: gl2(9).into_iter().collect() };
        let r = frobenius_mod9_check(&e([0, 0, 0, 1, 1]), &full, 100).unwrap();
        assert!(r.all_pass());
    }
}
