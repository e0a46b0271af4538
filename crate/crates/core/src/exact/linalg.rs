//! Exact linear algebra: row reduction over any field, and nullspaces over Q by
//! multi-modular elimination, rational reconstruction and exact verification.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::field::Field;
use super::rat::{inv_mod_u64, rational_reconstruct, Rat};
use crate::error::{Error, Result};

/// In-place reduced row echelon form; returns pivot columns.
pub fn rref<F: Field>(m: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for c in col..ncols {
            m[row][c] = m[row][c].mul(&inv);
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let t = f.mul(&m[row][c]);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn basis_from_rref<F: Field>(m: &[Vec<F>], pivots: &[usize], ncols: usize) -> Vec<Vec<F>> {
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = m[i][free].neg();
        }
        out.push(v);
    }
    out
}

/// Basis of the right nullspace {v : rows * v = 0}, one vector per free column.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    basis_from_rref(&m, &pivots, ncols)
}

pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Primes just below 2^62 used for modular elimination.
pub const PRIMES: [u64; 64] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
    4611686018427387701,
    4611686018427387631,
    4611686018427387617,
    4611686018427387587,
    4611686018427387461,
    4611686018427387421,
    4611686018427387409,
    4611686018427387329,
    4611686018427387323,
    4611686018427387301,
    4611686018427387271,
    4611686018427387241,
    4611686018427387139,
    4611686018427387131,
    4611686018427387127,
    4611686018427387113,
    4611686018427387091,
    4611686018427387073,
    4611686018427386981,
    4611686018427386923,
    4611686018427386911,
    4611686018427386903,
    4611686018427386897,
    4611686018427386887,
    4611686018427386707,
    4611686018427386663,
    4611686018427386611,
    4611686018427386551,
    4611686018427386471,
    4611686018427386389,
    4611686018427386351,
    4611686018427386329,
    4611686018427386323,
    4611686018427386309,
    4611686018427386287,
    4611686018427386231,
    4611686018427386207,
    4611686018427386203,
    4611686018427386201,
    4611686018427386081,
    4611686018427386023,
    4611686018427385993,
    4611686018427385981,
    4611686018427385861,
    4611686018427385831,
    4611686018427385801,
    4611686018427385763,
    4611686018427385717,
    4611686018427385687,
    4611686018427385657,
    4611686018427385619,
    4611686018427385553,
    4611686018427385537,
    4611686018427385529,
    4611686018427385507,
    4611686018427385483,
];

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn reduce_row(row: &[Rat], p: u64) -> Option<Vec<u64>> {
    let bp = BigInt::from(p);
    row.iter()
        .map(|x| {
            let n = x.numer().mod_floor(&bp).to_u64()?;
            let d = x.denom().mod_floor(&bp).to_u64()?;
            Some(mulm(n, inv_mod_u64(d, p)?, p))
        })
        .collect()
}

fn rref_mod(m: &mut [Vec<u64>], ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(piv) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, piv);
        let inv = inv_mod_u64(m[row][col], p).expect("prime modulus");
        for c in col..ncols {
            m[row][c] = mulm(m[row][c], inv, p);
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && other[col] != 0 {
                let f = other[col];
                for c in col..ncols {
                    let t = mulm(f, pivot_row[c], p);
                    other[c] = if other[c] >= t { other[c] - t } else { other[c] + p - t };
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank and canonical nullspace basis modulo p (entries in [0, p)).
fn nullspace_mod(rows: &[Vec<Rat>], ncols: usize, p: u64) -> Option<(Vec<usize>, Vec<Vec<u64>>)> {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| reduce_row(r, p)).collect::<Option<_>>()?;
    let pivots = rref_mod(&mut m, ncols, p);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[i][free]) % p;
        }
        basis.push(v);
    }
    Some((pivots, basis))
}

/// Rank of the system modulo a prime (a lower bound for the rank over Q).
pub fn rank_mod(rows: &[Vec<Rat>], ncols: usize, p: u64) -> Option<usize> {
    nullspace_mod(rows, ncols, p).map(|(piv, _)| piv.len())
}

fn dot_is_zero(row: &[Rat], v: &[Rat]) -> bool {
    let mut acc = <Rat as Zero>::zero();
    for (a, b) in row.iter().zip(v) {
        if !Zero::is_zero(a) && !Zero::is_zero(b) {
            acc += a * b;
        }
    }
    Zero::is_zero(&acc)
}

/// Nullspace over Q, in the canonical reduced basis (one vector per free column).
///
/// The basis is computed modulo several primes, combined by CRT, lifted by rational
/// reconstruction and then checked exactly against every row. Since the nullity over Q never
/// exceeds the nullity modulo p, an exactly verified basis of the modular size is complete.
pub fn rational_nullspace(rows: &[Vec<Rat>], ncols: usize) -> Result<Vec<Vec<Rat>>> {
    if rows.is_empty() {
        return Ok(nullspace::<Rat>(&[], ncols));
    }
    let mut best: Option<(Vec<usize>, Vec<Vec<BigInt>>, BigInt)> = None;
    for &p in PRIMES.iter() {
        let Some((pivots, basis)) = nullspace_mod(rows, ncols, p) else {
            continue;
        };
        let bp = BigInt::from(p);
        let replace = match &best {
            None => true,
            Some((bpiv, _, _)) => pivots.len() > bpiv.len() || (pivots.len() == bpiv.len() && pivots < *bpiv),
        };
        let same = best.as_ref().is_some_and(|(bpiv, _, _)| *bpiv == pivots);
        if replace && !same {
            let vals = basis.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
            best = Some((pivots, vals, bp));
        } else if same {
            let (_, vals, modulus) = best.as_mut().expect("set");
            let inv = modulus.modinv(&bp).expect("coprime moduli");
            let new_mod = &*modulus * &bp;
            for (vrow, nrow) in vals.iter_mut().zip(&basis) {
                for (a, &b) in vrow.iter_mut().zip(nrow) {
                    // a' = a + m * ((b - a) * m^-1 mod p)
                    let diff = (BigInt::from(b) - &*a).mod_floor(&bp);
                    let k = (diff * &inv).mod_floor(&bp);
                    *a = (&*a + &*modulus * k).mod_floor(&new_mod);
                }
            }
            *modulus = new_mod;
        } else {
            continue;
        }
        let (_, vals, modulus) = best.as_ref().expect("set");
        let cand: Option<Vec<Vec<Rat>>> = vals
            .iter()
            .map(|v| v.iter().map(|a| rational_reconstruct(a, modulus)).collect())
            .collect();
        if let Some(cand) = cand {
            if cand.iter().all(|v| rows.iter().all(|r| dot_is_zero(r, v))) {
                return Ok(cand);
            }
        }
    }
    Err(Error::Inconsistent("modular nullspace did not stabilize".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, rat_int};

    #[test]
    fn small_nullspace_agrees() {
        let rows = vec![
            vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4)],
            vec![rat(1, 2), rat_int(-1), rat_int(0), rat(7, 3)],
        ];
        let exact = nullspace(&rows, 4);
        let modular = rational_nullspace(&rows, 4).unwrap();
        assert_eq!(exact, modular);
        assert_eq!(exact.len(), 2);
    }

    #[test]
    fn large_entries() {
        let big = Rat::from_integer(BigInt::from(10).pow(40u32));
        let rows = vec![vec![big.clone(), rat_int(-3), rat(1, 7)], vec![rat_int(1), big, rat_int(0)]];
        let ns = rational_nullspace(&rows, 3).unwrap();
        assert_eq!(ns, nullspace(&rows, 3));
    }
}
