//! Independent mixed-volume route: sample `Vol_L(l_1 P_1 + ... + l_n P_n)` on
//! the grid `{1..n+1}^n`, fit the homogeneous degree-`n` polynomial exactly
//! and read off the coefficient of `l_1 ... l_n`, which is `n!` times the
//! mixed volume.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{check_family, factorial, lattice_volume, minkowski_sum, LatticeVolume, PointSet};
use crate::error::{Error, Result};

/// Exponent vectors of all monomials of total degree `n` in `n` variables.
fn monomials(n: usize) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n as u32, &mut vec![0; n], &mut out);
    out
}

fn grid(n: usize) -> Vec<Vec<u64>> {
    let side = n as u64 + 1;
    let total = (side as usize).pow(n as u32);
    (0..total)
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let d = (k % side as usize) as u64 + 1;
                    k /= side as usize;
                    d
                })
                .collect()
        })
        .collect()
}

/// Solves the consistent (possibly overdetermined) system by exact
/// Gauss-Jordan elimination. `None` if it is inconsistent or underdetermined.
fn solve_exact(mut rows: Vec<Vec<BigRational>>, unknowns: usize) -> Option<Vec<BigRational>> {
    let mut r = 0;
    let mut pivots = Vec::with_capacity(unknowns);
    for col in 0..unknowns {
        let p = (r..rows.len()).find(|&i| !rows[i][col].is_zero())?;
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            let pivot = rows[r][col..=unknowns].to_vec();
            for (x, p) in rows[i][col..=unknowns].iter_mut().zip(&pivot) {
                *x -= p * &f;
            }
        }
        pivots.push(r);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&i| rows[i][unknowns].clone()).collect())
}

pub fn mixed_volume_oracle(sets: &[PointSet]) -> Result<LatticeVolume> {
    let n = check_family(sets)?;
    if n == 0 {
        return Ok(LatticeVolume(BigInt::one()));
    }
    let monos = monomials(n);
    let target = monos
        .iter()
        .position(|e| e.iter().all(|&x| x == 1))
        .expect("squarefree monomial is present");
    let mut system = Vec::new();
    for lambda in grid(n) {
        let mut sum = sets[0].dilate(&BigInt::from(lambda[0]));
        for (s, &l) in sets.iter().zip(&lambda).skip(1) {
            sum = minkowski_sum(&sum, &s.dilate(&BigInt::from(l)))?;
        }
        let vol = lattice_volume(&sum)?.into_inner();
        let mut row: Vec<BigRational> = monos
            .iter()
            .map(|e| {
                let v = e.iter().zip(&lambda).fold(BigInt::one(), |acc, (&ex, &l)| {
                    acc * BigInt::from(l).pow(ex)
                });
                BigRational::from_integer(v)
            })
            .collect();
        row.push(BigRational::from_integer(vol));
        system.push(row);
    }
    let coeffs = solve_exact(system, monos.len())
        .ok_or_else(|| Error::Internal("volume samples do not fit a degree-n form".into()))?;
    let c = &coeffs[target];
    if !c.is_integer() {
        return Err(Error::Internal(format!("non-integral coefficient {c}")));
    }
    let (q, r) = c.to_integer().div_rem(&factorial(n));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Internal(format!(
            "coefficient {c} is not a nonnegative multiple of {n}!"
        )));
    }
    Ok(LatticeVolume(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_count() {
        // C(2n-1, n)
        assert_eq!(monomials(1).len(), 1);
        assert_eq!(monomials(2).len(), 3);
        assert_eq!(monomials(3).len(), 10);
        assert_eq!(grid(2).len(), 9);
    }

    #[test]
    fn oracle_examples() {
        let d = PointSet::from_i64s(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(
            mixed_volume_oracle(&[d.clone(), d]).unwrap(),
            LatticeVolume::from(1)
        );
        let s1 = PointSet::from_i64s(2, &[&[0, 0], &[1, 0]]);
        let s2 = PointSet::from_i64s(2, &[&[0, 0], &[0, 1]]);
        assert_eq!(
            mixed_volume_oracle(&[s1, s2]).unwrap(),
            LatticeVolume::from(1)
        );
        let r1 = PointSet::from_i64s(2, &[&[0, 0], &[2, 0]]);
        let r2 = PointSet::from_i64s(2, &[&[0, 0], &[0, 3]]);
        assert_eq!(
            mixed_volume_oracle(&[r1, r2]).unwrap(),
            LatticeVolume::from(6)
        );
    }
}
