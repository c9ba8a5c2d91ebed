#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use toricount::intlin::{
    coordinates_in_sublattice, hermite_normal_form, rank, saturate, smith_normal_form,
};
use toricount::{IntMatrix, LatticeVector};

pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64) -> IntMatrix {
    let r = rng.random_range(1..=max_dim);
    let c = rng.random_range(1..=max_dim);
    let rows: Vec<Vec<BigInt>> = (0..r)
        .map(|_| {
            (0..c)
                .map(|_| {
                    // sparse-ish so that rank drops show up
                    if rng.random_bool(0.3) {
                        BigInt::zero()
                    } else {
                        BigInt::from(rng.random_range(-bound..=bound))
                    }
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows, c)
}

fn is_unimodular(u: &IntMatrix) -> bool {
    u.rows() == u.cols() && u.determinant().abs().is_one()
}

pub fn check_hnf(m: &IntMatrix) -> Result<(), String> {
    let (h, u) = hermite_normal_form(m);
    if !is_unimodular(&u) {
        return Err(format!("HNF transform of {m} is not unimodular"));
    }
    if u.mul(m) != h {
        return Err(format!("u * m != h for {m}"));
    }
    let mut last_pivot: Option<usize> = None;
    let mut zero_seen = false;
    for i in 0..h.rows() {
        let row = h.row(i);
        match row.iter().position(|x| !x.is_zero()) {
            None => zero_seen = true,
            Some(p) => {
                if zero_seen {
                    return Err(format!("nonzero row after a zero row in {h}"));
                }
                if last_pivot.is_some_and(|q| q >= p) {
                    return Err(format!("pivots not increasing in {h}"));
                }
                if !row[p].is_positive() {
                    return Err(format!("nonpositive pivot in {h}"));
                }
                for k in 0..i {
                    let e = &h[(k, p)];
                    if e.is_negative() || e >= &row[p] {
                        return Err(format!("entry above pivot not reduced in {h}"));
                    }
                }
                last_pivot = Some(p);
            }
        }
    }
    if (0..h.rows())
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .count()
        != m.rank()
    {
        return Err(format!("HNF rank differs from rank of {m}"));
    }
    Ok(())
}

pub fn check_snf(m: &IntMatrix) -> Result<(), String> {
    let (d, u, v) = smith_normal_form(m);
    if !is_unimodular(&u) || !is_unimodular(&v) {
        return Err(format!("SNF transforms of {m} are not unimodular"));
    }
    if u.mul(m).mul(&v) != d {
        return Err(format!("u * m * v != d for {m}"));
    }
    if !d.is_diagonal() {
        return Err(format!("SNF of {m} is not diagonal"));
    }
    let diag: Vec<BigInt> = (0..d.rows().min(d.cols()))
        .map(|i| d[(i, i)].clone())
        .collect();
    if diag.iter().any(Signed::is_negative) {
        return Err(format!("negative invariant factor for {m}"));
    }
    for w in diag.windows(2) {
        let divides = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (&w[1] % &w[0]).is_zero()
        };
        if !divides {
            return Err(format!("divisibility chain broken for {m}: {diag:?}"));
        }
    }
    if diag.iter().filter(|x| !x.is_zero()).count() != m.rank() {
        return Err(format!("SNF rank differs from rank of {m}"));
    }
    Ok(())
}

pub fn check_saturation(m: &IntMatrix) -> Result<(), String> {
    let n = m.cols();
    let gens: Vec<LatticeVector> = m.to_rows().into_iter().map(LatticeVector::new).collect();
    let basis = saturate(&gens, n).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<BigInt>> = basis.iter().map(|b| b.coords().to_vec()).collect();
    if basis.len() != m.rank() || rank(&rows) != basis.len() {
        return Err(format!("saturation of {m} has the wrong rank"));
    }
    for g in &gens {
        coordinates_in_sublattice(g, &basis).map_err(|e| format!("{g} lost by saturation: {e}"))?;
    }
    if !basis.is_empty() {
        let (d, _, _) = smith_normal_form(&IntMatrix::from_rows(rows, n));
        if (0..basis.len()).any(|i| !d[(i, i)].is_one()) {
            return Err(format!("saturation of {m} is not saturated"));
        }
    }
    if saturate(&basis, n).map_err(|e| e.to_string())? != basis {
        return Err(format!("saturation of {m} is not idempotent"));
    }
    Ok(())
}
