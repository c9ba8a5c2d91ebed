//! Exact linear algebra over the integers.
//!
//! Everything here works on arbitrary-precision integers. Bases returned by
//! [`saturate`] and [`orthogonal_complement_basis`] are in row Hermite normal
//! form, so two equal sublattices always come back as identical tuples.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Common surface of [`LatticeVector`] and [`Covector`]: an integer tuple.
pub trait IntTuple: Clone + Ord {
    fn coords(&self) -> &[BigInt];
    fn from_coords(coords: Vec<BigInt>) -> Self;

    fn rank(&self) -> usize {
        self.coords().len()
    }

    fn is_zero(&self) -> bool {
        self.coords().iter().all(Zero::is_zero)
    }
}

macro_rules! int_tuple {
    ($name:ident) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(Vec<BigInt>);

        impl $name {
            pub fn new(coords: Vec<BigInt>) -> Self {
                Self(coords)
            }

            pub fn from_i64s(coords: &[i64]) -> Self {
                Self(coords.iter().map(|&c| BigInt::from(c)).collect())
            }

            pub fn zero(rank: usize) -> Self {
                Self(vec![BigInt::zero(); rank])
            }

            /// The `i`-th standard basis element.
            pub fn unit(rank: usize, i: usize) -> Self {
                let mut v = Self::zero(rank);
                v.0[i] = BigInt::one();
                v
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[BigInt] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<BigInt> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }

            pub fn scale(&self, k: &BigInt) -> Self {
                Self(self.0.iter().map(|c| c * k).collect())
            }

            /// gcd of the coordinates (0 for the zero vector).
            pub fn content(&self) -> BigInt {
                content(&self.0)
            }

            /// Divides out the content. The zero vector is returned unchanged.
            pub fn primitive(&self) -> Self {
                let g = self.content();
                if g.is_zero() || g.is_one() {
                    return self.clone();
                }
                Self(self.0.iter().map(|c| c / &g).collect())
            }
        }

        impl IntTuple for $name {
            fn coords(&self) -> &[BigInt] {
                &self.0
            }
            fn from_coords(coords: Vec<BigInt>) -> Self {
                Self(coords)
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.rank(), rhs.rank());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                debug_assert_eq!(self.rank(), rhs.rank());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

int_tuple!(LatticeVector);
int_tuple!(Covector);

impl Covector {
    /// The canonical pairing `<self, v>` between M and N.
    pub fn pair(&self, v: &LatticeVector) -> BigInt {
        debug_assert_eq!(self.rank(), v.rank());
        dot(&self.0, &v.0)
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            entries.extend(r);
        }
        Self {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        bareiss_determinant(self.to_rows())
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_rows())
    }

    /// Inverse of a unimodular matrix, `None` if `|det| != 1`.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let (h, u) = hermite_normal_form(self);
        (h == IntMatrix::identity(self.rows)).then_some(u)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = &self.entries[src * self.cols + j] * q;
            self.entries[dst * self.cols + j] -= t;
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = &self.entries[i * self.cols + src] * q;
            self.entries[i * self.cols + dst] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let t = self.entries[src * self.cols + j].clone();
            self.entries[dst * self.cols + j] += t;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, c) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Row-style Hermite normal form: returns `(h, u)` with `u` unimodular and
/// `u * m = h`. `h` is in row echelon form with positive pivots, every entry
/// above a pivot reduced into `[0, pivot)`, and zero rows at the bottom.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut p = 0;
    for col in 0..m.cols {
        if p == m.rows {
            break;
        }
        loop {
            let best = (p..m.rows)
                .filter(|&r| !h[(r, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let Some(r) = best else { break };
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut done = true;
            for i in p + 1..m.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&h[(p, col)]);
                h.sub_row(i, p, &q);
                u.sub_row(i, p, &q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(p, col)].is_zero() {
            continue;
        }
        if h[(p, col)].is_negative() {
            h.negate_row(p);
            u.negate_row(p);
        }
        for i in 0..p {
            let q = h[(i, col)].div_floor(&h[(p, col)]);
            h.sub_row(i, p, &q);
            u.sub_row(i, p, &q);
        }
        p += 1;
    }
    (h, u)
}

/// Smith normal form: `(d, u, v)` with `u`, `v` unimodular, `u * m * v = d`,
/// `d` diagonal with nonnegative entries and `d_1 | d_2 | ...`.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_smith(d, u, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                d.sub_row(i, t, &q);
                u.sub_row(i, t, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                d.sub_col(j, t, &q);
                v.sub_col(j, t, &q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold any offending row into the pivot row
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
            match offending {
                Some(i) => {
                    d.add_row(t, i);
                    u.add_row(t, i);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish_smith(d, u, v)
}

fn finish_smith(
    mut d: IntMatrix,
    mut u: IntMatrix,
    v: IntMatrix,
) -> (IntMatrix, IntMatrix, IntMatrix) {
    for t in 0..d.rows.min(d.cols) {
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (d, u, v)
}

/// Fraction-free (Bareiss) determinant.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank of a list of equal-length integer rows, by fraction-free elimination.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let cols = first.len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][col].is_zero() {
                continue;
            }
            let (f, g) = (a[r][col].clone(), a[i][col].clone());
            let pivot = a[r][col..cols].to_vec();
            for (x, p) in a[i][col..cols].iter_mut().zip(&pivot) {
                *x = &*x * &f - p * &g;
            }
            let c = content(&a[i][col..]);
            if !c.is_zero() && !c.is_one() {
                for x in &mut a[i][col..] {
                    *x /= &c;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Basis of `{x in Z^n : <row, x> = 0 for every row}`, in canonical HNF.
pub(crate) fn kernel_rows(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    // x is in the kernel iff x * G^T = 0; read it off the HNF transform of G^T
    let gt = IntMatrix::from_rows(rows.to_vec(), n).transpose();
    let (h, u) = hermite_normal_form(&gt);
    let kernel: Vec<Vec<BigInt>> = (0..n)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .map(|i| u.row(i).to_vec())
        .collect();
    canonical_basis(kernel, n)
}

/// HNF of the given rows with zero rows dropped.
pub(crate) fn canonical_basis(rows: Vec<Vec<BigInt>>, n: usize) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let (h, _) = hermite_normal_form(&IntMatrix::from_rows(rows, n));
    h.to_rows()
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect()
}

fn shared_rank<T: IntTuple>(items: &[T], rank: usize) -> Result<()> {
    match items.iter().find(|v| v.rank() != rank) {
        Some(v) => Err(Error::RankMismatch {
            expected: rank,
            got: v.rank(),
        }),
        None => Ok(()),
    }
}

/// Basis of the smallest saturated sublattice containing `generators`, i.e.
/// `span_R(generators) ∩ Z^n`.
pub fn saturate(generators: &[LatticeVector], rank: usize) -> Result<Vec<LatticeVector>> {
    shared_rank(generators, rank)?;
    Ok(saturate_rows(
        &generators
            .iter()
            .map(|g| g.coords().to_vec())
            .collect::<Vec<_>>(),
        rank,
    )
    .into_iter()
    .map(LatticeVector::new)
    .collect())
}

pub(crate) fn saturate_rows(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    kernel_rows(&kernel_rows(rows, n), n)
}

/// Basis of `{m in M : <m, v> = 0 for all inputs}`.
pub fn orthogonal_complement_basis(
    vectors: &[LatticeVector],
    rank: usize,
) -> Result<Vec<Covector>> {
    shared_rank(vectors, rank)?;
    let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    Ok(kernel_rows(&rows, rank)
        .into_iter()
        .map(Covector::new)
        .collect())
}

/// Dual direction: the lattice vectors annihilated by all given covectors.
pub fn annihilator_basis(covectors: &[Covector], rank: usize) -> Result<Vec<LatticeVector>> {
    shared_rank(covectors, rank)?;
    let rows: Vec<Vec<BigInt>> = covectors.iter().map(|v| v.coords().to_vec()).collect();
    Ok(kernel_rows(&rows, rank)
        .into_iter()
        .map(LatticeVector::new)
        .collect())
}

/// Integer coordinates of `v` with respect to `basis`.
pub fn coordinates_in_sublattice<T: IntTuple>(v: &T, basis: &[T]) -> Result<Vec<BigInt>> {
    let not_in = || Error::NotInSublattice {
        vector: format!("{:?}", v.coords()),
    };
    let n = v.rank();
    shared_rank(basis, n)?;
    if basis.is_empty() {
        return if v.is_zero() {
            Ok(Vec::new())
        } else {
            Err(not_in())
        };
    }
    let b = IntMatrix::from_rows(basis.iter().map(|x| x.coords().to_vec()).collect(), n);
    let (h, u) = hermite_normal_form(&b);
    let mut residual: Vec<BigInt> = v.coords().to_vec();
    let mut y = vec![BigInt::zero(); basis.len()];
    for (i, yi) in y.iter_mut().enumerate() {
        let row = h.row(i);
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            return Err(Error::Internal("basis is not linearly independent".into()));
        };
        let (q, r) = residual[pc].div_rem(&row[pc]);
        if !r.is_zero() {
            return Err(not_in());
        }
        for (res, hx) in residual.iter_mut().zip(row) {
            *res -= &q * hx;
        }
        *yi = q;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return Err(not_in());
    }
    // x = y * u
    let x: Vec<BigInt> = (0..basis.len())
        .map(|j| (0..basis.len()).map(|i| &y[i] * &u[(i, j)]).sum())
        .collect();
    Ok(x)
}

/// Solves `r * m = b` for an integer covector `m` (rows of `r` are lattice
/// vectors). Free directions are set to zero, so the answer is deterministic.
pub fn solve_integral(r: &[Vec<BigInt>], b: &[BigInt], n: usize) -> Option<Vec<BigInt>> {
    if r.is_empty() {
        return Some(vec![BigInt::zero(); n]);
    }
    let a = IntMatrix::from_rows(r.to_vec(), n);
    let (d, u, v) = smith_normal_form(&a);
    let ub = u.apply(b);
    let mut y = vec![BigInt::zero(); n];
    for (i, ubi) in ub.iter().enumerate() {
        let di = if i < n {
            d[(i, i)].clone()
        } else {
            BigInt::zero()
        };
        if di.is_zero() {
            if !ubi.is_zero() {
                return None;
            }
            continue;
        }
        let (q, rem) = ubi.div_rem(&di);
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
    }
    Some(v.apply(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    fn cv(c: &[i64]) -> Covector {
        Covector::from_i64s(c)
    }

    #[test]
    fn hnf_identity() {
        let (h, u) = hermite_normal_form(&IntMatrix::identity(2));
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_small() {
        let a = m(&[&[2, 4], &[6, 8]]);
        let (h, u) = hermite_normal_form(&a);
        // [[2,4],[0,4]] reduced above the second pivot
        assert_eq!(h, m(&[&[2, 0], &[0, 4]]));
        assert_eq!(u.mul(&a), h);
        assert_eq!(u.determinant().abs(), BigInt::one());
    }

    #[test]
    fn hnf_zero() {
        let z = IntMatrix::zero(2, 3);
        let (h, u) = hermite_normal_form(&z);
        assert!(h.is_zero());
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn snf_examples() {
        let (d, u, v) = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(d, IntMatrix::identity(3));
        assert_eq!(u.mul(&v), IntMatrix::identity(3));

        let a = m(&[&[2, 4], &[6, 8]]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(d, m(&[&[2, 0], &[0, 4]]));
        assert_eq!(u.mul(&a).mul(&v), d);

        let a = m(&[&[1, 1]]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(d, m(&[&[1, 0]]));
        assert_eq!(u.mul(&a).mul(&v), d);
    }

    #[test]
    fn saturate_examples() {
        assert_eq!(saturate(&[lv(&[2, 0])], 2).unwrap(), vec![lv(&[1, 0])]);
        assert_eq!(saturate(&[lv(&[1, 1])], 2).unwrap(), vec![lv(&[1, 1])]);
        assert!(saturate(&[], 2).unwrap().is_empty());
        assert!(saturate(&[lv(&[1]), lv(&[1, 0])], 2).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            orthogonal_complement_basis(&[lv(&[1, 0])], 2).unwrap(),
            vec![cv(&[0, 1])]
        );
        assert_eq!(
            orthogonal_complement_basis(&[], 2).unwrap(),
            vec![cv(&[1, 0]), cv(&[0, 1])]
        );
        let c = orthogonal_complement_basis(&[lv(&[1, 1])], 2).unwrap();
        assert_eq!(c, vec![cv(&[1, -1])]);
    }

    #[test]
    fn coordinate_examples() {
        let e2 = cv(&[0, 1]);
        assert_eq!(
            coordinates_in_sublattice(&e2, std::slice::from_ref(&e2)).unwrap(),
            vec![BigInt::from(1)]
        );
        assert_eq!(
            coordinates_in_sublattice(&cv(&[2, -2]), &[cv(&[1, -1])]).unwrap(),
            vec![BigInt::from(2)]
        );
        assert!(matches!(
            coordinates_in_sublattice(&cv(&[1, 0]), &[e2]),
            Err(Error::NotInSublattice { .. })
        ));
        // inside the span but not the sublattice
        assert!(coordinates_in_sublattice(&cv(&[1, 0]), &[cv(&[2, 0])]).is_err());
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let a = m(&[&[0, 2, 1], &[3, -1, 4], &[5, 0, -2]]);
        // first-row cofactors: -2 * (-26) + 1 * 5
        assert_eq!(a.determinant(), BigInt::from(57));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), BigInt::zero());
    }

    #[test]
    fn rank_and_inverse() {
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]).rank(), 2);
        let g = m(&[&[2, 1], &[1, 1]]);
        let gi = g.inverse_unimodular().unwrap();
        assert_eq!(g.mul(&gi), IntMatrix::identity(2));
        assert!(m(&[&[2, 0], &[0, 1]]).inverse_unimodular().is_none());
    }

    #[test]
    fn solve_integral_cases() {
        let rows = vec![vec![BigInt::from(1), BigInt::from(1)]];
        let sol = solve_integral(&rows, &[BigInt::from(3)], 2).unwrap();
        assert_eq!(dot(&rows[0], &sol), BigInt::from(3));
        let rows = vec![vec![BigInt::from(2), BigInt::from(0)]];
        assert!(solve_integral(&rows, &[BigInt::from(1)], 2).is_none());
    }
}
