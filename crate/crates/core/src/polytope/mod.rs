//! Lattice polytopes given by finite point sets in M: affine dimension,
//! Minkowski sums, lattice volume and lattice mixed volume.
//!
//! Volumes are normalized so the unimodular simplex has volume 1 (that is,
//! `n!` times the Euclidean volume), which keeps every value an integer.

mod hull;
mod interpolation;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::{rank, Covector, IntMatrix};

pub use interpolation::mixed_volume_oracle;

/// A finite, deduplicated set of characters in a lattice of fixed rank.
/// Points are kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointSet {
    rank: usize,
    points: Vec<Covector>,
}

impl PointSet {
    pub fn new(rank: usize, points: impl IntoIterator<Item = Covector>) -> Result<Self> {
        let mut points: Vec<Covector> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.rank() != rank) {
            return Err(Error::RankMismatch {
                expected: rank,
                got: p.rank(),
            });
        }
        points.sort();
        points.dedup();
        Ok(Self { rank, points })
    }

    /// Panics on ragged input; meant for literals and tests.
    pub fn from_i64s(rank: usize, points: &[&[i64]]) -> Self {
        Self::new(rank, points.iter().map(|p| Covector::from_i64s(p)))
            .expect("points must match the stated rank")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn points(&self) -> &[Covector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Covector) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Lexicographically smallest point.
    pub fn min_point(&self) -> Option<&Covector> {
        self.points.first()
    }

    pub fn translate(&self, by: &Covector) -> PointSet {
        PointSet::new(self.rank, self.points.iter().map(|p| p + by)).expect("same rank")
    }

    /// Dilation `k * P` (as a point set).
    pub fn dilate(&self, k: &BigInt) -> PointSet {
        PointSet::new(self.rank, self.points.iter().map(|p| p.scale(k))).expect("same rank")
    }

    /// Applies `p -> p * g` (covectors as row vectors) to every point.
    pub fn transform(&self, g: &IntMatrix) -> PointSet {
        assert_eq!(g.rows(), self.rank);
        let gt = g.transpose();
        PointSet::new(
            g.cols(),
            self.points
                .iter()
                .map(|p| Covector::new(gt.apply(p.coords()))),
        )
        .expect("same rank")
    }

    /// The set translated so its lexicographically smallest point is 0.
    pub fn normalized(&self) -> PointSet {
        match self.min_point() {
            Some(m) => self.translate(&-m),
            None => self.clone(),
        }
    }

    /// `p - p0` for every point, with `p0` the smallest point.
    pub(crate) fn differences(&self) -> Vec<Vec<BigInt>> {
        let Some(base) = self.points.first() else {
            return Vec::new();
        };
        self.points[1..]
            .iter()
            .map(|p| (p - base).into_coords())
            .collect()
    }

    fn raw(&self) -> Vec<Vec<BigInt>> {
        self.points.iter().map(|p| p.coords().to_vec()).collect()
    }

    /// Drops points that are not needed to span the convex hull (interior
    /// points of a full-dimensional hull). Lower dimensional sets are
    /// returned unchanged.
    pub fn hull_reduced(&self) -> PointSet {
        if self.is_empty() || self.rank == 0 {
            return self.clone();
        }
        let raw = self.raw();
        match hull::triangulate(&raw, self.rank) {
            Some(t) => PointSet {
                rank: self.rank,
                points: t.boundary.iter().map(|&i| self.points[i].clone()).collect(),
            },
            None => self.clone(),
        }
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Lattice-normalized volume; always a nonnegative integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVolume(BigInt);

impl LatticeVolume {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn into_inner(self) -> BigInt {
        self.0
    }
}

impl From<u64> for LatticeVolume {
    fn from(v: u64) -> Self {
        Self(BigInt::from(v))
    }
}

impl fmt::Display for LatticeVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Dimension of the affine span.
pub fn affine_dim(s: &PointSet) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(rank(&s.differences()))
}

pub fn minkowski_sum(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if a.rank != b.rank {
        return Err(Error::RankMismatch {
            expected: a.rank,
            got: b.rank,
        });
    }
    PointSet::new(
        a.rank,
        a.points
            .iter()
            .flat_map(|p| b.points.iter().map(move |q| p + q)),
    )
}

/// `Vol_L(Conv s)` with respect to the full ambient lattice; zero for
/// lower-dimensional sets.
pub fn lattice_volume(s: &PointSet) -> Result<LatticeVolume> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(LatticeVolume(
        hull::triangulate(&s.raw(), s.rank).map_or_else(BigInt::zero, |t| t.volume),
    ))
}

fn check_family(sets: &[PointSet]) -> Result<usize> {
    let Some(first) = sets.first() else {
        return Ok(0);
    };
    let n = first.rank;
    if sets.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: sets.len(),
        });
    }
    for s in sets {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if s.rank != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: s.rank,
            });
        }
    }
    Ok(n)
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Lattice mixed volume of `n` point sets in rank `n`, by polarization:
/// `(1/n!) * sum over nonempty I of (-1)^(n-|I|) Vol_L(sum_{i in I} P_i)`.
/// The empty family (rank 0) has mixed volume 1.
pub fn mixed_volume(sets: &[PointSet]) -> Result<LatticeVolume> {
    let n = check_family(sets)?;
    if n == 0 {
        return Ok(LatticeVolume(BigInt::one()));
    }
    let reduced: Vec<PointSet> = sets.iter().map(PointSet::hull_reduced).collect();
    // partial sums indexed by bitmask, built from the lowest set bit
    let mut sums: Vec<Option<PointSet>> = vec![None; 1 << n];
    let mut total = BigInt::zero();
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let sum = match &sums[rest] {
            None => reduced[low].clone(),
            Some(prev) => minkowski_sum(prev, &reduced[low])?.hull_reduced(),
        };
        let vol = lattice_volume(&sum)?.into_inner();
        let l = mask.count_ones() as usize;
        if (n - l).is_multiple_of(2) {
            total += vol;
        } else {
            total -= vol;
        }
        sums[mask] = Some(sum);
    }
    let (q, r) = total.div_rem(&factorial(n));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Internal(format!(
            "polarization sum {total} is not a nonnegative multiple of {n}!"
        )));
    }
    Ok(LatticeVolume(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(n: usize) -> PointSet {
        let mut pts = vec![Covector::zero(n)];
        pts.extend((0..n).map(|i| Covector::unit(n, i)));
        PointSet::new(n, pts).unwrap()
    }

    #[test]
    fn affine_dim_examples() {
        assert_eq!(affine_dim(&PointSet::from_i64s(2, &[&[0, 0]])).unwrap(), 0);
        assert_eq!(
            affine_dim(&PointSet::from_i64s(2, &[&[0, 0], &[1, 0], &[2, 0]])).unwrap(),
            1
        );
        assert_eq!(affine_dim(&simplex(2)).unwrap(), 2);
        assert_eq!(
            affine_dim(&PointSet::new(2, []).unwrap()),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn minkowski_examples() {
        let a = PointSet::from_i64s(2, &[&[0, 0], &[1, 0]]);
        let zero = PointSet::from_i64s(2, &[&[0, 0]]);
        assert_eq!(minkowski_sum(&a, &zero).unwrap(), a);
        let b = PointSet::from_i64s(2, &[&[0, 0], &[0, 1]]);
        assert_eq!(
            minkowski_sum(&a, &b).unwrap(),
            PointSet::from_i64s(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
        );
        assert_eq!(
            minkowski_sum(&a, &a).unwrap(),
            PointSet::from_i64s(2, &[&[0, 0], &[1, 0], &[2, 0]])
        );
        assert_eq!(
            minkowski_sum(&a, &PointSet::new(2, []).unwrap()),
            Err(Error::EmptySet)
        );
    }

    #[test]
    fn volume_examples() {
        for n in 1..=5 {
            assert_eq!(lattice_volume(&simplex(n)).unwrap(), LatticeVolume::from(1));
        }
        let square = PointSet::from_i64s(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(lattice_volume(&square).unwrap(), LatticeVolume::from(2));
        let seg = PointSet::from_i64s(1, &[&[0], &[3]]);
        assert_eq!(lattice_volume(&seg).unwrap(), LatticeVolume::from(3));
        let flat = PointSet::from_i64s(2, &[&[0, 0], &[1, 1], &[2, 2]]);
        assert_eq!(lattice_volume(&flat).unwrap(), LatticeVolume::from(0));
        // unit cube: 3! * 1
        let cube = PointSet::from_i64s(
            3,
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 0],
                &[1, 0, 1],
                &[0, 1, 1],
                &[1, 1, 1],
            ],
        );
        assert_eq!(lattice_volume(&cube).unwrap(), LatticeVolume::from(6));
    }

    #[test]
    fn volume_with_interior_and_coplanar_points() {
        // 3x3 grid of points in a 2x2 square: area 4, lattice volume 8
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                pts.push(Covector::from_i64s(&[x, y]));
            }
        }
        let s = PointSet::new(2, pts).unwrap();
        assert_eq!(lattice_volume(&s).unwrap(), LatticeVolume::from(8));
        assert_eq!(s.hull_reduced().len(), 8);
    }

    #[test]
    fn mixed_volume_examples() {
        let d = simplex(2);
        assert_eq!(
            mixed_volume(&[d.clone(), d.clone()]).unwrap(),
            LatticeVolume::from(1)
        );
        let s1 = PointSet::from_i64s(2, &[&[0, 0], &[1, 0]]);
        let s2 = PointSet::from_i64s(2, &[&[0, 0], &[0, 1]]);
        assert_eq!(mixed_volume(&[s1, s2]).unwrap(), LatticeVolume::from(1));
        let d2 = d.dilate(&BigInt::from(2));
        assert_eq!(
            mixed_volume(&[d2.clone(), d2]).unwrap(),
            LatticeVolume::from(4)
        );
        let r1 = PointSet::from_i64s(2, &[&[0, 0], &[2, 0]]);
        let r2 = PointSet::from_i64s(2, &[&[0, 0], &[0, 3]]);
        assert_eq!(mixed_volume(&[r1, r2]).unwrap(), LatticeVolume::from(6));
    }

    #[test]
    fn mixed_volume_arity() {
        let d = simplex(2);
        assert_eq!(
            mixed_volume(std::slice::from_ref(&d)),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(mixed_volume(&[]).unwrap(), LatticeVolume::from(1));
    }
}
