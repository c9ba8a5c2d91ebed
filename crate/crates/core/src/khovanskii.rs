//! Component count of a general complete intersection in the torus:
//! defects `δ(J) = dim(Σ_{j∈J} A_j) - |J|` and the three-way case split
//! (empty / irreducible / mixed volume over the greatest zero-defect subset).

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intlin::{canonical_basis, coordinates_in_sublattice, rank, saturate_rows, Covector};
use crate::polytope::{mixed_volume, PointSet};

/// Subset enumeration is exponential; families larger than this are refused.
pub const DEFAULT_SUBSET_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KCase {
    /// Every defect is positive (vacuously so for the empty family): one
    /// irreducible component.
    AllPositive,
    /// Some defect is negative: the intersection is empty.
    NegativeDefect,
    /// All defects nonnegative, some zero: mixed volume over `J_0`.
    ZeroDefect,
}

impl fmt::Display for KCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            KCase::AllPositive => "AllPositive",
            KCase::NegativeDefect => "NegativeDefect",
            KCase::ZeroDefect => "ZeroDefect",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DefectReport {
    /// 0-based indices, increasing.
    pub subset: Vec<usize>,
    pub defect: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KResult {
    pub value: BigInt,
    pub case: KCase,
    pub j0: Option<Vec<usize>>,
    /// Basis of the saturated lattice `L` (ZeroDefect only).
    pub lattice_l: Option<Vec<Covector>>,
}

/// Per-support difference bases, so subset ranks only stack small matrices.
struct DifferenceSpans {
    spans: Vec<Vec<Vec<BigInt>>>,
}

impl DifferenceSpans {
    fn new(supports: &[PointSet]) -> Result<Self> {
        let rank0 = supports.first().map_or(0, PointSet::rank);
        let mut spans = Vec::with_capacity(supports.len());
        for s in supports {
            if s.is_empty() {
                return Err(Error::EmptySupport);
            }
            if s.rank() != rank0 {
                return Err(Error::RankMismatch {
                    expected: rank0,
                    got: s.rank(),
                });
            }
            spans.push(canonical_basis(s.differences(), rank0));
        }
        Ok(Self { spans })
    }

    fn defect(&self, subset: &[usize]) -> i64 {
        let rows: Vec<Vec<BigInt>> = subset
            .iter()
            .flat_map(|&j| self.spans[j].iter().cloned())
            .collect();
        rank(&rows) as i64 - subset.len() as i64
    }
}

fn members(mask: usize, m: usize) -> Vec<usize> {
    (0..m).filter(|&i| mask & (1 << i) != 0).collect()
}

/// `δ(J)` for a nonempty index set `j` (0-based).
pub fn defect(supports: &[PointSet], j: &[usize]) -> Result<i64> {
    if j.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    if let Some(&bad) = j.iter().find(|&&i| i >= supports.len()) {
        return Err(Error::Internal(format!("index {bad} out of range")));
    }
    let mut idx = j.to_vec();
    idx.sort_unstable();
    idx.dedup();
    Ok(DifferenceSpans::new(supports)?.defect(&idx))
}

/// Defects of all `2^m - 1` nonempty subsets, in bitmask order.
pub fn defect_table(supports: &[PointSet]) -> Result<Vec<DefectReport>> {
    let m = supports.len();
    check_cap(m, DEFAULT_SUBSET_CAP)?;
    let spans = DifferenceSpans::new(supports)?;
    Ok((1usize..(1 << m))
        .map(|mask| {
            let subset = members(mask, m);
            let defect = spans.defect(&subset);
            DefectReport { subset, defect }
        })
        .collect())
}

fn check_cap(m: usize, cap: usize) -> Result<()> {
    if m > cap {
        return Err(Error::TooManySystems { count: m, cap });
    }
    Ok(())
}

/// Union of all zero-defect subsets, verified to have defect zero itself.
/// Assumes every defect is nonnegative.
pub fn greatest_zero_defect_subset(supports: &[PointSet]) -> Result<Option<Vec<usize>>> {
    let m = supports.len();
    check_cap(m, DEFAULT_SUBSET_CAP)?;
    let spans = DifferenceSpans::new(supports)?;
    greatest_from_spans(&spans, m)
}

fn greatest_from_spans(spans: &DifferenceSpans, m: usize) -> Result<Option<Vec<usize>>> {
    let mut union = 0usize;
    for mask in 1usize..(1 << m) {
        if spans.defect(&members(mask, m)) == 0 {
            union |= mask;
        }
    }
    if union == 0 {
        return Ok(None);
    }
    let j0 = members(union, m);
    let d = spans.defect(&j0);
    if d != 0 {
        return Err(Error::Internal(format!(
            "union {j0:?} of zero-defect subsets has defect {d}"
        )));
    }
    Ok(Some(j0))
}

/// `K_{T^n}(A_1, ..., A_m)` with the default subset cap.
pub fn k_torus(supports: &[PointSet]) -> Result<KResult> {
    k_torus_with_cap(supports, DEFAULT_SUBSET_CAP)
}

pub fn k_torus_with_cap(supports: &[PointSet], cap: usize) -> Result<KResult> {
    let m = supports.len();
    if m == 0 {
        return Ok(KResult {
            value: BigInt::one(),
            case: KCase::AllPositive,
            j0: None,
            lattice_l: None,
        });
    }
    check_cap(m, cap)?;
    let spans = DifferenceSpans::new(supports)?;
    let mut any_zero = false;
    for mask in 1usize..(1 << m) {
        let d = spans.defect(&members(mask, m));
        if d < 0 {
            return Ok(KResult {
                value: BigInt::ZERO,
                case: KCase::NegativeDefect,
                j0: None,
                lattice_l: None,
            });
        }
        any_zero |= d == 0;
    }
    if !any_zero {
        return Ok(KResult {
            value: BigInt::one(),
            case: KCase::AllPositive,
            j0: None,
            lattice_l: None,
        });
    }

    let j0 = greatest_from_spans(&spans, m)?
        .ok_or_else(|| Error::Internal("zero defect seen but no J0".into()))?;
    let n = supports[0].rank();
    let diffs: Vec<Vec<BigInt>> = j0.iter().flat_map(|&j| supports[j].differences()).collect();
    let basis: Vec<Covector> = saturate_rows(&diffs, n)
        .into_iter()
        .map(Covector::new)
        .collect();
    if basis.len() != j0.len() {
        return Err(Error::Internal(format!(
            "lattice L has rank {} but |J0| = {}",
            basis.len(),
            j0.len()
        )));
    }
    let mut local = Vec::with_capacity(j0.len());
    for &j in &j0 {
        let shifted = supports[j].normalized();
        let pts: Vec<Covector> = shifted
            .points()
            .iter()
            .map(|p| coordinates_in_sublattice(p, &basis).map(Covector::new))
            .collect::<Result<_>>()?;
        local.push(PointSet::new(basis.len(), pts)?);
    }
    let value = mixed_volume(&local)?.into_inner();
    Ok(KResult {
        value,
        case: KCase::ZeroDefect,
        j0: Some(j0),
        lattice_l: Some(basis),
    })
}
