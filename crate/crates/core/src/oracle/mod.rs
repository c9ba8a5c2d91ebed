//! Independent brute-force checks: exhaustive defects, a resultant count of
//! torus solutions for two equations, and seeded suites that compare them
//! (and the interpolation mixed volume) against the main algorithms.

mod bernstein;
pub mod poly;
pub mod random;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use crate::polytope::mixed_volume_oracle;
pub use bernstein::{
    bernstein_count_with_retries, bernstein_resultant_count, draw_coefficients, BernsteinOutcome,
    RandomSystemSpec,
};

use crate::error::{Error, Result};
use crate::intlin::{smith_normal_form, Covector, IntMatrix};
use crate::khovanskii::{defect_table, k_torus, KCase};
use crate::polytope::{affine_dim, minkowski_sum, mixed_volume, PointSet};
use random::{random_point_set, random_unimodular};

const MAX_EXHAUSTIVE: usize = 12;
const BERNSTEIN_RETRIES: u64 = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectMismatch {
    pub subset: Vec<usize>,
    pub oracle: i64,
    pub library: i64,
}

/// Recomputes every `δ(J)` from the explicit Minkowski sum and compares it
/// with [`defect_table`]. An empty list means agreement.
pub fn exhaustive_defect_check(supports: &[PointSet]) -> Result<Vec<DefectMismatch>> {
    let m = supports.len();
    if m > MAX_EXHAUSTIVE {
        return Err(Error::TooManySystems {
            count: m,
            cap: MAX_EXHAUSTIVE,
        });
    }
    let table = defect_table(supports)?;
    let n = supports.first().map_or(0, PointSet::rank);
    let mut out = Vec::new();
    for row in table {
        let mut sum: BTreeSet<Covector> = BTreeSet::from([Covector::zero(n)]);
        for &j in &row.subset {
            sum = sum
                .iter()
                .flat_map(|s| supports[j].points().iter().map(move |a| s + a))
                .collect();
        }
        let base = sum.iter().next().unwrap().clone();
        let diffs: Vec<Vec<BigInt>> = sum.iter().map(|p| (p - &base).into_coords()).collect();
        let (d, _, _) = smith_normal_form(&IntMatrix::from_rows(diffs, n));
        let r = (0..d.rows().min(d.cols()))
            .filter(|&i| !d[(i, i)].is_zero())
            .count();
        let oracle = r as i64 - row.subset.len() as i64;
        if oracle != row.defect {
            out.push(DefectMismatch {
                subset: row.subset,
                oracle,
                library: row.defect,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    /// Redraws needed by randomized oracles, summed over cases.
    pub retries: u64,
    pub failures: Vec<String>,
}

impl SuiteSummary {
    fn new(suite: &str, seed: u64, cases: usize) -> Self {
        SuiteSummary {
            suite: suite.to_string(),
            seed,
            cases,
            passed: 0,
            retries: 0,
            failures: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passed == self.cases
    }

    fn record(&mut self, case: usize, outcome: std::result::Result<(), String>) {
        match outcome {
            Ok(()) => self.passed += 1,
            Err(e) => self.failures.push(format!("case {case}: {e}")),
        }
    }
}

fn show(sets: &[PointSet]) -> String {
    sets.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Polarization against interpolation: `n <= 3`, up to 6 points per set,
/// coordinates in `[-4, 4]`.
pub fn run_mixed_volume_suite(seed: u64, cases: usize) -> SuiteSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = SuiteSummary::new("mixedvol", seed, cases);
    for case in 0..cases {
        let n = rng.random_range(1..=3);
        let sets: Vec<PointSet> = (0..n)
            .map(|_| random_point_set(&mut rng, n, 6, -4, 4))
            .collect();
        let outcome = match (mixed_volume(&sets), mixed_volume_oracle(&sets)) {
            (Ok(a), Ok(b)) if a == b => Ok(()),
            (a, b) => Err(format!(
                "[{}]: polarization {a:?}, interpolation {b:?}",
                show(&sets)
            )),
        };
        s.record(case, outcome);
    }
    s
}

fn bernstein_pair(rng: &mut ChaCha8Rng) -> [PointSet; 2] {
    loop {
        let mut draw = || loop {
            let p = random_point_set(rng, 2, 5, 0, 3);
            if p.len() >= 2 {
                return p;
            }
        };
        let (a, b) = (draw(), draw());
        if affine_dim(&minkowski_sum(&a, &b).unwrap()).unwrap() == 2 {
            return [a, b];
        }
    }
}

/// Resultant count against the mixed volume for pairs whose sum spans the
/// plane (so the only zero-defect set is the whole family and `L = M`).
pub fn run_bernstein_suite(seed: u64, cases: usize) -> SuiteSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = SuiteSummary::new("bernstein", seed, cases);
    for case in 0..cases {
        let supports = bernstein_pair(&mut rng);
        let spec = RandomSystemSpec {
            supports,
            coefficient_bound: 1000,
            seed: rng.random(),
        };
        let outcome = (|| {
            let mv = mixed_volume(&spec.supports)
                .map_err(|e| e.to_string())?
                .into_inner();
            let k = k_torus(&spec.supports).map_err(|e| e.to_string())?;
            if k.case != KCase::ZeroDefect || k.value != mv {
                return Err(format!("K = {} ({}) but MVol = {mv}", k.value, k.case));
            }
            match bernstein_count_with_retries(&spec, BERNSTEIN_RETRIES)
                .map_err(|e| e.to_string())?
            {
                Ok((count, retry)) => {
                    s.retries += retry;
                    if BigInt::from(count) == mv {
                        Ok(())
                    } else {
                        Err(format!("resultant count {count}, MVol {mv}"))
                    }
                }
                Err(last) => {
                    s.retries += BERNSTEIN_RETRIES;
                    Err(format!(
                        "no generic draw in {BERNSTEIN_RETRIES} retries ({last:?})"
                    ))
                }
            }
        })();
        let outcome =
            outcome.map_err(|e| format!("[{}] seed {}: {e}", show(&spec.supports), spec.seed));
        s.record(case, outcome);
    }
    s
}

fn khovanskii_case(rng: &mut ChaCha8Rng, sets: &[PointSet]) -> std::result::Result<(), String> {
    let err = |e: Error| e.to_string();
    let mismatches = exhaustive_defect_check(sets).map_err(err)?;
    if !mismatches.is_empty() {
        return Err(format!("defect mismatches {mismatches:?}"));
    }
    let k = k_torus(sets).map_err(err)?;
    let n = sets[0].rank();

    let shifted: Vec<PointSet> = sets
        .iter()
        .map(|s| {
            let t = Covector::new(
                (0..n)
                    .map(|_| BigInt::from(rng.random_range(-5..=5)))
                    .collect(),
            );
            s.translate(&t)
        })
        .collect();
    let kt = k_torus(&shifted).map_err(err)?;
    if (kt.value.clone(), kt.case) != (k.value.clone(), k.case) {
        return Err(format!(
            "translation changed K from {} to {}",
            k.value, kt.value
        ));
    }

    let mut perm: Vec<usize> = (0..sets.len()).collect();
    perm.shuffle(rng);
    let permuted: Vec<PointSet> = perm.iter().map(|&i| sets[i].clone()).collect();
    let kp = k_torus(&permuted).map_err(err)?;
    if kp.value != k.value {
        return Err(format!(
            "permutation {perm:?} changed K from {} to {}",
            k.value, kp.value
        ));
    }

    let (g, _) = random_unimodular(rng, n);
    let moved: Vec<PointSet> = sets.iter().map(|s| s.transform(&g)).collect();
    let kg = k_torus(&moved).map_err(err)?;
    if kg.value != k.value {
        return Err(format!(
            "unimodular change of basis changed K from {} to {}",
            k.value, kg.value
        ));
    }

    if k.case == KCase::ZeroDefect {
        let j0 = k.j0.clone().unwrap_or_default();
        let table = defect_table(sets).map_err(err)?;
        for row in &table {
            if row.defect == 0 && !row.subset.iter().all(|i| j0.contains(i)) {
                return Err(format!(
                    "zero-defect {:?} not inside J0 = {j0:?}",
                    row.subset
                ));
            }
            if row.subset == j0 && row.defect != 0 {
                return Err(format!("J0 = {j0:?} has defect {}", row.defect));
            }
        }
    }
    Ok(())
}

/// Exhaustive defects plus translation, permutation and unimodular
/// invariance of `K` on random families (`m <= 4`, rank `<= 3`).
pub fn run_defect_suite(seed: u64, cases: usize) -> SuiteSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = SuiteSummary::new("defect", seed, cases);
    for case in 0..cases {
        let n = rng.random_range(1..=3);
        let m = rng.random_range(1..=4);
        let sets: Vec<PointSet> = (0..m)
            .map(|_| random_point_set(&mut rng, n, 4, -3, 3))
            .collect();
        let outcome =
            khovanskii_case(&mut rng, &sets).map_err(|e| format!("[{}]: {e}", show(&sets)));
        s.record(case, outcome);
    }
    s
}
