//! Orbit-by-orbit component count: degeneracy sets `D(σ)`, the defect
//! function `d(σ) = |D(σ)| - dim σ`, the selected cones `S`, and the total
//! `Σ_{σ∈S} K_{O_σ}` over the restricted non-degenerate systems.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::eqls::{restrict_with_witness, validate, witness, RestrictedSupport, SystemDatum};
use crate::error::{Error, Result};
use crate::fan::{ConeId, Fan};
use crate::khovanskii::{k_torus, KResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub cone: ConeId,
    pub rays: Vec<usize>,
    pub dim: usize,
    /// Indices (0-based) of the systems degenerating along the orbit.
    pub degenerate: BTreeSet<usize>,
    /// `|D(σ)| - dim σ`; negative values do occur.
    pub d_value: i64,
    pub in_s: bool,
    /// Restrictions of the non-degenerate systems, keyed by system index.
    pub restricted: Vec<(usize, RestrictedSupport)>,
    /// Present only for selected cones.
    pub k: Option<KResult>,
    pub k_contribution: BigInt,
}

impl OrbitRecord {
    /// `(n - dim σ) - (m - |D(σ)|)`.
    pub fn expected_dimension(&self, rank: usize, systems: usize) -> i64 {
        (rank as i64 - self.dim as i64) - (systems as i64 - self.degenerate.len() as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub total: BigInt,
    /// One record per cone, in cone id order (dimension first).
    pub records: Vec<OrbitRecord>,
    pub rank: usize,
    pub systems: usize,
}

impl ComponentReport {
    pub fn selected(&self) -> impl Iterator<Item = &OrbitRecord> {
        self.records.iter().filter(|r| r.in_s)
    }
}

fn check_rank(f: &Fan, data: &[SystemDatum]) -> Result<()> {
    for d in data {
        if d.support().rank() != f.rank() {
            return Err(Error::RankMismatch {
                expected: f.rank(),
                got: d.support().rank(),
            });
        }
    }
    Ok(())
}

/// `D(σ)` for every cone of `f`.
pub fn degeneracy_profile(
    f: &Fan,
    data: &[SystemDatum],
) -> Result<BTreeMap<ConeId, BTreeSet<usize>>> {
    check_rank(f, data)?;
    let ids: Vec<ConeId> = (0..f.cones().len()).map(ConeId).collect();
    let sets: Vec<BTreeSet<usize>> = ids
        .par_iter()
        .map(|&sigma| {
            let mut set = BTreeSet::new();
            for (i, d) in data.iter().enumerate() {
                if witness(d, f, sigma)?.is_none() {
                    set.insert(i);
                }
            }
            Ok(set)
        })
        .collect::<Result<_>>()?;
    let profile: BTreeMap<ConeId, BTreeSet<usize>> = ids.into_iter().zip(sets).collect();
    check_monotone(f, &profile)?;
    Ok(profile)
}

fn check_monotone(f: &Fan, profile: &BTreeMap<ConeId, BTreeSet<usize>>) -> Result<()> {
    for (&sigma, big) in profile {
        for tau in f.faces(sigma)? {
            if !profile[tau].is_subset(big) {
                return Err(Error::Internal(format!(
                    "D({tau}) = {:?} is not contained in D({sigma}) = {big:?}",
                    profile[tau]
                )));
            }
        }
    }
    Ok(())
}

/// `S = {σ : d(σ) >= d(τ) for every face τ of σ}`.
pub fn selected_cones(f: &Fan, d_values: &BTreeMap<ConeId, i64>) -> Result<BTreeSet<ConeId>> {
    let mut s = BTreeSet::new();
    for (&sigma, &d) in d_values {
        let mut ok = true;
        for tau in f.faces(sigma)? {
            let dt = d_values.get(tau).ok_or(Error::UnknownCone(*tau))?;
            if *dt > d {
                ok = false;
                break;
            }
        }
        if ok {
            s.insert(sigma);
        }
    }
    Ok(s)
}

/// Number of irreducible components of the intersection of general members
/// of the given systems.
pub fn count_components(f: &Fan, data: &[SystemDatum]) -> Result<ComponentReport> {
    for d in data {
        validate(d, f)?;
    }
    let profile = degeneracy_profile(f, data)?;
    let d_values: BTreeMap<ConeId, i64> = profile
        .iter()
        .map(|(&sigma, set)| {
            let dim = f.cones()[sigma.0].dim();
            (sigma, set.len() as i64 - dim as i64)
        })
        .collect();
    let zero = f.zero_cone();
    if d_values[&zero] != 0 {
        return Err(Error::Internal(format!(
            "d of the zero cone is {}",
            d_values[&zero]
        )));
    }
    let s = selected_cones(f, &d_values)?;

    let records: Vec<OrbitRecord> = profile
        .par_iter()
        .map(|(&sigma, degenerate)| {
            let cone = f.cone(sigma)?;
            let mut restricted = Vec::new();
            for (i, d) in data.iter().enumerate() {
                if degenerate.contains(&i) {
                    continue;
                }
                let chi = witness(d, f, sigma)?.ok_or(Error::Degenerate { cone: sigma })?;
                restricted.push((i, restrict_with_witness(d, f, sigma, &chi)?));
            }
            let in_s = s.contains(&sigma);
            let k = if in_s {
                let family: Vec<_> = restricted.iter().map(|(_, r)| r.points.clone()).collect();
                Some(k_torus(&family)?)
            } else {
                None
            };
            let k_contribution = k.as_ref().map_or_else(BigInt::zero, |k| k.value.clone());
            Ok(OrbitRecord {
                cone: sigma,
                rays: cone.ray_indices().to_vec(),
                dim: cone.dim(),
                degenerate: degenerate.clone(),
                d_value: d_values[&sigma],
                in_s,
                restricted,
                k,
                k_contribution,
            })
        })
        .collect::<Result<_>>()?;

    let report = ComponentReport {
        total: records.iter().map(|r| &r.k_contribution).sum(),
        records,
        rank: f.rank(),
        systems: data.len(),
    };
    for r in &report.records {
        if r.k_contribution.is_negative() {
            return Err(Error::Internal(format!("negative count at {}", r.cone)));
        }
        if r.k_contribution.is_positive() && r.expected_dimension(report.rank, report.systems) < 0 {
            return Err(Error::Internal(format!(
                "positive count at {} with negative expected dimension",
                r.cone
            )));
        }
    }
    Ok(report)
}

/// Every structural property a report must satisfy, as a list of
/// violations (empty when the report is sound).
pub fn audit_report(f: &Fan, report: &ComponentReport) -> Vec<String> {
    let mut out = Vec::new();
    let by_id: BTreeMap<ConeId, &OrbitRecord> =
        report.records.iter().map(|r| (r.cone, r)).collect();
    if by_id.len() != f.cones().len() {
        out.push(format!(
            "{} records for {} cones",
            by_id.len(),
            f.cones().len()
        ));
        return out;
    }
    let zero = f.zero_cone();
    if by_id[&zero].d_value != 0 {
        out.push(format!("d(zero cone) = {}", by_id[&zero].d_value));
    }
    if !by_id[&zero].in_s {
        out.push("zero cone not selected".into());
    }
    let sum: BigInt = report.records.iter().map(|r| &r.k_contribution).sum();
    if sum != report.total {
        out.push(format!(
            "total {} but contributions sum to {sum}",
            report.total
        ));
    }
    for r in &report.records {
        if r.d_value != r.degenerate.len() as i64 - r.dim as i64 {
            out.push(format!(
                "{}: d = {} with |D| = {}",
                r.cone,
                r.d_value,
                r.degenerate.len()
            ));
        }
        let faces = match f.faces(r.cone) {
            Ok(faces) => faces,
            Err(e) => {
                out.push(e.to_string());
                continue;
            }
        };
        let mut selected = true;
        for tau in faces {
            let t = by_id[tau];
            if !t.degenerate.is_subset(&r.degenerate) {
                out.push(format!("D({tau}) not inside D({})", r.cone));
            }
            selected &= t.d_value <= r.d_value;
        }
        if selected != r.in_s {
            out.push(format!(
                "{}: in_s = {} disagrees with the face criterion",
                r.cone, r.in_s
            ));
        }
        if !r.in_s && !r.k_contribution.is_zero() {
            out.push(format!("{} contributes outside S", r.cone));
        }
        if r.k_contribution.is_negative() {
            out.push(format!("{} contributes {}", r.cone, r.k_contribution));
        }
        if r.k_contribution.is_positive() && r.expected_dimension(report.rank, report.systems) < 0 {
            out.push(format!(
                "{} contributes with negative expected dimension",
                r.cone
            ));
        }
        if r.restricted.len() + r.degenerate.len() != report.systems {
            out.push(format!(
                "{}: restricted and degenerate systems do not partition",
                r.cone
            ));
        }
    }
    out
}
