//! Fans of rational strongly convex cones, their face posets, support
//! functions and star fans.
//!
//! Sign convention: the support function of the principal divisor of a
//! character `χ` is `<χ, ->`, and a divisor is effective iff its support
//! function is nonnegative on `|Σ|`.

mod cone;
mod star;
mod support;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::{IntMatrix, LatticeVector};

pub use cone::{build_cone, Cone};
pub(crate) use cone::{combinations, rays_from_halfspaces};
pub use star::{quotient_star_fan, StarFan};
pub use support::{
    evaluate_support, global_section_characters, is_effective, GlobalSections, SupportFunction,
};

/// Index of a cone in its fan. Cones are ordered by dimension, then by their
/// sorted ray indices, so the zero cone is always `ConeId(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConeId(pub usize);

impl fmt::Display for ConeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FanOptions {
    /// Check that pairwise intersections of maximal cones are common faces.
    /// Quadratic in the number of maximal cones.
    pub validate: bool,
}

impl Default for FanOptions {
    fn default() -> Self {
        Self { validate: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<LatticeVector>,
    cones: Vec<Cone>,
    /// For each cone, all of its faces (itself and the zero cone included),
    /// in id order.
    faces: Vec<Vec<ConeId>>,
    maximal: Vec<ConeId>,
    by_rays: HashMap<Vec<usize>, ConeId>,
}

impl Fan {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, id: ConeId) -> Result<&Cone> {
        self.cones.get(id.0).ok_or(Error::UnknownCone(id))
    }

    pub fn zero_cone(&self) -> ConeId {
        ConeId(0)
    }

    pub fn maximal_cones(&self) -> &[ConeId] {
        &self.maximal
    }

    pub fn is_maximal(&self, id: ConeId) -> bool {
        self.maximal.binary_search(&id).is_ok()
    }

    /// Cone with exactly these (fan) ray indices, if present.
    pub fn find(&self, ray_indices: &[usize]) -> Option<ConeId> {
        let mut key = ray_indices.to_vec();
        key.sort_unstable();
        key.dedup();
        self.by_rays.get(&key).copied()
    }

    /// All faces of `sigma`, including `sigma` and the zero cone.
    pub fn faces(&self, sigma: ConeId) -> Result<&[ConeId]> {
        self.faces
            .get(sigma.0)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownCone(sigma))
    }

    pub fn is_face(&self, tau: ConeId, sigma: ConeId) -> Result<bool> {
        Ok(self.faces(sigma)?.binary_search(&tau).is_ok())
    }

    /// Cones having `tau` as a face (the star of `tau`), in id order.
    pub fn star(&self, tau: ConeId) -> Result<Vec<ConeId>> {
        self.cone(tau)?;
        Ok((0..self.cones.len())
            .map(ConeId)
            .filter(|&s| self.faces[s.0].binary_search(&tau).is_ok())
            .collect())
    }

    /// First maximal cone containing `tau`.
    pub fn maximal_containing(&self, tau: ConeId) -> Result<ConeId> {
        self.cone(tau)?;
        self.maximal
            .iter()
            .copied()
            .find(|&m| self.faces[m.0].binary_search(&tau).is_ok())
            .ok_or_else(|| Error::Internal(format!("cone {tau} lies in no maximal cone")))
    }

    /// First maximal cone whose H-representation admits `v`.
    pub fn locate(&self, v: &LatticeVector) -> Option<ConeId> {
        self.maximal
            .iter()
            .copied()
            .find(|&m| self.cones[m.0].contains(v))
    }

    pub fn in_support(&self, v: &LatticeVector) -> bool {
        self.locate(v).is_some()
    }

    /// Maximal cones as lists of ray indices, in maximal-id order.
    pub fn maximal_ray_lists(&self) -> Vec<Vec<usize>> {
        self.maximal
            .iter()
            .map(|m| self.cones[m.0].ray_indices.clone())
            .collect()
    }

    /// Applies `v -> g v` to every ray. Cone ids are preserved.
    pub fn transform(&self, g: &IntMatrix) -> Result<Fan> {
        let rays: Vec<LatticeVector> = self
            .rays
            .iter()
            .map(|r| LatticeVector::new(g.apply(r.coords())))
            .collect();
        build_fan(
            self.rank,
            &rays,
            &self.maximal_ray_lists(),
            FanOptions { validate: false },
        )
    }
}

fn not_a_fan(reason: impl Into<String>) -> Error {
    Error::NotAFan {
        reason: reason.into(),
    }
}

fn cone_on(rays: &[LatticeVector], indices: &[usize], rank: usize) -> Result<Cone> {
    let gens: Vec<LatticeVector> = indices.iter().map(|&i| rays[i].clone()).collect();
    let mut c = build_cone(&gens, rank)?;
    if c.generators.len() != indices.len() {
        let redundant = indices
            .iter()
            .find(|&&i| !c.generators.contains(&rays[i]))
            .copied()
            .unwrap_or(indices[0]);
        return Err(not_a_fan(format!(
            "ray {redundant} is not an extreme ray of the cone on rays {indices:?}"
        )));
    }
    // re-express generators in the order of the (sorted) ray indices
    c.generators = gens;
    c.ray_indices = indices.to_vec();
    Ok(c)
}

/// Completes the listed maximal cones to their full face poset and checks
/// the fan axioms.
pub fn build_fan(
    rank: usize,
    rays: &[LatticeVector],
    maximal_cones: &[Vec<usize>],
    options: FanOptions,
) -> Result<Fan> {
    for (i, r) in rays.iter().enumerate() {
        if r.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: r.rank(),
            });
        }
        if r.is_zero() {
            return Err(not_a_fan(format!("ray {i} is zero")));
        }
        if r.primitive() != *r {
            return Err(not_a_fan(format!("ray {i} = {r} is not primitive")));
        }
    }
    let mut distinct: BTreeMap<&LatticeVector, usize> = BTreeMap::new();
    for (i, r) in rays.iter().enumerate() {
        if let Some(j) = distinct.insert(r, i) {
            return Err(not_a_fan(format!("rays {j} and {i} coincide")));
        }
    }
    if maximal_cones.is_empty() {
        return Err(not_a_fan("no cones given"));
    }

    let mut listed: Vec<Vec<usize>> = Vec::new();
    for (k, c) in maximal_cones.iter().enumerate() {
        let mut idx = c.clone();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= rays.len()) {
            return Err(not_a_fan(format!("cone {k} refers to missing ray {bad}")));
        }
        listed.push(idx);
    }
    listed.sort();
    listed.dedup();

    // face closure
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut built: BTreeMap<Vec<usize>, Cone> = BTreeMap::new();
    for idx in &listed {
        let c = cone_on(rays, idx, rank)?;
        for fs in c.face_sets() {
            all.insert(fs.iter().map(|&p| idx[p]).collect());
        }
        built.insert(idx.clone(), c);
    }
    let used: BTreeSet<usize> = listed.iter().flatten().copied().collect();
    if let Some(unused) = (0..rays.len()).find(|i| !used.contains(i)) {
        return Err(not_a_fan(format!("ray {unused} belongs to no cone")));
    }

    let mut keyed: Vec<(usize, Vec<usize>)> = Vec::with_capacity(all.len());
    for idx in all {
        let c = match built.get(&idx) {
            Some(c) => c.clone(),
            None => cone_on(rays, &idx, rank)?,
        };
        built.insert(idx.clone(), c.clone());
        keyed.push((c.dim, idx));
    }
    keyed.sort();

    let by_rays: HashMap<Vec<usize>, ConeId> = keyed
        .iter()
        .enumerate()
        .map(|(i, (_, idx))| (idx.clone(), ConeId(i)))
        .collect();
    let mut cones = Vec::with_capacity(keyed.len());
    let mut faces = Vec::with_capacity(keyed.len());
    for (i, (_, idx)) in keyed.iter().enumerate() {
        let mut c = built.remove(idx).expect("built above");
        c.id = ConeId(i);
        let mut fs: Vec<ConeId> = c
            .face_sets()
            .into_iter()
            .map(|s| {
                let key: Vec<usize> = s.iter().map(|&p| idx[p]).collect();
                by_rays[&key]
            })
            .collect();
        fs.sort();
        faces.push(fs);
        cones.push(c);
    }

    let mut is_proper_face = vec![false; cones.len()];
    for (s, fs) in faces.iter().enumerate() {
        for f in fs {
            if f.0 != s {
                is_proper_face[f.0] = true;
            }
        }
    }
    let maximal: Vec<ConeId> = (0..cones.len())
        .filter(|&i| !is_proper_face[i])
        .map(ConeId)
        .collect();

    let fan = Fan {
        rank,
        rays: rays.to_vec(),
        cones,
        faces,
        maximal,
        by_rays,
    };
    if options.validate {
        validate_intersections(&fan)?;
    }
    Ok(fan)
}

/// Every pair of maximal cones must meet in a common face: the cone on the
/// shared rays is a face of both, and nothing else lies in both.
fn validate_intersections(fan: &Fan) -> Result<()> {
    for (a_pos, &a) in fan.maximal.iter().enumerate() {
        for &b in &fan.maximal[a_pos + 1..] {
            let ca = &fan.cones[a.0];
            let cb = &fan.cones[b.0];
            let common: Vec<usize> = ca
                .ray_indices
                .iter()
                .filter(|i| cb.ray_indices.contains(i))
                .copied()
                .collect();
            let offending = || {
                not_a_fan(format!(
                    "cones {a} {:?} and {b} {:?} do not meet in a common face",
                    ca.ray_indices, cb.ray_indices
                ))
            };
            let Some(&tau) = fan.by_rays.get(&common) else {
                return Err(offending());
            };
            if !fan.faces[a.0].contains(&tau) || !fan.faces[b.0].contains(&tau) {
                return Err(offending());
            }
            let mut ineqs: Vec<Vec<BigInt>> = Vec::new();
            let mut eqs: Vec<Vec<BigInt>> = Vec::new();
            for c in [ca, cb] {
                ineqs.extend(c.facets.iter().map(|h| h.coords().to_vec()));
                eqs.extend(c.equations.iter().map(|e| e.coords().to_vec()));
            }
            let ct = &fan.cones[tau.0];
            for r in rays_from_halfspaces(&ineqs, &eqs, fan.rank) {
                if !ct.contains(&LatticeVector::new(r)) {
                    return Err(offending());
                }
            }
        }
    }
    Ok(())
}
