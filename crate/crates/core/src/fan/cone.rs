use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::ConeId;
use crate::error::{Error, Result};
use crate::intlin::{
    annihilator_basis, dot, orthogonal_complement_basis, rank, Covector, LatticeVector,
};

/// A rational strongly convex polyhedral cone in N.
///
/// Generators are the primitive extreme rays. The H-representation is split
/// into facet inequalities (`<h, v> >= 0`) and the equations cutting out the
/// linear span (`<e, v> = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub(crate) id: ConeId,
    pub(crate) ray_indices: Vec<usize>,
    pub(crate) generators: Vec<LatticeVector>,
    pub(crate) facets: Vec<Covector>,
    pub(crate) equations: Vec<Covector>,
    pub(crate) dim: usize,
    rank: usize,
}

impl Cone {
    pub fn id(&self) -> ConeId {
        self.id
    }

    /// Indices of the generators in the owning fan's ray list.
    pub fn ray_indices(&self) -> &[usize] {
        &self.ray_indices
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn facets(&self) -> &[Covector] {
        &self.facets
    }

    pub fn equations(&self) -> &[Covector] {
        &self.equations
    }

    /// All inequalities `<h, v> >= 0` describing the cone, with each
    /// equation contributing both signs.
    pub fn halfspaces(&self) -> Vec<Covector> {
        let mut hs = self.facets.clone();
        for e in &self.equations {
            hs.push(e.clone());
            hs.push(-e);
        }
        hs
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.equations.iter().all(|e| e.pair(v).is_zero())
            && self.facets.iter().all(|h| !h.pair(v).is_negative())
    }

    /// Generator index sets (positions in `generators`) of every face,
    /// including the cone itself and the zero face.
    pub(crate) fn face_sets(&self) -> Vec<Vec<usize>> {
        let tight: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|h| {
                (0..self.generators.len())
                    .filter(|&i| h.pair(&self.generators[i]).is_zero())
                    .collect()
            })
            .collect();
        let all: BTreeSet<usize> = (0..self.generators.len()).collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut stack = vec![all];
        while let Some(face) = stack.pop() {
            if !seen.insert(face.clone()) {
                continue;
            }
            for t in &tight {
                let sub: BTreeSet<usize> = face.intersection(t).copied().collect();
                if !seen.contains(&sub) {
                    stack.push(sub);
                }
            }
        }
        seen.into_iter().map(|s| s.into_iter().collect()).collect()
    }
}

fn fmt_generators(gens: &[LatticeVector]) -> String {
    let parts: Vec<String> = gens.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Builds the cone generated by `generators` in a lattice of rank `rank`,
/// computing its H-representation. Non-extreme generators are dropped.
pub fn build_cone(generators: &[LatticeVector], rank: usize) -> Result<Cone> {
    if let Some(g) = generators.iter().find(|g| g.rank() != rank) {
        return Err(Error::RankMismatch {
            expected: rank,
            got: g.rank(),
        });
    }
    let mut gens: Vec<LatticeVector> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(LatticeVector::primitive)
        .collect();
    gens.sort();
    gens.dedup();

    let equations = orthogonal_complement_basis(&gens, rank)?;
    let dim = rank - equations.len();
    let facets = facet_normals(&gens, dim, rank)?;

    let mut normal_rows: Vec<Vec<BigInt>> = facets.iter().map(|h| h.coords().to_vec()).collect();
    normal_rows.extend(equations.iter().map(|e| e.coords().to_vec()));
    if crate::intlin::rank(&normal_rows) != rank {
        return Err(Error::NotStronglyConvex {
            generators: fmt_generators(generators),
        });
    }

    // a generator is extreme iff the facets tight at it cut out a line
    let extreme: Vec<LatticeVector> = gens
        .iter()
        .filter(|g| {
            let mut rows: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|h| h.pair(g).is_zero())
                .map(|h| h.coords().to_vec())
                .collect();
            rows.extend(equations.iter().map(|e| e.coords().to_vec()));
            crate::intlin::rank(&rows) == rank - 1
        })
        .cloned()
        .collect();

    Ok(Cone {
        id: ConeId(0),
        ray_indices: Vec::new(),
        generators: extreme,
        facets,
        equations,
        dim,
        rank,
    })
}

/// Facet normals of the cone spanned by `gens`, one per facet, primitive,
/// each nonnegative on all generators.
fn facet_normals(gens: &[LatticeVector], dim: usize, rank: usize) -> Result<Vec<Covector>> {
    if dim == 0 {
        return Ok(Vec::new());
    }
    let mut seen_tight: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut facets = Vec::new();
    for subset in combinations(gens.len(), dim - 1) {
        let chosen: Vec<LatticeVector> = subset.iter().map(|&i| gens[i].clone()).collect();
        let rows: Vec<Vec<BigInt>> = chosen.iter().map(|g| g.coords().to_vec()).collect();
        if crate::intlin::rank(&rows) != dim - 1 {
            continue;
        }
        let comp = orthogonal_complement_basis(&chosen, rank)?;
        // any element of the complement that is not in span(gens)^perp
        // restricts to the facet functional, up to scale
        let Some(h) = comp
            .into_iter()
            .find(|c| gens.iter().any(|g| !c.pair(g).is_zero()))
        else {
            continue;
        };
        let pairings: Vec<BigInt> = gens.iter().map(|g| h.pair(g)).collect();
        let h = if pairings.iter().all(|p| !p.is_negative()) {
            h
        } else if pairings.iter().all(|p| !p.is_positive()) {
            -&h
        } else {
            continue;
        };
        let tight: Vec<usize> = (0..gens.len()).filter(|&i| pairings[i].is_zero()).collect();
        if seen_tight.insert(tight) {
            facets.push(h.primitive());
        }
    }
    facets.sort();
    Ok(facets)
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Extreme rays of the pointed cone `{x : <h, x> >= 0, <e, x> = 0}` given by
/// rows of integer coefficients. Brute force over tight subsets; meant for
/// the small cones that show up in fan validation and recession tests.
pub(crate) fn rays_from_halfspaces(
    inequalities: &[Vec<BigInt>],
    equations: &[Vec<BigInt>],
    n: usize,
) -> Vec<Vec<BigInt>> {
    let r0 = rank(equations);
    if r0 >= n {
        return Vec::new();
    }
    let need = n - 1 - r0;
    let mut found: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for subset in combinations(inequalities.len(), need) {
        let mut rows: Vec<Vec<BigInt>> = equations.to_vec();
        rows.extend(subset.iter().map(|&i| inequalities[i].clone()));
        if rank(&rows) != n - 1 {
            continue;
        }
        let covs: Vec<Covector> = rows.into_iter().map(Covector::new).collect();
        let line = annihilator_basis(&covs, n).expect("consistent rank");
        let Some(dir) = line.first() else { continue };
        for cand in [dir.clone(), -dir] {
            if inequalities
                .iter()
                .all(|h| !dot(h, cand.coords()).is_negative())
            {
                found.insert(cand.primitive().into_coords());
            }
        }
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    #[test]
    fn zero_cone() {
        let c = build_cone(&[], 2).unwrap();
        assert_eq!(c.dim(), 0);
        assert!(c.generators().is_empty());
        assert!(c.facets().is_empty());
        assert_eq!(c.equations().len(), 2);
        assert!(c.contains(&lv(&[0, 0])));
        assert!(!c.contains(&lv(&[1, 0])));
    }

    #[test]
    fn quadrant() {
        let c = build_cone(&[lv(&[1, 0]), lv(&[0, 1])], 2).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(
            c.facets(),
            &[Covector::from_i64s(&[0, 1]), Covector::from_i64s(&[1, 0])]
        );
        assert!(c.contains(&lv(&[3, 5])));
        assert!(!c.contains(&lv(&[-1, 5])));
        assert_eq!(c.face_sets().len(), 4);
    }

    #[test]
    fn line_is_rejected() {
        assert!(matches!(
            build_cone(&[lv(&[1, 0]), lv(&[-1, 0])], 2),
            Err(Error::NotStronglyConvex { .. })
        ));
        assert!(matches!(
            build_cone(&[lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -1])], 2),
            Err(Error::NotStronglyConvex { .. })
        ));
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = build_cone(&[lv(&[2, 0]), lv(&[0, 1]), lv(&[1, 1])], 2).unwrap();
        assert_eq!(c.generators(), &[lv(&[0, 1]), lv(&[1, 0])]);
    }

    #[test]
    fn non_simplicial_cone() {
        // cone over a square
        let gens = [
            lv(&[1, 0, 1]),
            lv(&[0, 1, 1]),
            lv(&[-1, 0, 1]),
            lv(&[0, -1, 1]),
        ];
        let c = build_cone(&gens, 3).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.facets().len(), 4);
        assert_eq!(c.generators().len(), 4);
        // 1 zero + 4 rays + 4 two-faces + itself
        assert_eq!(c.face_sets().len(), 10);
    }

    #[test]
    fn rays_of_quadrant_from_halfspaces() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let rays = rays_from_halfspaces(&[b(&[1, 0]), b(&[0, 1])], &[], 2);
        assert_eq!(rays, vec![b(&[0, 1]), b(&[1, 0])]);
        let rays = rays_from_halfspaces(&[b(&[1, 0]), b(&[-1, 0])], &[b(&[0, 1])], 2);
        assert!(rays.is_empty());
    }
}
