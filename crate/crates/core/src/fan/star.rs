use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::{build_cone, build_fan, ConeId, Fan, FanOptions, SupportFunction};
use crate::error::{Error, Result};
use crate::intlin::{
    coordinates_in_sublattice, orthogonal_complement_basis, Covector, LatticeVector,
};

/// The star fan `Σ/τ` in `N / (span τ ∩ N)`.
///
/// The quotient lattice is identified with `Z^(n - dim τ)` through the
/// canonical basis `b_1, ..., b_k` of `τ^⊥ ∩ M`: a vector `v` maps to
/// `(<b_1, v>, ..., <b_k, v>)`. The same basis gives coordinates on the dual
/// side, so characters in `τ^⊥` transport by their coordinates.
#[derive(Clone, Debug)]
pub struct StarFan {
    pub fan: Fan,
    pub tau: ConeId,
    pub projection: Vec<Covector>,
    /// Original cone containing `τ` -> its image in the star fan.
    pub cone_map: BTreeMap<ConeId, ConeId>,
}

impl StarFan {
    pub fn project(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector::new(self.projection.iter().map(|b| b.pair(v)).collect())
    }

    /// `ψ/τ`, defined when ψ vanishes on τ.
    pub fn transport(&self, original: &Fan, psi: &SupportFunction) -> Result<SupportFunction> {
        if !psi.vanishes_on(original, self.tau)? {
            return Err(Error::QuotientUndefined { cone: self.tau });
        }
        let mut data = BTreeMap::new();
        for (&sigma, &image) in &self.cone_map {
            if !original.is_maximal(sigma) {
                continue;
            }
            let m = &psi.cartier_data()[&sigma];
            let coords = coordinates_in_sublattice(m, &self.projection)?;
            data.insert(image, Covector::new(coords));
        }
        SupportFunction::from_cartier(&self.fan, &data)
    }
}

pub fn quotient_star_fan(fan: &Fan, tau: ConeId) -> Result<StarFan> {
    let tcone = fan.cone(tau)?;
    let projection = orthogonal_complement_basis(tcone.generators(), fan.rank())?;
    let k = projection.len();
    let project = |v: &LatticeVector| -> LatticeVector {
        LatticeVector::new(
            projection
                .iter()
                .map(|b| b.pair(v))
                .collect::<Vec<BigInt>>(),
        )
    };

    let star = fan.star(tau)?;
    let image_gens = |sigma: ConeId| -> Result<Vec<LatticeVector>> {
        let c = fan.cone(sigma)?;
        let gens: Vec<LatticeVector> = c.generators().iter().map(project).collect();
        Ok(build_cone(&gens, k)?.generators().to_vec())
    };

    let mut ray_set: BTreeSet<LatticeVector> = BTreeSet::new();
    let mut maximal_images: Vec<Vec<LatticeVector>> = Vec::new();
    for &sigma in &star {
        if fan.is_maximal(sigma) {
            let g = image_gens(sigma)?;
            ray_set.extend(g.iter().cloned());
            maximal_images.push(g);
        }
    }
    let rays: Vec<LatticeVector> = ray_set.into_iter().collect();
    let index_of = |v: &LatticeVector| -> Result<usize> {
        rays.binary_search(v)
            .map_err(|_| Error::Internal(format!("projected ray {v} missing from star fan")))
    };
    let maximal: Vec<Vec<usize>> = maximal_images
        .iter()
        .map(|g| g.iter().map(index_of).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let qfan = build_fan(k, &rays, &maximal, FanOptions { validate: false })?;

    let mut cone_map = BTreeMap::new();
    for &sigma in &star {
        let idx: Vec<usize> = image_gens(sigma)?
            .iter()
            .map(index_of)
            .collect::<Result<_>>()?;
        let image = qfan
            .find(&idx)
            .ok_or_else(|| Error::Internal(format!("image of cone {sigma} is not in Σ/τ")))?;
        cone_map.insert(sigma, image);
    }
    Ok(StarFan {
        fan: qfan,
        tau,
        projection,
        cone_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    #[test]
    fn zero_cone_quotient_is_identity() {
        let p2 = crate::fan::tests::p2();
        let s = quotient_star_fan(&p2, p2.zero_cone()).unwrap();
        assert_eq!(s.fan.rank(), 2);
        assert_eq!(s.fan.cones().len(), 7);
        assert_eq!(s.project(&lv(&[3, -4])), lv(&[3, -4]));
        assert_eq!(s.cone_map.len(), 7);
    }

    #[test]
    fn p2_star_of_ray_is_p1() {
        let p2 = crate::fan::tests::p2();
        let ray = p2.find(&[0]).unwrap();
        let s = quotient_star_fan(&p2, ray).unwrap();
        assert_eq!(s.fan.rank(), 1);
        assert_eq!(s.fan.cones().len(), 3);
        let mut rays = s.fan.rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![lv(&[-1]), lv(&[1])]);
        assert_eq!(s.cone_map.len(), 3);
    }

    #[test]
    fn p1_star_of_ray_is_a_point() {
        let p1 = build_fan(
            1,
            &[lv(&[1]), lv(&[-1])],
            &[vec![0], vec![1]],
            FanOptions::default(),
        )
        .unwrap();
        let s = quotient_star_fan(&p1, p1.find(&[0]).unwrap()).unwrap();
        assert_eq!(s.fan.rank(), 0);
        assert_eq!(s.fan.cones().len(), 1);
    }

    #[test]
    fn transport_support_function() {
        let p2 = crate::fan::tests::p2();
        let vals: Vec<BigInt> = [0, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        let psi = SupportFunction::from_ray_values(&p2, &vals).unwrap();
        let ray0 = p2.find(&[0]).unwrap();
        let s = quotient_star_fan(&p2, ray0).unwrap();
        let q = s.transport(&p2, &psi).unwrap();
        // O(1) restricted to the boundary line is O(1) on P^1: values 0 and 1
        let mut values: Vec<BigInt> = (0..s.fan.rays().len())
            .map(|i| q.ray_value(&s.fan, i).unwrap())
            .collect();
        values.sort();
        assert_eq!(values, vec![BigInt::from(0), BigInt::from(1)]);

        let ray2 = p2.find(&[2]).unwrap();
        let s2 = quotient_star_fan(&p2, ray2).unwrap();
        assert_eq!(
            s2.transport(&p2, &psi).unwrap_err(),
            Error::QuotientUndefined { cone: ray2 }
        );
    }
}
