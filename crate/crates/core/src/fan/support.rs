use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{combinations, rays_from_halfspaces, ConeId, Fan};
use crate::error::{Error, Result};
use crate::intlin::{
    bareiss_determinant, rank, solve_integral, Covector, IntMatrix, LatticeVector,
};

/// A function on `|Σ|` that is linear on each cone, stored as Cartier data:
/// one character `m_σ` per maximal cone with `ψ = <m_σ, ->` on `σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportFunction {
    cartier: BTreeMap<ConeId, Covector>,
}

impl SupportFunction {
    /// The zero function.
    pub fn zero(fan: &Fan) -> Self {
        Self {
            cartier: fan
                .maximal_cones()
                .iter()
                .map(|&m| (m, Covector::zero(fan.rank())))
                .collect(),
        }
    }

    /// Builds ψ from per-cone characters. Maximal cones without an entry get
    /// `m = 0`. Entries for non-maximal cones must agree with the maximal
    /// cones containing them and are then dropped.
    pub fn from_cartier(fan: &Fan, data: &BTreeMap<ConeId, Covector>) -> Result<Self> {
        let mut cartier = Self::zero(fan).cartier;
        for (&id, m) in data {
            fan.cone(id)?;
            if m.rank() != fan.rank() {
                return Err(Error::RankMismatch {
                    expected: fan.rank(),
                    got: m.rank(),
                });
            }
            if fan.is_maximal(id) {
                cartier.insert(id, m.clone());
            }
        }
        let psi = Self { cartier };
        psi.check_compatible(fan)?;
        for (&id, m) in data {
            if fan.is_maximal(id) {
                continue;
            }
            let big = fan.maximal_containing(id)?;
            for v in fan.cone(id)?.generators() {
                if m.pair(v) != psi.cartier[&big].pair(v) {
                    return Err(Error::NotCartier {
                        reason: format!("data for cone {id} disagrees with cone {big} at ray {v}"),
                    });
                }
            }
        }
        Ok(psi)
    }

    /// Builds ψ from its values at the rays (parallel to `fan.rays()`).
    /// Fails with `NotCartier` when some maximal cone admits no integral
    /// character interpolating the values.
    pub fn from_ray_values(fan: &Fan, values: &[BigInt]) -> Result<Self> {
        if values.len() != fan.rays().len() {
            return Err(Error::NotCartier {
                reason: format!("{} ray values for {} rays", values.len(), fan.rays().len()),
            });
        }
        let mut cartier = BTreeMap::new();
        for &m in fan.maximal_cones() {
            let cone = fan.cone(m)?;
            let rows: Vec<Vec<BigInt>> = cone
                .generators()
                .iter()
                .map(|g| g.coords().to_vec())
                .collect();
            let rhs: Vec<BigInt> = cone
                .ray_indices()
                .iter()
                .map(|&i| values[i].clone())
                .collect();
            let sol = solve_integral(&rows, &rhs, fan.rank()).ok_or_else(|| Error::NotCartier {
                reason: format!(
                    "no integral character on cone {m} (rays {:?}) takes values {:?}",
                    cone.ray_indices(),
                    rhs.iter().map(ToString::to_string).collect::<Vec<_>>()
                ),
            })?;
            cartier.insert(m, Covector::new(sol));
        }
        Ok(Self { cartier })
    }

    fn check_compatible(&self, fan: &Fan) -> Result<()> {
        let maximal = fan.maximal_cones();
        for (i, &a) in maximal.iter().enumerate() {
            for &b in &maximal[i + 1..] {
                let ca = fan.cone(a)?;
                let cb = fan.cone(b)?;
                for (k, &r) in ca.ray_indices().iter().enumerate() {
                    if !cb.ray_indices().contains(&r) {
                        continue;
                    }
                    let v = &ca.generators()[k];
                    if self.cartier[&a].pair(v) != self.cartier[&b].pair(v) {
                        return Err(Error::NotCartier {
                            reason: format!("cones {a} and {b} disagree at shared ray {r} = {v}"),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn cartier_data(&self) -> &BTreeMap<ConeId, Covector> {
        &self.cartier
    }

    /// A character representing ψ on `sigma` (taken from the first maximal
    /// cone containing it).
    pub fn character_on(&self, fan: &Fan, sigma: ConeId) -> Result<&Covector> {
        let m = fan.maximal_containing(sigma)?;
        self.cartier
            .get(&m)
            .ok_or_else(|| Error::Internal(format!("no Cartier data for cone {m}")))
    }

    /// ψ at the `i`-th ray of the fan.
    pub fn ray_value(&self, fan: &Fan, ray: usize) -> Result<BigInt> {
        let id = fan
            .find(&[ray])
            .ok_or_else(|| Error::Internal(format!("ray {ray} is not a cone")))?;
        Ok(self.character_on(fan, id)?.pair(&fan.rays()[ray]))
    }

    /// `ψ + <χ, ->`.
    pub fn shifted(&self, chi: &Covector) -> SupportFunction {
        Self {
            cartier: self.cartier.iter().map(|(&k, m)| (k, m + chi)).collect(),
        }
    }

    /// Transports ψ along a fan automorphism `v -> g v`; `g_inv` is `g^{-1}`
    /// and characters map as `m -> m g^{-1}`.
    pub fn transform(&self, g_inv: &IntMatrix) -> SupportFunction {
        let gt = g_inv.transpose();
        Self {
            cartier: self
                .cartier
                .iter()
                .map(|(&k, m)| (k, Covector::new(gt.apply(m.coords()))))
                .collect(),
        }
    }

    /// True iff ψ vanishes identically on `sigma`.
    pub fn vanishes_on(&self, fan: &Fan, sigma: ConeId) -> Result<bool> {
        let m = self.character_on(fan, sigma)?;
        Ok(fan
            .cone(sigma)?
            .generators()
            .iter()
            .all(|v| m.pair(v).is_zero()))
    }
}

/// `ψ(v)` for `v ∈ |Σ|`.
pub fn evaluate_support(psi: &SupportFunction, fan: &Fan, v: &LatticeVector) -> Result<BigInt> {
    let sigma = fan.locate(v).ok_or_else(|| Error::OutsideSupport {
        vector: v.to_string(),
    })?;
    Ok(psi.cartier[&sigma].pair(v))
}

/// ψ is effective iff it is nonnegative on every ray generator.
pub fn is_effective(psi: &SupportFunction, fan: &Fan) -> Result<bool> {
    for &m in fan.maximal_cones() {
        let c = fan.cone(m)?;
        if c.generators()
            .iter()
            .any(|v| psi.cartier[&m].pair(v).is_negative())
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Characters `χ` with `<χ, ->|_{|Σ|} + ψ >= 0`, i.e. the global sections
/// of the divisor with support function ψ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalSections {
    /// `(v_ρ, ψ(v_ρ))`, one per ray: the constraint `<χ, v_ρ> + ψ(v_ρ) >= 0`.
    pub inequalities: Vec<(LatticeVector, BigInt)>,
    pub bounded: bool,
    /// All solutions when bounded; otherwise those with every coordinate in
    /// `[-bound, bound]`.
    pub characters: Vec<Covector>,
}

pub fn global_section_characters(
    psi: &SupportFunction,
    fan: &Fan,
    bound: u64,
) -> Result<GlobalSections> {
    let n = fan.rank();
    let inequalities: Vec<(LatticeVector, BigInt)> = (0..fan.rays().len())
        .map(|i| Ok((fan.rays()[i].clone(), psi.ray_value(fan, i)?)))
        .collect::<Result<_>>()?;
    let ray_rows: Vec<Vec<BigInt>> = inequalities
        .iter()
        .map(|(v, _)| v.coords().to_vec())
        .collect();
    // recession cone {χ : <χ, v_ρ> >= 0} must be {0}
    let bounded = rank(&ray_rows) == n && rays_from_halfspaces(&ray_rows, &[], n).is_empty();

    let satisfies = |chi: &[BigInt]| {
        inequalities
            .iter()
            .all(|(v, c)| !(crate::intlin::dot(chi, v.coords()) + c).is_negative())
    };

    let (lo, hi) = if bounded {
        vertex_box(&inequalities, n)
    } else {
        let b = BigInt::from(bound);
        (vec![-b.clone(); n], vec![b; n])
    };
    let mut characters = Vec::new();
    let mut cur = lo.clone();
    if lo.iter().zip(&hi).all(|(l, h)| l <= h) {
        loop {
            if satisfies(&cur) {
                characters.push(Covector::new(cur.clone()));
            }
            // odometer, last coordinate fastest
            let mut k = n;
            loop {
                if k == 0 {
                    return Ok(GlobalSections {
                        inequalities,
                        bounded,
                        characters,
                    });
                }
                k -= 1;
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lo[k].clone();
            }
        }
    }
    Ok(GlobalSections {
        inequalities,
        bounded,
        characters,
    })
}

/// Integer bounding box of the (bounded, nonempty or empty) polytope
/// `{χ : <χ, v> >= -c}`, from its rational vertices.
fn vertex_box(inequalities: &[(LatticeVector, BigInt)], n: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut lo: Option<Vec<BigRational>> = None;
    let mut hi: Option<Vec<BigRational>> = None;
    for subset in combinations(inequalities.len(), n) {
        let a: Vec<Vec<BigInt>> = subset
            .iter()
            .map(|&i| inequalities[i].0.coords().to_vec())
            .collect();
        let det = bareiss_determinant(a.clone());
        if det.is_zero() {
            continue;
        }
        let b: Vec<BigInt> = subset.iter().map(|&i| -&inequalities[i].1).collect();
        // Cramer's rule
        let x: Vec<BigRational> = (0..n)
            .map(|j| {
                let aj: Vec<Vec<BigInt>> = a
                    .iter()
                    .zip(&b)
                    .map(|(row, bi)| {
                        let mut r = row.clone();
                        r[j] = bi.clone();
                        r
                    })
                    .collect();
                BigRational::new(bareiss_determinant(aj), det.clone())
            })
            .collect();
        let feasible = inequalities.iter().all(|(v, c)| {
            let s: BigRational = x
                .iter()
                .zip(v.coords())
                .map(|(xi, vi)| xi * BigRational::from_integer(vi.clone()))
                .sum();
            !(s + BigRational::from_integer(c.clone())).is_negative()
        });
        if !feasible {
            continue;
        }
        match (&mut lo, &mut hi) {
            (Some(l), Some(h)) => {
                for j in 0..n {
                    if x[j] < l[j] {
                        l[j] = x[j].clone();
                    }
                    if x[j] > h[j] {
                        h[j] = x[j].clone();
                    }
                }
            }
            _ => {
                lo = Some(x.clone());
                hi = Some(x);
            }
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => (
            l.iter().map(|r| r.numer().div_ceil(r.denom())).collect(),
            h.iter().map(|r| r.numer().div_floor(r.denom())).collect(),
        ),
        // empty polytope: an empty box
        _ => (vec![BigInt::from(1); n], vec![BigInt::from(0); n]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{build_fan, FanOptions};

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    fn p1() -> Fan {
        build_fan(
            1,
            &[lv(&[1]), lv(&[-1])],
            &[vec![0], vec![1]],
            FanOptions::default(),
        )
        .unwrap()
    }

    fn p1_psi(a: i64, b: i64) -> SupportFunction {
        let f = p1();
        let data = BTreeMap::from([
            (f.find(&[0]).unwrap(), Covector::from_i64s(&[a])),
            (f.find(&[1]).unwrap(), Covector::from_i64s(&[b])),
        ]);
        SupportFunction::from_cartier(&f, &data).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let f = p1();
        let zero = SupportFunction::zero(&f);
        assert_eq!(
            evaluate_support(&zero, &f, &lv(&[5])).unwrap(),
            BigInt::from(0)
        );
        let psi = p1_psi(1, -1);
        assert_eq!(
            evaluate_support(&psi, &f, &lv(&[1])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            evaluate_support(&psi, &f, &lv(&[-1])).unwrap(),
            BigInt::from(1)
        );
        let a2 = build_fan(
            2,
            &[lv(&[1, 0]), lv(&[0, 1])],
            &[vec![0, 1]],
            FanOptions::default(),
        )
        .unwrap();
        assert!(matches!(
            evaluate_support(&SupportFunction::zero(&a2), &a2, &lv(&[-1, 0])),
            Err(Error::OutsideSupport { .. })
        ));
    }

    #[test]
    fn effectivity_examples() {
        let f = p1();
        assert!(is_effective(&SupportFunction::zero(&f), &f).unwrap());
        assert!(is_effective(&p1_psi(1, -1), &f).unwrap());
        assert!(!is_effective(&p1_psi(-1, 1), &f).unwrap());
    }

    #[test]
    fn global_sections_examples() {
        let f = p1();
        let gs = global_section_characters(&p1_psi(1, -1), &f, 10).unwrap();
        assert!(gs.bounded);
        assert_eq!(
            gs.characters,
            vec![
                Covector::from_i64s(&[-1]),
                Covector::from_i64s(&[0]),
                Covector::from_i64s(&[1])
            ]
        );

        let p2 = crate::fan::tests::p2();
        let gs = global_section_characters(&SupportFunction::zero(&p2), &p2, 10).unwrap();
        assert!(gs.bounded);
        assert_eq!(gs.characters, vec![Covector::zero(2)]);

        let torus = build_fan(2, &[], &[vec![]], FanOptions::default()).unwrap();
        let gs = global_section_characters(&SupportFunction::zero(&torus), &torus, 1).unwrap();
        assert!(!gs.bounded);
        assert!(gs.inequalities.is_empty());
        assert_eq!(gs.characters.len(), 9);
    }

    #[test]
    fn ray_values_convenience() {
        let p2 = crate::fan::tests::p2();
        let vals: Vec<BigInt> = [0, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        let psi = SupportFunction::from_ray_values(&p2, &vals).unwrap();
        for (i, v) in vals.iter().enumerate() {
            assert_eq!(&psi.ray_value(&p2, i).unwrap(), v);
        }
        // O(1) on P^2 has the three sections 1, x, y
        let gs = global_section_characters(&psi, &p2, 5).unwrap();
        assert_eq!(gs.characters.len(), 3);
    }

    #[test]
    fn non_cartier_ray_values() {
        // weighted projective plane P(1,1,2): rays e1, e2, -e1-2e2
        let f = build_fan(
            2,
            &[lv(&[1, 0]), lv(&[0, 1]), lv(&[-1, -2])],
            &[vec![0, 1], vec![1, 2], vec![0, 2]],
            FanOptions::default(),
        )
        .unwrap();
        let vals: Vec<BigInt> = [0, 0, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert!(matches!(
            SupportFunction::from_ray_values(&f, &vals),
            Err(Error::NotCartier { .. })
        ));
    }

    #[test]
    fn incompatible_cartier_data() {
        let p2 = crate::fan::tests::p2();
        let data = BTreeMap::from([(p2.find(&[0, 1]).unwrap(), Covector::from_i64s(&[1, 0]))]);
        assert!(matches!(
            SupportFunction::from_cartier(&p2, &data),
            Err(Error::NotCartier { .. })
        ));
    }
}
