//! Equivariant linear systems as combinatorial data `(A, ψ)`: validity,
//! degeneration along orbits, and restriction to an orbit torus.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fan::{ConeId, Fan, SupportFunction};
use crate::intlin::{coordinates_in_sublattice, orthogonal_complement_basis, Covector, IntMatrix};
use crate::polytope::PointSet;

/// The datum `(A, ψ)` of an equivariant linear system: the system is spanned
/// by the characters in `A` as sections of the divisor with support
/// function ψ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SystemDatum {
    support: PointSet,
    psi: SupportFunction,
}

impl SystemDatum {
    pub fn new(support: PointSet, psi: SupportFunction) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(Self { support, psi })
    }

    pub fn support(&self) -> &PointSet {
        &self.support
    }

    pub fn psi(&self) -> &SupportFunction {
        &self.psi
    }

    /// Transports the datum along `v -> g v` on N, given `g^{-1}`.
    pub fn transform(&self, g_inv: &IntMatrix) -> SystemDatum {
        SystemDatum {
            support: self.support.transform(g_inv),
            psi: self.psi.transform(g_inv),
        }
    }
}

/// Restriction of a non-degenerate system to the orbit of `σ`: the
/// characters `(A - χ) ∩ σ^⊥` in coordinates of the canonical `σ^⊥` basis,
/// translated so the smallest point is the origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RestrictedSupport {
    pub points: PointSet,
    pub witness: Covector,
    pub basis: Vec<Covector>,
}

impl fmt::Display for RestrictedSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.points)
    }
}

fn check_rank(d: &SystemDatum, fan: &Fan) -> Result<()> {
    if d.support.rank() != fan.rank() {
        return Err(Error::RankMismatch {
            expected: fan.rank(),
            got: d.support.rank(),
        });
    }
    Ok(())
}

/// Checks `<χ, v> + ψ(v) >= 0` for every ray generator `v` and `χ ∈ A`.
/// The first violation (by maximal cone, generator, then character) is
/// reported as [`Error::InvariantViolation`].
pub fn validate(d: &SystemDatum, fan: &Fan) -> Result<()> {
    if d.support.is_empty() {
        return Err(Error::EmptySupport);
    }
    check_rank(d, fan)?;
    for &sigma in fan.maximal_cones() {
        let m = d.psi.character_on(fan, sigma)?;
        for v in fan.cone(sigma)?.generators() {
            let psi_v = m.pair(v);
            for chi in d.support.points() {
                if (chi.pair(v) + &psi_v).is_negative() {
                    return Err(Error::InvariantViolation {
                        cone: sigma,
                        ray: v.to_string(),
                        character: chi.to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// First character `χ ∈ A` (lexicographically) with `<χ, -> + ψ ≡ 0` on
/// `sigma`, or `None` when the system degenerates along the orbit.
pub fn witness(d: &SystemDatum, fan: &Fan, sigma: ConeId) -> Result<Option<Covector>> {
    check_rank(d, fan)?;
    let cone = fan.cone(sigma)?;
    let m = d.psi.character_on(fan, sigma)?;
    Ok(d.support
        .points()
        .iter()
        .find(|chi| {
            cone.generators()
                .iter()
                .all(|v| (chi.pair(v) + m.pair(v)).is_zero())
        })
        .cloned())
}

/// All characters that work as witnesses on `sigma`.
pub fn witnesses(d: &SystemDatum, fan: &Fan, sigma: ConeId) -> Result<Vec<Covector>> {
    check_rank(d, fan)?;
    let cone = fan.cone(sigma)?;
    let m = d.psi.character_on(fan, sigma)?;
    Ok(d.support
        .points()
        .iter()
        .filter(|chi| {
            cone.generators()
                .iter()
                .all(|v| (chi.pair(v) + m.pair(v)).is_zero())
        })
        .cloned()
        .collect())
}

/// The orbit `O_σ` lies in the base locus iff no character of `A` makes
/// `<χ, -> + ψ` vanish on `σ`.
pub fn degenerates_on(d: &SystemDatum, fan: &Fan, sigma: ConeId) -> Result<bool> {
    Ok(witness(d, fan, sigma)?.is_none())
}

/// Restriction using a specific witness; used to check independence of the
/// choice.
pub fn restrict_with_witness(
    d: &SystemDatum,
    fan: &Fan,
    sigma: ConeId,
    chi: &Covector,
) -> Result<RestrictedSupport> {
    let cone = fan.cone(sigma)?;
    let basis = orthogonal_complement_basis(cone.generators(), fan.rank())?;
    let k = basis.len();
    let mut coords = Vec::new();
    for a in d.support.points() {
        let diff = a - chi;
        if cone.generators().iter().all(|v| diff.pair(v).is_zero()) {
            coords.push(Covector::new(coordinates_in_sublattice(&diff, &basis)?));
        }
    }
    if coords.is_empty() {
        return Err(Error::Internal(format!(
            "restriction to cone {sigma} is empty although {chi} is a witness"
        )));
    }
    let points = PointSet::new(k, coords)?.normalized();
    Ok(RestrictedSupport {
        points,
        witness: chi.clone(),
        basis,
    })
}

/// `A^σ`; fails with [`Error::Degenerate`] if the system degenerates on `σ`.
pub fn restrict_to_orbit(d: &SystemDatum, fan: &Fan, sigma: ConeId) -> Result<RestrictedSupport> {
    let chi = witness(d, fan, sigma)?.ok_or(Error::Degenerate { cone: sigma })?;
    restrict_with_witness(d, fan, sigma, &chi)
}

/// Shifts the datum by the unique character making the smallest element of
/// `A` zero: `A' = A - a_0`, `ψ' = ψ + <a_0, ->`.
pub fn normalize_datum(d: &SystemDatum) -> SystemDatum {
    let a0 = d.support.min_point().expect("nonempty support").clone();
    SystemDatum {
        support: d.support.translate(&-&a0),
        psi: d.psi.shifted(&a0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::{build_fan, FanOptions};
    use crate::intlin::LatticeVector;
    use num_bigint::BigInt;

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::from_i64s(c)
    }

    fn a2() -> Fan {
        build_fan(
            2,
            &[lv(&[1, 0]), lv(&[0, 1])],
            &[vec![0, 1]],
            FanOptions::default(),
        )
        .unwrap()
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

    fn ray_values(f: &Fan, v: &[i64]) -> SupportFunction {
        let vals: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        SupportFunction::from_ray_values(f, &vals).unwrap()
    }

    #[test]
    fn validate_examples() {
        let f = a2();
        let zero = SupportFunction::zero(&f);
        let d = SystemDatum::new(PointSet::from_i64s(2, &[&[0, 0]]), zero.clone()).unwrap();
        assert!(validate(&d, &f).is_ok());
        let d =
            SystemDatum::new(PointSet::from_i64s(2, &[&[1, 0], &[0, 1]]), zero.clone()).unwrap();
        assert!(validate(&d, &f).is_ok());
        let d = SystemDatum::new(PointSet::from_i64s(2, &[&[-1, 0]]), zero.clone()).unwrap();
        assert_eq!(
            validate(&d, &f),
            Err(Error::InvariantViolation {
                cone: f.find(&[0, 1]).unwrap(),
                ray: "(1, 0)".into(),
                character: "(-1, 0)".into(),
            })
        );
        assert_eq!(
            SystemDatum::new(PointSet::new(2, []).unwrap(), zero),
            Err(Error::EmptySupport)
        );
    }

    #[test]
    fn degeneration_examples() {
        let f = p1();
        let d = SystemDatum::new(PointSet::from_i64s(1, &[&[0]]), ray_values(&f, &[1, 1])).unwrap();
        assert!(!degenerates_on(&d, &f, f.zero_cone()).unwrap());
        assert!(degenerates_on(&d, &f, f.find(&[0]).unwrap()).unwrap());
        assert!(degenerates_on(&d, &f, f.find(&[1]).unwrap()).unwrap());

        let f = a2();
        let d = SystemDatum::new(
            PointSet::from_i64s(2, &[&[1, 0], &[0, 1]]),
            SupportFunction::zero(&f),
        )
        .unwrap();
        assert!(!degenerates_on(&d, &f, f.find(&[0]).unwrap()).unwrap());
        assert!(degenerates_on(&d, &f, f.find(&[0, 1]).unwrap()).unwrap());
        assert_eq!(
            restrict_to_orbit(&d, &f, f.find(&[0, 1]).unwrap()),
            Err(Error::Degenerate {
                cone: f.find(&[0, 1]).unwrap()
            })
        );
    }

    #[test]
    fn restriction_examples() {
        let f = a2();
        let d = SystemDatum::new(
            PointSet::from_i64s(2, &[&[1, 0], &[0, 1]]),
            SupportFunction::zero(&f),
        )
        .unwrap();
        let r = restrict_to_orbit(&d, &f, f.zero_cone()).unwrap();
        assert_eq!(r.points, PointSet::from_i64s(2, &[&[0, 0], &[1, -1]]));

        let r = restrict_to_orbit(&d, &f, f.find(&[0]).unwrap()).unwrap();
        assert_eq!(r.witness, Covector::from_i64s(&[0, 1]));
        assert_eq!(r.points, PointSet::from_i64s(1, &[&[0]]));

        let p2 = crate::fan::tests::p2();
        let d = SystemDatum::new(
            PointSet::from_i64s(2, &[&[0, 0], &[1, 0], &[0, 1]]),
            ray_values(&p2, &[0, 0, 1]),
        )
        .unwrap();
        assert!(validate(&d, &p2).is_ok());
        let r = restrict_to_orbit(&d, &p2, p2.find(&[0]).unwrap()).unwrap();
        assert_eq!(r.points, PointSet::from_i64s(1, &[&[0], &[1]]));
    }

    #[test]
    fn normalize_examples() {
        let f = p1();
        let psi = ray_values(&f, &[0, 2]);
        let d = SystemDatum::new(PointSet::from_i64s(1, &[&[0], &[1]]), psi.clone()).unwrap();
        assert_eq!(normalize_datum(&d), d);

        let d = SystemDatum::new(PointSet::from_i64s(1, &[&[1], &[2]]), psi.clone()).unwrap();
        let n = normalize_datum(&d);
        assert_eq!(n.support(), &PointSet::from_i64s(1, &[&[0], &[1]]));
        assert_eq!(n.psi(), &psi.shifted(&Covector::from_i64s(&[1])));
        assert!(validate(&n, &f).is_ok() == validate(&d, &f).is_ok());
    }
}
