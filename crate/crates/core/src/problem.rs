//! JSON input files. Integers are JSON numbers, or decimal strings when they
//! fall outside `±(2^53 - 1)`; both forms are accepted on input.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::eqls::SystemDatum;
use crate::error::{Error, Result};
use crate::fan::{build_fan, Fan, FanOptions, SupportFunction};
use crate::intlin::{Covector, LatticeVector};
use crate::polytope::PointSet;

const SAFE: i64 = (1 << 53) - 1;

/// Arbitrary-precision integer with the number-or-string JSON encoding.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JsonInt(pub BigInt);

impl From<BigInt> for JsonInt {
    fn from(v: BigInt) -> Self {
        JsonInt(v)
    }
}

impl From<i64> for JsonInt {
    fn from(v: i64) -> Self {
        JsonInt(BigInt::from(v))
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.abs() <= BigInt::from(SAFE) {
            let v: i64 = (&self.0).try_into().expect("fits in i64");
            s.serialize_i64(v)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

struct JsonIntVisitor;

impl Visitor<'_> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
        Ok(JsonInt(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
        Ok(JsonInt(v.into()))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<JsonInt, E> {
        Err(E::custom(format!("{v} is not an integer")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
        BigInt::from_str(v.trim())
            .map(JsonInt)
            .map_err(|_| E::custom(format!("{v:?} is not a decimal integer")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(JsonIntVisitor)
    }
}

fn to_big(v: &[JsonInt]) -> Vec<BigInt> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn to_json(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartierEntry {
    /// Index into `maximal_cones`.
    pub cone: usize,
    pub m: Vec<JsonInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemEntry {
    pub support: Vec<Vec<JsonInt>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartier: Option<Vec<CartierEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ray_values: Option<Vec<JsonInt>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub rank: usize,
    pub rays: Vec<Vec<JsonInt>>,
    pub maximal_cones: Vec<Vec<usize>>,
    pub systems: Vec<SystemEntry>,
}

/// A fan with its list of system data.
#[derive(Clone, Debug)]
pub struct Problem {
    pub fan: Fan,
    pub data: Vec<SystemDatum>,
}

fn check_len(n: usize, got: usize) -> Result<()> {
    if got != n {
        return Err(Error::ArityMismatch { expected: n, got });
    }
    Ok(())
}

impl ProblemFile {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_problem(&self, options: FanOptions) -> Result<Problem> {
        let n = self.rank;
        let mut rays = Vec::with_capacity(self.rays.len());
        for r in &self.rays {
            check_len(n, r.len())?;
            rays.push(LatticeVector::new(to_big(r)));
        }
        let fan = build_fan(n, &rays, &self.maximal_cones, options)?;
        let mut data = Vec::with_capacity(self.systems.len());
        for (i, s) in self.systems.iter().enumerate() {
            data.push(self.system(&fan, i, s)?);
        }
        Ok(Problem { fan, data })
    }

    fn system(&self, fan: &Fan, i: usize, s: &SystemEntry) -> Result<SystemDatum> {
        let n = self.rank;
        let mut pts = Vec::with_capacity(s.support.len());
        for p in &s.support {
            check_len(n, p.len())?;
            pts.push(Covector::new(to_big(p)));
        }
        let support = PointSet::new(n, pts)?;
        let psi = match (&s.cartier, &s.ray_values) {
            (Some(_), Some(_)) => {
                return Err(Error::NotCartier {
                    reason: format!("system {i} gives both cartier and ray_values"),
                })
            }
            (None, None) => SupportFunction::zero(fan),
            (None, Some(vals)) => SupportFunction::from_ray_values(fan, &to_big(vals))?,
            (Some(entries), None) => {
                let mut map = BTreeMap::new();
                for e in entries {
                    let rays = self
                        .maximal_cones
                        .get(e.cone)
                        .ok_or_else(|| Error::NotCartier {
                            reason: format!("system {i} refers to missing cone {}", e.cone),
                        })?;
                    let id = fan.find(rays).ok_or_else(|| Error::NotCartier {
                        reason: format!("system {i}: cone {} is not in the fan", e.cone),
                    })?;
                    check_len(n, e.m.len())?;
                    let m = Covector::new(to_big(&e.m));
                    if let Some(prev) = map.insert(id, m.clone()) {
                        if prev != m {
                            return Err(Error::NotCartier {
                                reason: format!("system {i} gives cone {} twice", e.cone),
                            });
                        }
                    }
                }
                SupportFunction::from_cartier(fan, &map)?
            }
        };
        SystemDatum::new(support, psi)
    }

    /// Writes a problem in Cartier form, one entry per maximal cone.
    pub fn from_problem(fan: &Fan, data: &[SystemDatum]) -> Self {
        let maximal_cones: Vec<Vec<usize>> = fan
            .maximal_cones()
            .iter()
            .map(|&id| fan.cones()[id.0].ray_indices().to_vec())
            .collect();
        let systems = data
            .iter()
            .map(|d| SystemEntry {
                support: d
                    .support()
                    .points()
                    .iter()
                    .map(|p| to_json(p.coords()))
                    .collect(),
                cartier: Some(
                    fan.maximal_cones()
                        .iter()
                        .enumerate()
                        .map(|(k, id)| CartierEntry {
                            cone: k,
                            m: to_json(d.psi().cartier_data()[id].coords()),
                        })
                        .collect(),
                ),
                ray_values: None,
            })
            .collect();
        ProblemFile {
            rank: fan.rank(),
            rays: fan.rays().iter().map(|r| to_json(r.coords())).collect(),
            maximal_cones,
            systems,
        }
    }
}

/// Input of the torus-only count: a list of supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KhovanskiiFile {
    pub rank: usize,
    pub supports: Vec<Vec<Vec<JsonInt>>>,
}

impl KhovanskiiFile {
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_point_sets(&self) -> Result<Vec<PointSet>> {
        self.supports
            .iter()
            .map(|s| {
                let mut pts = Vec::with_capacity(s.len());
                for p in s {
                    check_len(self.rank, p.len())?;
                    pts.push(Covector::new(to_big(p)));
                }
                let ps = PointSet::new(self.rank, pts)?;
                if ps.is_empty() {
                    return Err(Error::EmptySupport);
                }
                Ok(ps)
            })
            .collect()
    }

    pub fn from_point_sets(rank: usize, sets: &[PointSet]) -> Self {
        KhovanskiiFile {
            rank,
            supports: sets
                .iter()
                .map(|s| s.points().iter().map(|p| to_json(p.coords())).collect())
                .collect(),
        }
    }
}
