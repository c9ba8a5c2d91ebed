//! Exact component counts for general members of equivariant linear systems
//! on toric varieties.
//!
//! The pipeline is bottom-up: integer linear algebra ([`intlin`]), lattice
//! polytopes and mixed volumes ([`polytope`]), fans and support functions
//! ([`fan`]), system data ([`eqls`]), the torus count ([`khovanskii`]) and the
//! orbit-by-orbit total ([`counting`]). [`oracle`] holds independent
//! brute-force checks.

pub mod counting;
pub mod eqls;
pub mod error;
pub mod fan;
pub mod fixtures;
pub mod intlin;
pub mod khovanskii;
pub mod oracle;
pub mod polytope;
pub mod problem;

pub use counting::{audit_report, count_components, ComponentReport, OrbitRecord};
pub use eqls::{RestrictedSupport, SystemDatum};
pub use error::{Error, Result};
pub use fan::{build_fan, Cone, ConeId, Fan, FanOptions, SupportFunction};
pub use intlin::{Covector, IntMatrix, LatticeVector};
pub use khovanskii::{k_torus, KCase, KResult};
pub use polytope::{lattice_volume, mixed_volume, LatticeVolume, PointSet};
pub use problem::{KhovanskiiFile, Problem, ProblemFile};

pub use num_bigint::BigInt;
