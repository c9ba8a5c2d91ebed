//! Seeded random inputs for the property suites.

use std::f64::consts::PI;

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::Rng;

use crate::eqls::SystemDatum;
use crate::fan::{build_fan, global_section_characters, Fan, FanOptions, SupportFunction};
use crate::intlin::{Covector, IntMatrix, LatticeVector};
use crate::polytope::PointSet;

pub fn random_point_set<R: Rng>(
    rng: &mut R,
    rank: usize,
    max_points: usize,
    lo: i64,
    hi: i64,
) -> PointSet {
    let k = rng.random_range(1..=max_points);
    let pts: Vec<Covector> = (0..k)
        .map(|_| {
            Covector::new(
                (0..rank)
                    .map(|_| BigInt::from(rng.random_range(lo..=hi)))
                    .collect(),
            )
        })
        .collect();
    PointSet::new(rank, pts).expect("consistent rank")
}

/// A random element of GL_n(Z) with its inverse.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> (IntMatrix, IntMatrix) {
    let mut g = IntMatrix::identity(n);
    if n == 0 {
        return (g.clone(), g);
    }
    for _ in 0..3 * n {
        let mut e = IntMatrix::identity(n);
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i != j {
            let mut rows = e.to_rows();
            rows[i][j] = BigInt::from(rng.random_range(-2..=2));
            e = IntMatrix::from_rows(rows, n);
        } else if rng.random_bool(0.5) {
            let mut rows = e.to_rows();
            rows[i][i] = BigInt::from(-1);
            e = IntMatrix::from_rows(rows, n);
        }
        g = e.mul(&g);
    }
    let perm = sample(rng, n, n).into_vec();
    let mut rows = vec![vec![BigInt::from(0); n]; n];
    for (i, &p) in perm.iter().enumerate() {
        rows[i][p] = BigInt::from(1);
    }
    g = IntMatrix::from_rows(rows, n).mul(&g);
    let inv = g.inverse_unimodular().expect("unimodular");
    (g, inv)
}

fn primitive_vec<R: Rng>(rng: &mut R, n: usize, r: i64) -> LatticeVector {
    loop {
        let v = LatticeVector::new(
            (0..n)
                .map(|_| BigInt::from(rng.random_range(-r..=r)))
                .collect(),
        );
        if !v.is_zero() {
            return v.primitive();
        }
    }
}

fn angle(v: &LatticeVector) -> f64 {
    let x: f64 = i64::try_from(&v.coords()[0]).unwrap() as f64;
    let y: f64 = i64::try_from(&v.coords()[1]).unwrap() as f64;
    y.atan2(x)
}

/// Rays sorted by angle; consecutive pairs spanning less than a half-turn
/// become 2-cones, leftover rays stand alone.
fn random_plane_fan<R: Rng>(rng: &mut R) -> (Vec<LatticeVector>, Vec<Vec<usize>>) {
    let k = rng.random_range(1..=6);
    let mut rays: Vec<LatticeVector> = Vec::new();
    while rays.len() < k {
        let v = primitive_vec(rng, 2, 3);
        if !rays.contains(&v) {
            rays.push(v);
        }
    }
    rays.sort_by(|a, b| angle(a).partial_cmp(&angle(b)).unwrap());
    let mut cones = Vec::new();
    let mut used = vec![false; k];
    if k >= 2 {
        for i in 0..k {
            let j = (i + 1) % k;
            if k == 2 && i == 1 {
                break;
            }
            let mut gap = angle(&rays[j]) - angle(&rays[i]);
            if gap <= 0.0 {
                gap += 2.0 * PI;
            }
            if gap < PI - 1e-9 && rng.random_bool(0.85) {
                cones.push(vec![i, j]);
                used[i] = true;
                used[j] = true;
            }
        }
    }
    for (i, u) in used.iter().enumerate() {
        if !u {
            cones.push(vec![i]);
        }
    }
    (rays, cones)
}

/// A random fan of rank 1, 2 or 3 (the last as a plane fan times P^1).
pub fn random_fan<R: Rng>(rng: &mut R) -> Fan {
    let rank = rng.random_range(1..=3);
    let (rays, cones) = match rank {
        1 => {
            let all = [
                LatticeVector::from_i64s(&[1]),
                LatticeVector::from_i64s(&[-1]),
            ];
            match rng.random_range(0..4) {
                0 => (vec![], vec![vec![]]),
                1 => (vec![all[0].clone()], vec![vec![0]]),
                2 => (vec![all[1].clone()], vec![vec![0]]),
                _ => (all.to_vec(), vec![vec![0], vec![1]]),
            }
        }
        2 => random_plane_fan(rng),
        _ => {
            let (r2, c2) = random_plane_fan(rng);
            let k = r2.len();
            let mut rays: Vec<LatticeVector> = r2
                .iter()
                .map(|v| {
                    LatticeVector::new(vec![v.coords()[0].clone(), v.coords()[1].clone(), 0.into()])
                })
                .collect();
            rays.push(LatticeVector::from_i64s(&[0, 0, 1]));
            rays.push(LatticeVector::from_i64s(&[0, 0, -1]));
            let mut cones = Vec::new();
            for c in &c2 {
                for top in [k, k + 1] {
                    let mut c = c.clone();
                    c.push(top);
                    cones.push(c);
                }
            }
            (rays, cones)
        }
    };
    build_fan(rank, &rays, &cones, FanOptions::default()).expect("generated fan is valid")
}

/// A valid datum: random effective divisor, random nonempty subset of its
/// sections (within a box when the fan is not complete).
pub fn random_datum<R: Rng>(rng: &mut R, fan: &Fan) -> SystemDatum {
    let mut psi = SupportFunction::zero(fan);
    for _ in 0..10 {
        let vals: Vec<BigInt> = fan
            .rays()
            .iter()
            .map(|_| BigInt::from(rng.random_range(0..=2)))
            .collect();
        if let Ok(p) = SupportFunction::from_ray_values(fan, &vals) {
            psi = p;
            break;
        }
    }
    let sections = global_section_characters(&psi, fan, 2)
        .expect("sections")
        .characters;
    let k = rng.random_range(1..=sections.len().min(5));
    let chosen = sample(rng, sections.len(), k)
        .into_iter()
        .map(|i| sections[i].clone());
    let support = PointSet::new(fan.rank(), chosen).expect("rank");
    SystemDatum::new(support, psi).expect("nonempty")
}

pub fn random_problem<R: Rng>(rng: &mut R) -> (Fan, Vec<SystemDatum>) {
    let fan = random_fan(rng);
    let m = rng.random_range(1..=3);
    let data = (0..m).map(|_| random_datum(rng, &fan)).collect();
    (fan, data)
}
