//! Seeded inputs shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toricount::oracle::random::{random_point_set, random_problem};
use toricount::{Fan, PointSet, SystemDatum};

pub fn square_families(seed: u64, n: usize, count: usize, max_points: usize) -> Vec<Vec<PointSet>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| random_point_set(&mut rng, n, max_points, -4, 4))
                .collect()
        })
        .collect()
}

pub fn problems(seed: u64, count: usize) -> Vec<(Fan, Vec<SystemDatum>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_problem(&mut rng)).collect()
}
