use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use toricount::oracle::{bernstein_count_with_retries, RandomSystemSpec};
use toricount::{count_components, fixtures, mixed_volume};
use toricount_bench::{problems, square_families};

fn mixed_volumes(c: &mut Criterion) {
    let mut g = c.benchmark_group("mixed_volume");
    for n in 1..=3 {
        let fams = square_families(11, n, 20, 6);
        g.bench_with_input(BenchmarkId::new("polarization", n), &fams, |b, fams| {
            b.iter(|| {
                for f in fams {
                    black_box(mixed_volume(f).unwrap());
                }
            })
        });
    }
    let small = square_families(11, 3, 5, 4);
    g.bench_function("interpolation/3", |b| {
        b.iter(|| {
            for f in &small {
                black_box(toricount::oracle::mixed_volume_oracle(f).unwrap());
            }
        })
    });
    g.finish();
}

fn counting(c: &mut Criterion) {
    let fx = fixtures::all();
    c.bench_function("count/fixtures", |b| {
        b.iter(|| {
            for f in &fx {
                black_box(count_components(&f.fan, &f.data).unwrap());
            }
        })
    });
    let random = problems(5, 30);
    c.bench_function("count/random30", |b| {
        b.iter(|| {
            for (f, d) in &random {
                black_box(count_components(f, d).unwrap());
            }
        })
    });
}

fn resultant(c: &mut Criterion) {
    let conics = fixtures::torus_conics();
    let support = conics.data[0].support().clone();
    let spec = RandomSystemSpec {
        supports: [support.clone(), support],
        coefficient_bound: 1000,
        seed: 3,
    };
    c.bench_function("bernstein/conics", |b| {
        b.iter(|| black_box(bernstein_count_with_retries(&spec, 10).unwrap()))
    });
}

criterion_group!(benches, mixed_volumes, counting, resultant);
criterion_main!(benches);
