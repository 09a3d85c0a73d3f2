use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dombound::{
    compute_b, expand_monomial, partitions_of, verify_cover_steps, verify_dominance,
    verify_weight_bound, Execution,
};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn weight_bound_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_weight_bound");
    group.sample_size(10);
    for n in [7u32, 9] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| verify_weight_bound(black_box(n), n, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn dominance_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_dominance");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 7), |b| {
            b.iter(|| verify_dominance(black_box(7), 7, exec).unwrap())
        });
    }
    group.finish();
}

fn cover_step_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_cover_steps");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 8), |b| {
            b.iter(|| verify_cover_steps(black_box(8), 8, exec).unwrap())
        });
    }
    group.finish();
}

fn kernels(c: &mut Criterion) {
    let par9 = partitions_of(9);
    c.bench_function("compute_b/par9", |b| {
        b.iter(|| {
            for lambda in &par9 {
                black_box(compute_b(lambda).unwrap());
            }
        })
    });
    let ones: dombound::Partition = "1,1,1,1,1,1,1,1".parse().unwrap();
    c.bench_function("expand_monomial/1^8", |b| {
        b.iter(|| expand_monomial(black_box(&ones), 8).unwrap())
    });
}

criterion_group!(benches, weight_bound_sweep, dominance_sweep, cover_step_sweep, kernels);
criterion_main!(benches);
