use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use plcomb::{commutation_classes, enumerate_reduced_words, find_move_path};
use plcomb_bench::standard_pair;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for rank in [3, 4] {
        group.bench_with_input(BenchmarkId::new("words", rank), &rank, |b, &n| {
            b.iter(|| enumerate_reduced_words(black_box(n)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("classes", rank), &rank, |b, &n| {
            b.iter(|| commutation_classes(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn move_paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("move_path");
    for rank in [4, 8, 12] {
        let (j, jp) = standard_pair(rank);
        group.bench_with_input(BenchmarkId::from_parameter(rank), &(j, jp), |b, (j, jp)| {
            b.iter(|| find_move_path(black_box(j), black_box(jp)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, move_paths);
criterion_main!(benches);
